import pytest
from hypothesis import given, settings, strategies as st

from flowgraphs.data_flow import oracle_reaching_defs, set_data_flow, traverse_reaching_defs
from flowgraphs.frontend import ast
from flowgraphs.generator import generate_random_method
from flowgraphs.model import FlowGraph, FlowInstr, VarDef, link_cf
from flowgraphs.pipeline import PipelineOptions, run_source, transform_method

from helpers import asserted_edges, method_src, txt_edges


def df(source, strategy="traversal"):
    graphs, _ = run_source(source, PipelineOptions(strategy=strategy))
    return graphs[0]


def edges(graph):
    return txt_edges(graph.df_edges())


def test_f_example():
    g = df("class C { int f(int a){ int b = a + 1; return b; } }")
    assert edges(g) == {("f()", "int b = a + 1"), ("int b = a + 1", "return b")}


def test_kill():
    g = df(method_src("int x; x = 1; x = 2; return x;", params=""))
    assert edges(g) == {("x = 2", "return x")}


def test_loop_example():
    g = df(method_src("a = 0; while (a < 3) { a = a + 1; } return a;"))
    expected = {(d, u) for d in ("a = 0", "a = a + 1") for u in ("a < 3", "a = a + 1", "return a")}
    assert edges(g) == expected


def test_use_before_kill_in_same_instruction():
    g = df(method_src("a++; return a;"))
    assert edges(g) == {("f()", "a++"), ("a++", "return a")}


def test_no_defs_no_edges():
    g = df("class C { void m() { g(1); h(); } }")
    assert g.df_edges() == []


def test_self_loop_oracle():
    g = FlowGraph("m")
    v = VarDef("v")
    d = g.add(FlowInstr("simple", "v = v + 1"))
    d.defs.append(v)
    d.uses.append(v)
    link_cf(g.method, d)
    link_cf(d, d)
    link_cf(d, g.exit)
    assert (d, d, "v") in oracle_reaching_defs(g)
    assert traverse_reaching_defs(g) == oracle_reaching_defs(g)


def test_oracle_on_graph_without_defs():
    g = FlowGraph("m")
    link_cf(g.method, g.exit)
    assert oracle_reaching_defs(g) == set()


def test_unknown_strategy():
    g = FlowGraph("m")
    with pytest.raises(ValueError):
        set_data_flow(g, "magic")


def test_data_flow_needs_control_flow():
    with pytest.raises(ValueError):
        PipelineOptions(control_flow=False, data_flow=True)


def test_parameters_flow_from_method_node():
    g = df("class C { int f(int a, int b) { return a * b; } }")
    assert edges(g) == {("f()", "return a * b")}


def test_labels_of_dot_edges_name_the_variables():
    g = df("class C { int f(int a, int b) { return a * b; } }")
    ((_, target),) = g.df_edges()
    assert sorted(v.name for v in target.uses) == ["a", "b"]


def triples(graph):
    return {(d.id, u.id, v) for d, u, v in traverse_reaching_defs(graph)}


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=500, max_value=10 ** 7), st.integers(min_value=1, max_value=30))
def test_traversal_matches_oracle_beyond_acceptance_seeds(seed, size):
    method = generate_random_method(seed, max_statements=size, max_vars=5)
    g = transform_method(method, "R", PipelineOptions(data_flow=False))
    assert traverse_reaching_defs(g) == oracle_reaching_defs(g)


@pytest.mark.parametrize("strategy", ["traversal", "fixpoint"])
def test_corpus_df_edge_lists(corpus, strategy):
    for program in corpus:
        if program.is_edge_list:
            g = df(program.source, strategy)
            assert edges(g) == asserted_edges(program.read("assertions.df"), "dfNext"), program.name


def test_strategies_agree_on_edges_and_order():
    method = generate_random_method(7, max_statements=25)
    a = transform_method(method, "R", PipelineOptions(strategy="traversal"))
    b = transform_method(method, "R", PipelineOptions(strategy="fixpoint"))
    assert [(x.id, y.id) for x, y in a.df_edges()] == [(x.id, y.id) for x, y in b.df_edges()]


def test_dead_code_definitions_still_reach_forward():
    g = df(method_src("return a; a = 5; g(a);", ret="void"))
    assert ("a = 5", "g(a)") in edges(g)
    assert ("f()", "g(a)") not in edges(g)


def test_random_method_uses_declared_names():
    method = generate_random_method(3)
    declared = {p.name for p in method.params} | {n.name for n in ast.walk(method.body) if isinstance(n, ast.LocalVarDecl)}
    used = {n.name for n in ast.walk(method.body) if isinstance(n, ast.VarRef)}
    assert used <= declared
