import pytest

from flowgraphs.control_flow import EmptyInfiniteLoop
from flowgraphs.pipeline import PipelineOptions, run_source
from flowgraphs.validator import parse_assertions

from helpers import asserted_edges, method_src, txt_edges

CF_ONLY = PipelineOptions(data_flow=False)


def cf(source):
    graphs, _ = run_source(source, CF_ONLY)
    return graphs[0]


def successors(graph, txt):
    (instr,) = [i for i in graph.instrs if i.txt == txt]
    return [s.txt for s in instr.cf_next]


def test_empty_method():
    assert txt_edges(cf("class C { void m() { } }").cf_edges()) == {("m()", "Exit")}


def test_continue_goes_to_loop_test():
    g = cf(method_src("while (a > 0) { continue; }", ret="void"))
    assert successors(g, "continue") == ["a > 0"]


def test_f_example():
    g = cf("class C { int f(int a){ int b = a + 1; return b; } }")
    assert txt_edges(g.cf_edges()) == {("f()", "int b = a + 1"), ("int b = a + 1", "return b"), ("return b", "Exit")}


def test_break_example_branch_order():
    g = cf(method_src("int x; while (a > 0) { break; } x = 1;", ret="void"))
    assert successors(g, "break") == ["x = 1"]
    assert successors(g, "a > 0") == ["break", "x = 1"]


def test_if_branch_order():
    g = cf(method_src("if (a > 0) { a = 1; } else { a = 2; } g(a);", ret="void"))
    assert successors(g, "a > 0") == ["a = 1", "a = 2"]


def test_for_continue_goes_to_update():
    g = cf(method_src("for (int i = 0; i < a; i++) { continue; }", ret="void"))
    assert successors(g, "continue") == ["i++"]
    assert successors(g, "i++") == ["i < a"]


def test_for_without_update_continue_goes_to_condition():
    g = cf(method_src("for (int i = 0; i < a; ) { continue; }", ret="void"))
    assert successors(g, "continue") == ["i < a"]


def test_for_without_condition_loops_body():
    g = cf(method_src("for (;;) { a++; }", ret="void"))
    assert successors(g, "a++") == ["a++"]
    assert successors(g, "f()") == ["a++"]


def test_labeled_break_leaves_outer_loop():
    g = cf(method_src("L: while (a > 0) { while (a > 1) { break L; } a--; } g(a);", ret="void"))
    assert successors(g, "break L") == ["g(a)"]


def test_labeled_continue_goes_to_outer_test():
    g = cf(method_src("L: while (a > 0) { while (a > 1) { continue L; } a--; }", ret="void"))
    assert successors(g, "continue L") == ["a > 0"]


def test_return_goes_to_exit_even_inside_loops():
    g = cf(method_src("while (a > 0) { for (;;) { return a; } }"))
    assert successors(g, "return a") == ["Exit"]


def test_same_target_branches_collapse():
    g = cf(method_src("if (a > 0) { } g(a);", ret="void"))
    assert successors(g, "a > 0") == ["g(a)"]


def test_empty_infinite_loop_is_rejected():
    with pytest.raises(EmptyInfiniteLoop):
        cf(method_src("for (;;) { }", ret="void"))
    with pytest.raises(EmptyInfiniteLoop):
        cf(method_src("for (;;) { ; { } }", ret="void"))


def test_empty_body_while_loops_to_itself():
    g = cf(method_src("while (a > 0) { } g(a);", ret="void"))
    assert successors(g, "a > 0") == ["a > 0", "g(a)"]


def test_cf_prev_is_inverse(corpus):
    for program in corpus:
        g = cf(program.source)
        forward = {(a, b) for a in g.instrs for b in a.cf_next}
        backward = {(a, b) for b in g.instrs for a in b.cf_prev}
        assert forward == backward, program.name


def test_golden_edge_lists(corpus):
    checked = 0
    for program in corpus:
        if not program.is_edge_list:
            continue
        g = cf(program.source)
        assert txt_edges(g.cf_edges()) == asserted_edges(program.read("assertions.cf"), "cfNext"), program.name
        checked += 1
    assert checked >= 15


def test_golden_files_are_pure_cf_edge_lists(corpus):
    for program in corpus:
        if program.is_edge_list:
            commands = {a.command for a in parse_assertions(program.read("assertions.cf"))}
            assert commands == {"cfNext"}, program.name
