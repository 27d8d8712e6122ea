"""Data flow (def-use) edges.

Two independent routes compute the same relation:

* :func:`traverse_reaching_defs` (behind :func:`derive_data_flow`) walks
  control flow forward from each definition until the defined variable is
  overwritten.
* :func:`oracle_reaching_defs` solves the classic reaching-definitions
  equations by worklist iteration over ``cf_prev``.

The second doubles as the ``fixpoint`` strategy of :func:`set_data_flow`.
"""
from __future__ import annotations

from collections import deque
from typing import Dict, FrozenSet, Set, Tuple

from .model import FlowGraph, FlowInstr, audit, link_df

Edge = Tuple[FlowInstr, FlowInstr, str]


def _holds(vars_, var) -> bool:
    return any(v is var for v in vars_)


def traverse_reaching_defs(graph: FlowGraph) -> Set[Edge]:
    """Def-use triples found by walking control flow forward from each definition.

    At each visited instruction the use check comes before the kill check,
    so ``a = a + 1`` both receives the incoming definition and ends it.
    """
    found = set()
    for d in graph.instrs:
        for var in d.defs:
            visited: Set[FlowInstr] = set()
            stack = list(reversed(d.cf_next))
            while stack:
                u = stack.pop()
                if u in visited:
                    continue
                visited.add(u)
                if _holds(u.uses, var):
                    found.add((d, u, var.name))
                if _holds(u.defs, var):
                    continue
                stack.extend(reversed(u.cf_next))
    return found


def _link_all(graph: FlowGraph, edges: Set[Edge]) -> None:
    for d, u, _ in sorted(edges, key=lambda e: (e[0].id, e[1].id, e[2])):
        link_df(d, u)
    audit(graph, "data flow")


def derive_data_flow(graph: FlowGraph) -> None:
    """Add ``d -> u`` for every definition ``d`` whose value may be read at ``u``."""
    _link_all(graph, traverse_reaching_defs(graph))


def df_pairs(graph: FlowGraph) -> Set[Tuple[FlowInstr, FlowInstr]]:
    return set(graph.df_edges())


def oracle_reaching_defs(graph: FlowGraph) -> Set[Edge]:
    """Reaching definitions to a fixed point, reported as def-use triples.

    A definition is an ``(instruction, variable)`` pair.  ``IN[n]`` is the
    union of ``OUT[p]`` over predecessors; ``OUT[n]`` is ``IN[n]`` minus
    definitions of the variables ``n`` writes, plus ``n``'s own.
    """
    instrs = graph.instrs
    gen: Dict[FlowInstr, FrozenSet] = {}
    killed_names: Dict[FlowInstr, FrozenSet[int]] = {}
    for n in instrs:
        gen[n] = frozenset((n, id(v)) for v in n.defs)
        killed_names[n] = frozenset(id(v) for v in n.defs)
    in_: Dict[FlowInstr, FrozenSet] = {n: frozenset() for n in instrs}
    out: Dict[FlowInstr, FrozenSet] = {n: gen[n] for n in instrs}

    work = deque(instrs)
    queued = set(instrs)
    while work:
        n = work.popleft()
        queued.discard(n)
        incoming = frozenset().union(*(out[p] for p in n._cf_prev)) if n._cf_prev else frozenset()
        in_[n] = incoming
        kill = killed_names[n]
        new_out = gen[n] | frozenset(d for d in incoming if d[1] not in kill) if kill else incoming
        if new_out != out[n]:
            out[n] = new_out
            for s in n._cf_next:
                if s not in queued:
                    queued.add(s)
                    work.append(s)

    result = set()
    for u in instrs:
        if not u.uses:
            continue
        used = {id(v): v for v in u.uses}
        for d, var_id in in_[u]:
            if var_id in used:
                result.add((d, u, used[var_id].name))
    return result


def set_data_flow(graph: FlowGraph, strategy: str = "traversal") -> None:
    """Populate ``df_next`` using ``strategy`` (``traversal`` or ``fixpoint``)."""
    if strategy == "traversal":
        derive_data_flow(graph)
    elif strategy == "fixpoint":
        _link_all(graph, oracle_reaching_defs(graph))
    else:
        raise ValueError(f"unknown data-flow strategy {strategy!r}")
