"""The flow-graph target model.

A :class:`FlowGraph` holds one method's instructions.  Control-flow links are
kept as ordered sets (dicts with ``None`` values) so that branch order is
preserved: for a condition instruction, ``cf_next[0]`` is the true branch and
``cf_next[1]`` the false branch.

``cf_prev`` is never written directly; :func:`link_cf` maintains it as the
exact inverse of ``cf_next``.
"""
from __future__ import annotations

import os
from typing import Dict, Iterable, List, Optional

from .errors import FlowgraphsError

KINDS = ("method", "exit", "simple", "expr", "return", "break", "continue", "label")


class CrossGraphLink(FlowgraphsError):
    pass


class GraphInvariantError(FlowgraphsError):
    pass


class VarDef:
    """A declared variable.  Identity-compared: two ``i`` in two methods differ."""

    __slots__ = ("name", "origin")

    def __init__(self, name: str, origin: str = "local"):
        if origin not in ("param", "local"):
            raise ValueError(f"bad variable origin {origin!r}")
        self.name = name
        self.origin = origin

    def __repr__(self):
        return f"VarDef({self.name!r}, {self.origin!r})"


class FlowInstr:
    __slots__ = ("id", "txt", "kind", "graph", "_cf_next", "_cf_prev", "_df_next", "defs", "uses")

    def __init__(self, kind: str, txt: str = ""):
        if kind not in KINDS:
            raise ValueError(f"bad instruction kind {kind!r}")
        self.id: Optional[int] = None
        self.kind = kind
        self.txt = txt
        self.graph: Optional[FlowGraph] = None
        self._cf_next: Dict[FlowInstr, None] = {}
        self._cf_prev: Dict[FlowInstr, None] = {}
        self._df_next: Dict[FlowInstr, None] = {}
        self.defs: List[VarDef] = []
        self.uses: List[VarDef] = []

    @property
    def cf_next(self) -> List["FlowInstr"]:
        return list(self._cf_next)

    @property
    def cf_prev(self) -> List["FlowInstr"]:
        return list(self._cf_prev)

    @property
    def df_next(self) -> List["FlowInstr"]:
        return list(self._df_next)

    def __repr__(self):
        return f"<FlowInstr #{self.id} {self.kind} {self.txt!r}>"


def _same_graph(source: FlowInstr, target: FlowInstr):
    if source.graph is None or source.graph is not target.graph:
        raise CrossGraphLink(f"cannot link {source!r} to {target!r}: different graphs")


def link_cf(source: FlowInstr, target: FlowInstr) -> None:
    """Add a control-flow edge; idempotent, keeps ``cf_prev`` in sync."""
    _same_graph(source, target)
    source._cf_next[target] = None
    target._cf_prev[source] = None


def link_df(source: FlowInstr, target: FlowInstr) -> None:
    _same_graph(source, target)
    source._df_next[target] = None


class FlowGraph:
    """One method's flow graph.

    Instruction ids are handed out as instructions are added: the method
    node is 0, the exit node 1, body instructions from 2 in document order.
    :attr:`instrs` lists method node, body, exit node in that order.
    """

    def __init__(self, method_name: str, class_name: Optional[str] = None):
        self.name = method_name
        self.class_name = class_name
        self._next_id = 0
        self.vars: List[VarDef] = []
        self.method = self._adopt(FlowInstr("method", f"{method_name}()"))
        self.exit = self._adopt(FlowInstr("exit", "Exit"))
        self.body: List[FlowInstr] = []

    def _adopt(self, instr: FlowInstr) -> FlowInstr:
        if instr.graph is not None:
            raise FlowgraphsError(f"{instr!r} already belongs to a graph")
        instr.graph = self
        instr.id = self._next_id
        self._next_id += 1
        return instr

    def add(self, instr: FlowInstr) -> FlowInstr:
        self.body.append(self._adopt(instr))
        return instr

    @property
    def qualified_name(self) -> str:
        return f"{self.class_name}.{self.name}" if self.class_name else self.name

    @property
    def instrs(self) -> List[FlowInstr]:
        return [self.method, *self.body, self.exit]

    def by_id(self) -> Dict[int, FlowInstr]:
        return {instr.id: instr for instr in self.instrs}

    def cf_edges(self):
        return [(a, b) for a in self.instrs for b in a._cf_next]

    def df_edges(self):
        return [(a, b) for a in self.instrs for b in a._df_next]

    def clear_df(self):
        for instr in self.instrs:
            instr._df_next.clear()

    def __repr__(self):
        return f"<FlowGraph {self.qualified_name} ({len(self.body) + 2} instrs)>"


# -- invariant auditing ----------------------------------------------------


def check_invariants(graph: FlowGraph) -> None:
    """Raise :class:`GraphInvariantError` if the graph's structural invariants fail."""
    members = set(graph.instrs)
    if len(members) != len(graph.body) + 2:
        raise GraphInvariantError("instruction listed twice")
    if graph.method.kind != "method" or graph.exit.kind != "exit":
        raise GraphInvariantError("method/exit node kinds are wrong")
    if graph.exit._cf_next:
        raise GraphInvariantError("exit node has control-flow successors")
    for a in graph.instrs:
        if a.graph is not graph:
            raise GraphInvariantError(f"{a!r} does not point back to its graph")
        for b in a._cf_next:
            if b not in members:
                raise GraphInvariantError(f"cf edge {a!r} -> {b!r} leaves the graph")
            if a not in b._cf_prev:
                raise GraphInvariantError(f"{b!r} misses cf_prev {a!r}")
        for b in a._cf_prev:
            if b not in members or a not in b._cf_next:
                raise GraphInvariantError(f"{a!r} has stale cf_prev {b!r}")
        for b in a._df_next:
            if b not in members:
                raise GraphInvariantError(f"df edge {a!r} -> {b!r} leaves the graph")
        if len(a.defs) > 1 and a.kind != "method":
            raise GraphInvariantError(f"{a!r} defines more than one variable")
        limit = 2 if a.kind == "expr" else 1
        if len(a._cf_next) > limit:
            raise GraphInvariantError(f"{a!r} has {len(a._cf_next)} cf successors")


class _Auditor:
    """Optional post-stage invariant checking.

    Enabled with ``FLOWGRAPHS_AUDIT=1`` or :meth:`enable`; every pipeline stage
    calls :meth:`__call__` when it finishes a graph.
    """

    def __init__(self):
        self.enabled = os.environ.get("FLOWGRAPHS_AUDIT", "") not in ("", "0")
        self.checked = 0
        self.failures: List[str] = []

    def enable(self, on: bool = True):
        self.enabled = on

    def __call__(self, graph: FlowGraph, stage: str):
        if not self.enabled:
            return
        try:
            check_invariants(graph)
        except GraphInvariantError as exc:
            message = f"{graph.qualified_name} after {stage}: {exc}"
            self.failures.append(message)
            raise GraphInvariantError(message) from None
        self.checked += 1


audit = _Auditor()


def iter_graphs(graphs) -> Iterable[FlowGraph]:
    if isinstance(graphs, FlowGraph):
        return [graphs]
    return list(graphs)
