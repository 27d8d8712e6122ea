"""Control flow: give every statement a :class:`ControlFlowInfo`.

Each info answers two questions and performs one action:

* ``first()`` - the instruction control reaches on entering the statement.
  For an empty block that is not one of its own instructions, so it asks
  its ``successor``.
* ``successor`` - whatever follows the statement (a sibling's info, the
  enclosing statement's successor, a loop condition, or the method exit).
* ``set_control_flow(context)`` - link the statement's own instructions.

The infos are non-model helper objects created by transformation rules in the
same context that built the structure graph, so the rules can find each
statement's instructions through the trace.
"""
from __future__ import annotations

from typing import List, Optional

from .engine import Rule, TransformationContext, require
from .errors import FlowgraphsError
from .frontend import ast
from .model import FlowGraph, FlowInstr, audit, link_cf
from .structure import Condition2Instr, Method2Graph, Statement2Instr, Update2Instr


class ControlFlowError(FlowgraphsError):
    pass


class UnresolvedLabel(ControlFlowError):
    pass


class EmptyInfiniteLoop(ControlFlowError):
    pass


class Fixed:
    """A successor that is a known instruction."""

    __slots__ = ("instr",)

    def __init__(self, instr: FlowInstr):
        self.instr = instr

    def first(self) -> FlowInstr:
        return self.instr


class After:
    """Whatever follows ``info``; resolved lazily since ``info.successor`` may be set later."""

    __slots__ = ("info",)

    def __init__(self, info):
        self.info = info

    def first(self) -> FlowInstr:
        return self.info.successor.first()


class ControlFlowInfo:
    successor = None

    def first(self) -> FlowInstr:
        return self.successor.first()

    def set_control_flow(self, context: TransformationContext) -> None:
        pass


class SimpleCf(ControlFlowInfo):
    def __init__(self, instr):
        self.instr = instr

    def first(self):
        return self.instr

    def set_control_flow(self, context):
        link_cf(self.instr, self.successor.first())


class ReturnCf(SimpleCf):
    def set_control_flow(self, context):
        link_cf(self.instr, self.instr.graph.exit)


class LoopFrame:
    __slots__ = ("loop", "labels")

    def __init__(self, loop, labels):
        self.loop = loop
        self.labels = labels


class LoopContext:
    """Stack of enclosing loops, innermost last."""

    def __init__(self):
        self.frames: List[LoopFrame] = []

    def push(self, loop):
        self.frames.append(LoopFrame(loop, tuple(loop.labels)))

    def pop(self):
        self.frames.pop()

    def find(self, label: Optional[str]):
        for frame in reversed(self.frames):
            if label is None or label in frame.labels:
                return frame.loop
        what = "loop" if label is None else f"loop labelled {label!r}"
        raise UnresolvedLabel(f"no enclosing {what}")


def _loops(context) -> LoopContext:
    return context.data.setdefault("loops", LoopContext())


class BreakCf(SimpleCf):
    def __init__(self, instr, label):
        super().__init__(instr)
        self.label = label

    def set_control_flow(self, context):
        loop = _loops(context).find(self.label)
        link_cf(self.instr, loop.successor.first())


class ContinueCf(BreakCf):
    def set_control_flow(self, context):
        loop = _loops(context).find(self.label)
        link_cf(self.instr, loop.continue_target().first())


class BlockCf(ControlFlowInfo):
    def __init__(self):
        self.children: List[ControlFlowInfo] = []

    def first(self):
        if self.children:
            return self.children[0].first()
        return self.successor.first()

    def set_control_flow(self, context):
        for child in self.children:
            child.set_control_flow(context)


class EmptyCf(ControlFlowInfo):
    pass


class LabeledCf(ControlFlowInfo):
    body = None

    def __init__(self, label):
        self.label = label

    def first(self):
        return self.body.first()

    def set_control_flow(self, context):
        self.body.set_control_flow(context)


class IfCf(ControlFlowInfo):
    then = None
    else_ = None

    def __init__(self, cond):
        self.cond = cond

    def first(self):
        return self.cond

    def set_control_flow(self, context):
        link_cf(self.cond, self.then.first())
        link_cf(self.cond, (self.else_ or self.successor).first())
        self.then.set_control_flow(context)
        if self.else_ is not None:
            self.else_.set_control_flow(context)


class LoopCf(ControlFlowInfo):
    body = None

    def __init__(self):
        self.labels: List[str] = []

    def continue_target(self):
        raise NotImplementedError


class WhileCf(LoopCf):
    def __init__(self, cond):
        super().__init__()
        self.cond = cond

    def first(self):
        return self.cond

    def continue_target(self):
        return Fixed(self.cond)

    def set_control_flow(self, context):
        link_cf(self.cond, self.body.first())
        link_cf(self.cond, self.successor.first())
        loops = _loops(context)
        loops.push(self)
        self.body.set_control_flow(context)
        loops.pop()


class _ForHead:
    """Entry of a for-loop iteration: the condition, or the body when there is none."""

    __slots__ = ("loop", "_resolving")

    def __init__(self, loop):
        self.loop = loop
        self._resolving = False

    def first(self):
        if self.loop.cond is not None:
            return self.loop.cond
        if self._resolving:
            raise EmptyInfiniteLoop("for-loop without condition, update or body instruction")
        self._resolving = True
        try:
            return self.loop.body.first()
        finally:
            self._resolving = False


class ForCf(LoopCf):
    init = None

    def __init__(self, cond, update):
        super().__init__()
        self.cond = cond
        self.update = update
        self.head = _ForHead(self)

    def first(self):
        if self.init is not None:
            return self.init.first()
        return self.head.first()

    def continue_target(self):
        return Fixed(self.update) if self.update is not None else self.head

    def set_control_flow(self, context):
        if self.init is not None:
            self.init.set_control_flow(context)
        if self.cond is not None:
            link_cf(self.cond, self.body.first())
            link_cf(self.cond, self.successor.first())
        if self.update is not None:
            link_cf(self.update, self.head.first())
        loops = _loops(context)
        loops.push(self)
        self.body.set_control_flow(context)
        loops.pop()


class MethodCf(ControlFlowInfo):
    body = None

    def __init__(self, graph: FlowGraph):
        self.graph = graph

    def first(self):
        return self.graph.method

    def set_control_flow(self, context):
        link_cf(self.graph.method, self.body.first())
        self.body.set_control_flow(context)


# -- rules -----------------------------------------------------------------


def _instr(context, s):
    return context.trace(Statement2Instr, s)


def _set(attr):
    def persist(parent, child):
        setattr(parent, attr, child)
    return persist


class Statement2Cf(Rule):
    """Hub: statements without a specific rule (``;``) only pass control on."""

    input_kind = ast.Statement

    def create_output(self, s, context):
        return EmptyCf()


class LocalVar2Cf(Rule):
    input_kind = ast.LocalVarDecl
    instantiates = Statement2Cf

    def create_output(self, s, context):
        return SimpleCf(_instr(context, s))


class ExprStmt2Cf(LocalVar2Cf):
    input_kind = ast.ExprStmt
    instantiates = Statement2Cf


class Return2Cf(Rule):
    input_kind = ast.Return
    instantiates = Statement2Cf

    def create_output(self, s, context):
        return ReturnCf(_instr(context, s))


class Break2Cf(Rule):
    input_kind = ast.Break
    instantiates = Statement2Cf

    def create_output(self, s, context):
        return BreakCf(_instr(context, s), s.label)


class Continue2Cf(Rule):
    input_kind = ast.Continue
    instantiates = Statement2Cf

    def create_output(self, s, context):
        return ContinueCf(_instr(context, s), s.label)


class Block2Cf(Rule):
    input_kind = ast.Block
    instantiates = Statement2Cf

    def create_output(self, s, context):
        return BlockCf()

    def requirements(self):
        return [require(lambda s: s.statements, Statement2Cf, lambda b, c: b.children.append(c))]

    def transform(self, s, info, context):
        children = info.children
        for current, following in zip(children, children[1:]):
            current.successor = following
        if children:
            children[-1].successor = After(info)


class Labeled2Cf(Rule):
    input_kind = ast.Labeled
    instantiates = Statement2Cf

    def create_output(self, s, context):
        return LabeledCf(s.label)

    def requirements(self):
        return [require(lambda s: (s.body,), Statement2Cf, _set("body"))]

    def transform(self, s, info, context):
        info.body.successor = After(info)
        inner = info.body
        while isinstance(inner, LabeledCf):
            inner = inner.body
        if isinstance(inner, LoopCf):
            inner.labels.append(s.label)


class If2Cf(Rule):
    input_kind = ast.If
    instantiates = Statement2Cf

    def create_output(self, s, context):
        return IfCf(_instr(context, s))

    def requirements(self):
        return [
            require(lambda s: (s.then,), Statement2Cf, _set("then")),
            require(lambda s: (s.else_,), Statement2Cf, _set("else_")),
        ]

    def transform(self, s, info, context):
        info.then.successor = After(info)
        if info.else_ is not None:
            info.else_.successor = After(info)


class While2Cf(Rule):
    input_kind = ast.While
    instantiates = Statement2Cf

    def create_output(self, s, context):
        return WhileCf(_instr(context, s))

    def requirements(self):
        return [require(lambda s: (s.body,), Statement2Cf, _set("body"))]

    def transform(self, s, info, context):
        info.body.successor = Fixed(info.cond)


class For2Cf(Rule):
    input_kind = ast.For
    instantiates = Statement2Cf

    def create_output(self, s, context):
        cond = context.trace(Condition2Instr, s.cond) if s.cond is not None else None
        update = context.trace(Update2Instr, s.update) if s.update is not None else None
        return ForCf(cond, update)

    def requirements(self):
        return [
            require(lambda s: (s.init,), Statement2Cf, _set("init")),
            require(lambda s: (s.body,), Statement2Cf, _set("body")),
        ]

    def transform(self, s, info, context):
        if info.init is not None:
            info.init.successor = info.head
        info.body.successor = info.continue_target()


class Method2Cf(Rule):
    input_kind = ast.MethodDecl

    def create_output(self, m, context):
        graph = context.trace(Method2Graph, m)
        if graph is None:
            raise ControlFlowError(f"no structure graph for method {m.name!r} in this context")
        return MethodCf(graph)

    def requirements(self):
        return [require(lambda m: (m.body,), Statement2Cf, _set("body"))]

    def transform(self, m, info, context):
        info.body.successor = Fixed(info.graph.exit)


CONTROL_FLOW_RULES = (
    Statement2Cf, LocalVar2Cf, ExprStmt2Cf, Return2Cf, Break2Cf, Continue2Cf,
    Block2Cf, Labeled2Cf, If2Cf, While2Cf, For2Cf, Method2Cf,
)


def derive_control_flow(graph: FlowGraph, method: ast.MethodDecl, context: TransformationContext) -> None:
    """Task 2: set ``cf_next``/``cf_prev`` on ``graph`` (built from ``method`` in ``context``)."""
    if context.trace(Method2Graph, method) is not graph:
        raise ControlFlowError("graph was not built from this method in this context")
    info = context.call(Method2Cf, method)
    context.data["loops"] = LoopContext()
    info.set_control_flow(context)
    audit(graph, "control flow")
