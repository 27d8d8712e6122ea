"""Structure graph: one flow instruction per statement or loop/branch condition.

Expressions are transformed into :class:`ExpressionInfo` objects through a
hub rule (:class:`Expression2Info`) with one instantiating rule per
expression kind, so callers never need to know which kinds exist.
Statements go through the :class:`Statement2Instr` hub the same way.
"""
from __future__ import annotations

from typing import Dict, List, Optional

from .engine import Rule, TransformationContext, require
from .errors import DuplicateDeclaration, UnboundVariable
from .frontend import ast
from .frontend.printer import join_assignment, join_binary, join_call, join_unary, render_literal
from .model import FlowGraph, FlowInstr, VarDef, audit


class ExpressionInfo:
    """Rendered text plus the variable an expression writes and those it reads."""

    __slots__ = ("text", "defined_variable", "used_variables")

    def __init__(self, text: str = "", defined_variable: Optional[VarDef] = None):
        self.text = text
        self.defined_variable = defined_variable
        self.used_variables: List[VarDef] = []

    def use(self, var: VarDef):
        if all(v is not var for v in self.used_variables):
            self.used_variables.append(var)

    def __repr__(self):
        return f"ExpressionInfo({self.text!r}, def={self.defined_variable}, uses={self.used_variables})"


def _lookup(context, name, pos=None) -> VarDef:
    try:
        return context.data["scope"][name]
    except KeyError:
        raise UnboundVariable(name, pos) from None


def _merge_uses(parent: ExpressionInfo, child: ExpressionInfo):
    for var in child.used_variables:
        parent.use(var)


# -- expression rules --------------------------------------------------------


class Expression2Info(Rule):
    """Hub for all expressions.  Only literals end up here without a more specific rule."""

    input_kind = ast.Expression

    def create_output(self, e, context):
        return ExpressionInfo(render_literal(e))


class VarRef2Info(Rule):
    input_kind = ast.VarRef
    instantiates = Expression2Info

    def create_output(self, e, context):
        info = ExpressionInfo(e.name)
        info.use(_lookup(context, e.name, e.pos))
        return info


class Assignment2Info(Rule):
    input_kind = ast.Assignment
    instantiates = Expression2Info

    def create_output(self, e, context):
        target = _lookup(context, e.target, e.pos)
        info = ExpressionInfo(defined_variable=target)
        if e.op != "=":
            # compound assignment reads its target first
            info.use(target)
        return info

    def requirements(self):
        return [require(lambda e: (e.value,), Expression2Info, _merge_uses)]

    def transform(self, e, info, context):
        info.text = join_assignment(e, context.trace(Expression2Info, e.value).text)


class Binary2Info(Rule):
    input_kind = ast.Binary
    instantiates = Expression2Info

    def create_output(self, e, context):
        return ExpressionInfo()

    def requirements(self):
        return [require(lambda e: (e.left, e.right), Expression2Info, _merge_uses)]

    def transform(self, e, info, context):
        left = context.trace(Expression2Info, e.left).text
        right = context.trace(Expression2Info, e.right).text
        info.text = join_binary(e, left, right)


class Unary2Info(Rule):
    input_kind = ast.Unary
    instantiates = Expression2Info

    def create_output(self, e, context):
        return ExpressionInfo()

    def requirements(self):
        return [require(lambda e: (e.operand,), Expression2Info, _merge_uses)]

    def transform(self, e, info, context):
        info.text = join_unary(e, context.trace(Expression2Info, e.operand).text)
        if e.is_increment:
            info.defined_variable = _lookup(context, e.operand.name, e.pos)


class Call2Info(Rule):
    input_kind = ast.Call
    instantiates = Expression2Info

    def create_output(self, e, context):
        return ExpressionInfo()

    def requirements(self):
        return [require(lambda e: e.args, Expression2Info, _merge_uses)]

    def transform(self, e, info, context):
        info.text = join_call(e, [context.trace(Expression2Info, a).text for a in e.args])


# -- instructions ----------------------------------------------------------


def _fill_from_info(instr: FlowInstr, info: ExpressionInfo):
    instr.txt = info.text
    instr.defs = [info.defined_variable] if info.defined_variable is not None else []
    instr.uses = list(info.used_variables)


def _add_uses(instr: FlowInstr, info: ExpressionInfo):
    for var in info.used_variables:
        if all(v is not var for v in instr.uses):
            instr.uses.append(var)


def _self(e):
    return (e,)


class Condition2Instr(Rule):
    """A branch or loop condition becomes an ``expr`` instruction."""

    input_kind = ast.Expression

    def create_output(self, e, context):
        return context.data["graph"].add(FlowInstr("expr"))

    def requirements(self):
        return [require(_self, Expression2Info, _fill_from_info)]


class Update2Instr(Rule):
    """The update clause of a ``for`` loop."""

    input_kind = ast.Expression

    def create_output(self, e, context):
        return context.data["graph"].add(FlowInstr("simple"))

    def requirements(self):
        return [require(_self, Expression2Info, _fill_from_info)]


class Statement2Instr(Rule):
    """Hub for statements.  Output is the statement's own instruction, or ``None``."""

    input_kind = ast.Statement


class LocalVar2Instr(Rule):
    input_kind = ast.LocalVarDecl
    instantiates = Statement2Instr

    def create_output(self, s, context):
        instr = context.data["graph"].add(FlowInstr("simple", f"{s.type} {s.name}"))
        if s.init is not None:
            # a bare ``int x;`` writes no value, so it neither defines nor kills
            instr.defs = [_lookup(context, s.name, s.pos)]
        return instr

    def requirements(self):
        return [require(lambda s: (s.init,), Expression2Info, _add_uses)]

    def transform(self, s, instr, context):
        if s.init is not None:
            instr.txt += " = " + context.trace(Expression2Info, s.init).text


class ExprStmt2Instr(Rule):
    input_kind = ast.ExprStmt
    instantiates = Statement2Instr

    def create_output(self, s, context):
        return context.data["graph"].add(FlowInstr("simple"))

    def requirements(self):
        return [require(lambda s: (s.expr,), Expression2Info, _fill_from_info)]


class Return2Instr(Rule):
    input_kind = ast.Return
    instantiates = Statement2Instr

    def create_output(self, s, context):
        return context.data["graph"].add(FlowInstr("return", "return"))

    def requirements(self):
        return [require(lambda s: (s.value,), Expression2Info, _add_uses)]

    def transform(self, s, instr, context):
        if s.value is not None:
            instr.txt = "return " + context.trace(Expression2Info, s.value).text


class Jump2Instr(Rule):
    input_kind = ast.Statement

    def create_output(self, s, context):
        word = "break" if isinstance(s, ast.Break) else "continue"
        txt = word if s.label is None else f"{word} {s.label}"
        return context.data["graph"].add(FlowInstr(word, txt))


class Break2Instr(Jump2Instr):
    input_kind = ast.Break
    instantiates = Statement2Instr


class Continue2Instr(Jump2Instr):
    input_kind = ast.Continue
    instantiates = Statement2Instr


class If2Instr(Rule):
    input_kind = ast.If
    instantiates = Statement2Instr

    def create_output(self, s, context):
        return context.call(Condition2Instr, s.cond)

    def requirements(self):
        return [require(lambda s: (s.then, s.else_), Statement2Instr)]


class While2Instr(Rule):
    input_kind = ast.While
    instantiates = Statement2Instr

    def create_output(self, s, context):
        return context.call(Condition2Instr, s.cond)

    def requirements(self):
        return [require(lambda s: (s.body,), Statement2Instr)]


class For2Instr(Rule):
    """``for`` contributes init, condition and update instructions, in that order."""

    input_kind = ast.For
    instantiates = Statement2Instr

    def requirements(self):
        return [
            require(lambda s: (s.init,), Statement2Instr),
            require(lambda s: (s.cond,), Condition2Instr),
            require(lambda s: (s.update,), Update2Instr),
            require(lambda s: (s.body,), Statement2Instr),
        ]


class Block2Instr(Rule):
    input_kind = ast.Block
    instantiates = Statement2Instr

    def requirements(self):
        return [require(lambda s: s.statements, Statement2Instr)]


class Labeled2Instr(Rule):
    input_kind = ast.Labeled
    instantiates = Statement2Instr

    def requirements(self):
        return [require(lambda s: (s.body,), Statement2Instr)]


class Method2Graph(Rule):
    input_kind = ast.MethodDecl

    def create_output(self, m, context):
        graph = FlowGraph(m.name, context.data.get("class_name"))
        graph.vars, context.data["scope"] = declare_variables(m)
        graph.method.defs = [v for v in graph.vars if v.origin == "param"]
        context.data["graph"] = graph
        return graph

    def requirements(self):
        return [require(lambda m: (m.body,), Statement2Instr)]

    def transform(self, m, graph, context):
        audit(graph, "structure")


EXPRESSION_RULES = (Expression2Info, VarRef2Info, Assignment2Info, Binary2Info, Unary2Info, Call2Info)
STRUCTURE_RULES = EXPRESSION_RULES + (
    Condition2Instr, Update2Instr, Statement2Instr, LocalVar2Instr, ExprStmt2Instr,
    Return2Instr, Break2Instr, Continue2Instr, If2Instr, While2Instr, For2Instr,
    Block2Instr, Labeled2Instr, Method2Graph,
)


# -- scoping ---------------------------------------------------------------


def declare_variables(m: ast.MethodDecl):
    """Create one :class:`VarDef` per parameter and local declaration.

    Checks that every variable is declared before use and visible at the
    point of use (block scoping), and that no name is declared twice in the
    method.  Returns ``(vars_in_declaration_order, name -> VarDef)``.
    """
    declared: Dict[str, VarDef] = {}
    ordered: List[VarDef] = []
    scopes: List[set] = [set()]

    def declare(name, origin, pos):
        if name in declared:
            raise DuplicateDeclaration(f"variable {name!r} declared twice", pos)
        var = VarDef(name, origin)
        declared[name] = var
        ordered.append(var)
        scopes[-1].add(name)

    def visible(name):
        return any(name in scope for scope in scopes)

    def check_expr(e):
        for node in ast.walk(e):
            if isinstance(node, ast.VarRef) and not visible(node.name):
                raise UnboundVariable(node.name, node.pos)
            if isinstance(node, ast.Assignment) and not visible(node.target):
                raise UnboundVariable(node.target, node.pos)

    def stmt(s):
        if isinstance(s, ast.Block):
            scopes.append(set())
            for child in s.statements:
                stmt(child)
            scopes.pop()
        elif isinstance(s, ast.LocalVarDecl):
            if s.init is not None:
                check_expr(s.init)
            declare(s.name, "local", s.pos)
        elif isinstance(s, ast.For):
            scopes.append(set())
            if s.init is not None:
                stmt(s.init)
            for e in (s.cond, s.update):
                if e is not None:
                    check_expr(e)
            stmt(s.body)
            scopes.pop()
        else:
            for child in ast.children(s):
                if isinstance(child, ast.Statement):
                    stmt(child)
                else:
                    check_expr(child)

    for p in m.params:
        declare(p.name, "param", p.pos)
    stmt(m.body)
    return ordered, declared


# -- entry points ----------------------------------------------------------


def build_structure_graph(m: ast.MethodDecl, context: TransformationContext,
                          class_name: Optional[str] = None) -> FlowGraph:
    """Task 1/3.1: instructions, texts and def/use sets for ``m``; no edges."""
    if not context.has_trace(Method2Graph, m):
        context.data["class_name"] = class_name
    return context.call(Method2Graph, m)


def render_expression(e: ast.Expression, scope: Dict[str, VarDef]) -> ExpressionInfo:
    context = TransformationContext(EXPRESSION_RULES)
    context.data["scope"] = scope
    return context.call(Expression2Info, e)
