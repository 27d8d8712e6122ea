"""AST for the supported Java subset.

Nodes are frozen dataclasses.  Source positions are carried for diagnostics
but excluded from equality, so an AST loaded from JSON without positions
compares equal to the parsed one.

Node identity matters downstream: the transformation engine memoizes on the
identity of an input node, so two structurally equal ``break;`` statements in
different loops are still distinct inputs.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Tuple, Union

Pos = Optional[Tuple[int, int]]

ASSIGN_OPS = ("=", "+=", "-=", "*=", "/=", "%=")
BINARY_OPS = ("+", "-", "*", "/", "%", "<", ">", "<=", ">=", "==", "!=", "&&", "||")
UNARY_OPS = ("-", "!", "++pre", "--pre", "++post", "--post")


def _pos() -> Pos:
    return field(default=None, compare=False, repr=False)


class Node:
    __slots__ = ()


# -- expressions -----------------------------------------------------------


class Expression(Node):
    __slots__ = ()


@dataclass(frozen=True)
class Assignment(Expression):
    target: str
    op: str
    value: Expression
    pos: Pos = _pos()


@dataclass(frozen=True)
class Binary(Expression):
    left: Expression
    op: str
    right: Expression
    pos: Pos = _pos()


@dataclass(frozen=True)
class Unary(Expression):
    op: str
    operand: Expression
    pos: Pos = _pos()

    @property
    def is_increment(self) -> bool:
        return self.op in ("++pre", "--pre", "++post", "--post")


@dataclass(frozen=True)
class VarRef(Expression):
    name: str
    pos: Pos = _pos()


@dataclass(frozen=True)
class IntLiteral(Expression):
    value: int
    pos: Pos = _pos()


@dataclass(frozen=True)
class BoolLiteral(Expression):
    value: bool
    pos: Pos = _pos()


@dataclass(frozen=True)
class Call(Expression):
    name: str
    args: Tuple[Expression, ...] = ()
    pos: Pos = _pos()


# -- statements ------------------------------------------------------------


class Statement(Node):
    __slots__ = ()


@dataclass(frozen=True)
class Block(Statement):
    statements: Tuple[Statement, ...] = ()
    pos: Pos = _pos()


@dataclass(frozen=True)
class LocalVarDecl(Statement):
    type: str
    name: str
    init: Optional[Expression] = None
    pos: Pos = _pos()


@dataclass(frozen=True)
class ExprStmt(Statement):
    expr: Expression
    pos: Pos = _pos()


@dataclass(frozen=True)
class If(Statement):
    cond: Expression
    then: Statement
    else_: Optional[Statement] = None
    pos: Pos = _pos()


@dataclass(frozen=True)
class While(Statement):
    cond: Expression
    body: Statement
    pos: Pos = _pos()


@dataclass(frozen=True)
class For(Statement):
    init: Optional[Statement]
    cond: Optional[Expression]
    update: Optional[Expression]
    body: Statement
    pos: Pos = _pos()


@dataclass(frozen=True)
class Return(Statement):
    value: Optional[Expression] = None
    pos: Pos = _pos()


@dataclass(frozen=True)
class Break(Statement):
    label: Optional[str] = None
    pos: Pos = _pos()


@dataclass(frozen=True)
class Continue(Statement):
    label: Optional[str] = None
    pos: Pos = _pos()


@dataclass(frozen=True)
class Labeled(Statement):
    label: str
    body: Statement
    pos: Pos = _pos()


@dataclass(frozen=True)
class Empty(Statement):
    pos: Pos = _pos()


# -- declarations ----------------------------------------------------------


@dataclass(frozen=True)
class Param:
    name: str
    type: str
    pos: Pos = _pos()


@dataclass(frozen=True)
class MethodDecl:
    name: str
    params: Tuple[Param, ...]
    body: Block
    return_type: str = field(default="void", compare=False)
    pos: Pos = _pos()


@dataclass(frozen=True)
class ClassDecl:
    name: str
    methods: Tuple[MethodDecl, ...] = ()
    pos: Pos = _pos()


@dataclass(frozen=True)
class CompilationUnit:
    classes: Tuple[ClassDecl, ...] = ()

    def methods(self):
        """Yield ``(class_name, method)`` pairs in declaration order."""
        for cls in self.classes:
            for method in cls.methods:
                yield cls.name, method


AnyNode = Union[Expression, Statement, MethodDecl, ClassDecl, CompilationUnit]

LOOPS = (While, For)


def children(node) -> tuple:
    """Direct sub-statements and sub-expressions of ``node`` in source order."""
    if isinstance(node, Assignment):
        return (node.value,)
    if isinstance(node, Binary):
        return (node.left, node.right)
    if isinstance(node, Unary):
        return (node.operand,)
    if isinstance(node, Call):
        return tuple(node.args)
    if isinstance(node, Block):
        return tuple(node.statements)
    if isinstance(node, LocalVarDecl):
        return (node.init,) if node.init is not None else ()
    if isinstance(node, ExprStmt):
        return (node.expr,)
    if isinstance(node, If):
        return tuple(n for n in (node.cond, node.then, node.else_) if n is not None)
    if isinstance(node, While):
        return (node.cond, node.body)
    if isinstance(node, For):
        return tuple(n for n in (node.init, node.cond, node.update, node.body) if n is not None)
    if isinstance(node, Return):
        return (node.value,) if node.value is not None else ()
    if isinstance(node, Labeled):
        return (node.body,)
    if isinstance(node, MethodDecl):
        return (node.body,)
    if isinstance(node, ClassDecl):
        return tuple(node.methods)
    if isinstance(node, CompilationUnit):
        return tuple(node.classes)
    return ()


def walk(node):
    """Pre-order traversal (iterative, so deep inputs don't hit the recursion limit)."""
    stack = [node]
    while stack:
        current = stack.pop()
        yield current
        stack.extend(reversed(children(current)))
