"""Static checks that the grammar alone cannot express.

Scoping of variables (declare-before-use, re-declaration) is checked later,
when the structure graph is built, because that is where variable
definitions are created.
"""
from __future__ import annotations

from ..errors import DuplicateDeclaration, SemanticError
from . import ast


def _is_side_effect(expr) -> bool:
    return isinstance(expr, ast.Assignment) or (isinstance(expr, ast.Unary) and expr.is_increment)


def _unwrap_labels(stmt):
    labels = []
    while isinstance(stmt, ast.Labeled):
        labels.append(stmt.label)
        stmt = stmt.body
    return labels, stmt


def check_unit(unit: ast.CompilationUnit) -> None:
    seen_classes = set()
    for cls in unit.classes:
        if cls.name in seen_classes:
            raise DuplicateDeclaration(f"duplicate class {cls.name!r}", cls.pos)
        seen_classes.add(cls.name)
        seen_methods = set()
        for method in cls.methods:
            if method.name in seen_methods:
                raise DuplicateDeclaration(f"duplicate method {cls.name}.{method.name}", method.pos)
            seen_methods.add(method.name)
            check_method(method)


def check_method(method: ast.MethodDecl) -> None:
    names = set()
    for param in method.params:
        if param.name in names:
            raise DuplicateDeclaration(f"duplicate parameter {param.name!r}", param.pos)
        names.add(param.name)
    _Checker().statement(method.body, loops=(), labels={})


class _Checker:
    # ``loops`` is the tuple of enclosing loops (innermost last); ``labels`` maps
    # each enclosing label to whether it decorates a loop.

    def statement(self, stmt, loops, labels):
        if isinstance(stmt, ast.Block):
            for child in stmt.statements:
                self.statement(child, loops, labels)
        elif isinstance(stmt, ast.LocalVarDecl):
            if stmt.init is not None:
                self.expression(stmt.init, root=False)
        elif isinstance(stmt, ast.ExprStmt):
            expr = stmt.expr
            if not (_is_side_effect(expr) or isinstance(expr, ast.Call)):
                raise SemanticError("not a statement", stmt.pos)
            self.expression(expr, root=True)
        elif isinstance(stmt, ast.If):
            self.expression(stmt.cond, root=False)
            self.statement(stmt.then, loops, labels)
            if stmt.else_ is not None:
                self.statement(stmt.else_, loops, labels)
        elif isinstance(stmt, ast.While):
            self.expression(stmt.cond, root=False)
            self.statement(stmt.body, loops + (stmt,), labels)
        elif isinstance(stmt, ast.For):
            if stmt.init is not None:
                if not isinstance(stmt.init, (ast.LocalVarDecl, ast.ExprStmt)):
                    raise SemanticError("for-init must be a declaration or expression", stmt.init.pos)
                self.statement(stmt.init, loops, labels)
            if stmt.cond is not None:
                self.expression(stmt.cond, root=False)
            if stmt.update is not None:
                self.expression(stmt.update, root=True)
            self.statement(stmt.body, loops + (stmt,), labels)
        elif isinstance(stmt, ast.Return):
            if stmt.value is not None:
                self.expression(stmt.value, root=False)
        elif isinstance(stmt, (ast.Break, ast.Continue)):
            word = "break" if isinstance(stmt, ast.Break) else "continue"
            if stmt.label is None:
                if not loops:
                    raise SemanticError(f"{word} outside of a loop", stmt.pos)
            elif stmt.label not in labels:
                raise SemanticError(f"undefined label {stmt.label!r}", stmt.pos)
            elif not labels[stmt.label]:
                raise SemanticError(f"label {stmt.label!r} does not name a loop", stmt.pos)
        elif isinstance(stmt, ast.Labeled):
            own, inner = _unwrap_labels(stmt)
            is_loop = isinstance(inner, ast.LOOPS)
            scope = dict(labels)
            for label in own:
                if label in scope:
                    raise SemanticError(f"label {label!r} already in use", stmt.pos)
                scope[label] = is_loop
            self.statement(inner, loops, scope)
        elif isinstance(stmt, ast.Empty):
            pass
        else:  # pragma: no cover - exhaustive over the AST
            raise TypeError(f"unknown statement {stmt!r}")

    def expression(self, expr, root):
        if _is_side_effect(expr) and not root:
            raise SemanticError("assignment or increment must be a whole statement", expr.pos)
        for child in ast.children(expr):
            self.expression(child, root=False)
