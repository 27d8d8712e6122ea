"""Canonical source rendering of AST nodes.

Binary and assignment operators get a single space on each side, unary
operators none, and parentheses appear only where precedence demands them.
"""
from __future__ import annotations

from . import ast

_BINARY_PREC = {
    "||": 1, "&&": 2,
    "==": 3, "!=": 3,
    "<": 4, ">": 4, "<=": 4, ">=": 4,
    "+": 5, "-": 5,
    "*": 6, "/": 6, "%": 6,
}
ASSIGN_PREC = 0
UNARY_PREC = 7
POSTFIX_PREC = 8
ATOM_PREC = 9


def precedence(e: ast.Expression) -> int:
    if isinstance(e, ast.Assignment):
        return ASSIGN_PREC
    if isinstance(e, ast.Binary):
        return _BINARY_PREC[e.op]
    if isinstance(e, ast.Unary):
        return POSTFIX_PREC if e.op.endswith("post") else UNARY_PREC
    return ATOM_PREC


def parenthesize(child: ast.Expression, text: str, min_prec: int) -> str:
    return f"({text})" if precedence(child) < min_prec else text


def join_binary(e: ast.Binary, left: str, right: str) -> str:
    prec = _BINARY_PREC[e.op]
    # left-associative: an equal-precedence right operand needs parentheses
    return f"{parenthesize(e.left, left, prec)} {e.op} {parenthesize(e.right, right, prec + 1)}"


def join_unary(e: ast.Unary, operand: str) -> str:
    if e.op.endswith("post"):
        return operand + e.op[:2]
    if e.op.endswith("pre"):
        return e.op[:2] + operand
    text = parenthesize(e.operand, operand, UNARY_PREC)
    # keep "- -a" / "-(--a)" from lexing back as a decrement
    if e.op == "-" and text.startswith("-"):
        text = f"({text})"
    return e.op + text


def join_assignment(e: ast.Assignment, value: str) -> str:
    return f"{e.target} {e.op} {value}"


def join_call(e: ast.Call, args) -> str:
    return f"{e.name}({', '.join(args)})"


def render_literal(e) -> str:
    if isinstance(e, ast.BoolLiteral):
        return "true" if e.value else "false"
    return str(e.value)


def expression_text(e: ast.Expression) -> str:
    if isinstance(e, ast.Assignment):
        return join_assignment(e, expression_text(e.value))
    if isinstance(e, ast.Binary):
        return join_binary(e, expression_text(e.left), expression_text(e.right))
    if isinstance(e, ast.Unary):
        return join_unary(e, expression_text(e.operand))
    if isinstance(e, ast.VarRef):
        return e.name
    if isinstance(e, ast.Call):
        return join_call(e, [expression_text(a) for a in e.args])
    return render_literal(e)


def _ends_with_open_if(s) -> bool:
    while True:
        if isinstance(s, ast.If):
            if s.else_ is None:
                return True
            s = s.else_
        elif isinstance(s, (ast.While, ast.For, ast.Labeled)):
            s = s.body
        else:
            return False


def _stmt_lines(s, depth, out):
    pad = "    " * depth
    if isinstance(s, ast.Block):
        out.append(pad + "{")
        for child in s.statements:
            _stmt_lines(child, depth + 1, out)
        out.append(pad + "}")
    elif isinstance(s, ast.LocalVarDecl):
        init = f" = {expression_text(s.init)}" if s.init is not None else ""
        out.append(f"{pad}{s.type} {s.name}{init};")
    elif isinstance(s, ast.ExprStmt):
        out.append(f"{pad}{expression_text(s.expr)};")
    elif isinstance(s, ast.If):
        out.append(f"{pad}if ({expression_text(s.cond)})")
        then = s.then
        if s.else_ is not None and _ends_with_open_if(then):
            # the else would otherwise bind to the inner if
            then = ast.Block((then,))
        _stmt_lines(then, depth + 1, out)
        if s.else_ is not None:
            out.append(f"{pad}else")
            _stmt_lines(s.else_, depth + 1, out)
    elif isinstance(s, ast.While):
        out.append(f"{pad}while ({expression_text(s.cond)})")
        _stmt_lines(s.body, depth + 1, out)
    elif isinstance(s, ast.For):
        init = ""
        if isinstance(s.init, ast.LocalVarDecl):
            init = f"{s.init.type} {s.init.name}"
            if s.init.init is not None:
                init += f" = {expression_text(s.init.init)}"
        elif s.init is not None:
            init = expression_text(s.init.expr)
        cond = expression_text(s.cond) if s.cond is not None else ""
        update = expression_text(s.update) if s.update is not None else ""
        out.append(f"{pad}for ({init}; {cond}; {update})")
        _stmt_lines(s.body, depth + 1, out)
    elif isinstance(s, ast.Return):
        out.append(pad + ("return;" if s.value is None else f"return {expression_text(s.value)};"))
    elif isinstance(s, ast.Break):
        out.append(pad + ("break;" if s.label is None else f"break {s.label};"))
    elif isinstance(s, ast.Continue):
        out.append(pad + ("continue;" if s.label is None else f"continue {s.label};"))
    elif isinstance(s, ast.Labeled):
        out.append(f"{pad}{s.label}:")
        _stmt_lines(s.body, depth + 1, out)
    elif isinstance(s, ast.Empty):
        out.append(pad + ";")


def method_source(m: ast.MethodDecl, depth: int = 1) -> str:
    pad = "    " * depth
    params = ", ".join(f"{p.type} {p.name}" for p in m.params)
    out = [f"{pad}{m.return_type} {m.name}({params})"]
    _stmt_lines(m.body, depth, out)
    return "\n".join(out)


def unit_source(unit: ast.CompilationUnit) -> str:
    out = []
    for cls in unit.classes:
        out.append(f"class {cls.name} {{")
        for m in cls.methods:
            out.append(method_source(m))
        out.append("}")
    return "\n".join(out) + "\n"
