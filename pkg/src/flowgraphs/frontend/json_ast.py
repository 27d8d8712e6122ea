"""JSON encoding of the AST.

Every statement and expression object carries a ``"kind"`` discriminator.
Source positions are written as optional ``"line"``/``"col"`` members and are
ignored for equality, so hand-written documents may omit them.
"""
from __future__ import annotations

import json

from ..errors import SchemaError
from . import ast
from .semantics import check_unit

STMT_KINDS = {
    ast.Block: "block",
    ast.LocalVarDecl: "localVar",
    ast.ExprStmt: "exprStmt",
    ast.If: "if",
    ast.While: "while",
    ast.For: "for",
    ast.Return: "return",
    ast.Break: "break",
    ast.Continue: "continue",
    ast.Labeled: "labeled",
    ast.Empty: "empty",
}
EXPR_KINDS = {
    ast.Assignment: "assign",
    ast.Binary: "binary",
    ast.Unary: "unary",
    ast.VarRef: "varRef",
    ast.IntLiteral: "intLit",
    ast.BoolLiteral: "boolLit",
    ast.Call: "call",
}


# -- dumping ---------------------------------------------------------------


def _with_pos(obj, node):
    if node.pos is not None:
        obj["line"], obj["col"] = node.pos
    return obj


def expr_to_json(e):
    kind = EXPR_KINDS[type(e)]
    if isinstance(e, ast.Assignment):
        obj = {"kind": kind, "target": e.target, "op": e.op, "value": expr_to_json(e.value)}
    elif isinstance(e, ast.Binary):
        obj = {"kind": kind, "left": expr_to_json(e.left), "op": e.op, "right": expr_to_json(e.right)}
    elif isinstance(e, ast.Unary):
        obj = {"kind": kind, "op": e.op, "operand": expr_to_json(e.operand)}
    elif isinstance(e, ast.VarRef):
        obj = {"kind": kind, "name": e.name}
    elif isinstance(e, (ast.IntLiteral, ast.BoolLiteral)):
        obj = {"kind": kind, "value": e.value}
    else:
        obj = {"kind": kind, "name": e.name, "args": [expr_to_json(a) for a in e.args]}
    return _with_pos(obj, e)


def _opt(fn, value):
    return None if value is None else fn(value)


def stmt_to_json(s):
    kind = STMT_KINDS[type(s)]
    if isinstance(s, ast.Block):
        obj = {"kind": kind, "statements": [stmt_to_json(c) for c in s.statements]}
    elif isinstance(s, ast.LocalVarDecl):
        obj = {"kind": kind, "type": s.type, "name": s.name, "init": _opt(expr_to_json, s.init)}
    elif isinstance(s, ast.ExprStmt):
        obj = {"kind": kind, "expr": expr_to_json(s.expr)}
    elif isinstance(s, ast.If):
        obj = {"kind": kind, "cond": expr_to_json(s.cond), "then": stmt_to_json(s.then),
               "else": _opt(stmt_to_json, s.else_)}
    elif isinstance(s, ast.While):
        obj = {"kind": kind, "cond": expr_to_json(s.cond), "body": stmt_to_json(s.body)}
    elif isinstance(s, ast.For):
        obj = {"kind": kind, "init": _opt(stmt_to_json, s.init), "cond": _opt(expr_to_json, s.cond),
               "update": _opt(expr_to_json, s.update), "body": stmt_to_json(s.body)}
    elif isinstance(s, ast.Return):
        obj = {"kind": kind, "value": _opt(expr_to_json, s.value)}
    elif isinstance(s, (ast.Break, ast.Continue)):
        obj = {"kind": kind, "label": s.label}
    elif isinstance(s, ast.Labeled):
        obj = {"kind": kind, "label": s.label, "body": stmt_to_json(s.body)}
    else:
        obj = {"kind": kind}
    return _with_pos(obj, s)


def unit_to_json(unit: ast.CompilationUnit) -> dict:
    return {
        "classes": [
            _with_pos({
                "name": cls.name,
                "methods": [
                    _with_pos({
                        "name": m.name,
                        "returns": m.return_type,
                        "params": [_with_pos({"name": p.name, "type": p.type}, p) for p in m.params],
                        "body": stmt_to_json(m.body),
                    }, m)
                    for m in cls.methods
                ],
            }, cls)
            for cls in unit.classes
        ]
    }


def dump_ast_json(unit: ast.CompilationUnit, indent=None) -> str:
    return json.dumps(unit_to_json(unit), indent=indent)


# -- loading ---------------------------------------------------------------


class _Loader:
    def field(self, obj, key, path, types, optional=False):
        if not isinstance(obj, dict):
            raise SchemaError(path, "expected an object")
        if key not in obj or (optional and obj[key] is None):
            if optional:
                return None
            raise SchemaError(f"{path}.{key}", "missing required field")
        value = obj[key]
        if types is not None and (not isinstance(value, types) or
                                  (isinstance(value, bool) and bool not in _as_tuple(types))):
            raise SchemaError(f"{path}.{key}", f"expected {_type_name(types)}")
        return value

    def pos(self, obj):
        if isinstance(obj.get("line"), int) and isinstance(obj.get("col"), int):
            return (obj["line"], obj["col"])
        return None

    def op(self, obj, path, allowed):
        op = self.field(obj, "op", path, str)
        if op not in allowed:
            raise SchemaError(f"{path}.op", f"unknown operator {op!r}")
        return op

    def expr(self, obj, path):
        kind = self.field(obj, "kind", path, str)
        pos = self.pos(obj)
        if kind == "assign":
            return ast.Assignment(self.field(obj, "target", path, str), self.op(obj, path, ast.ASSIGN_OPS),
                                  self.expr(self.field(obj, "value", path, dict), f"{path}.value"), pos=pos)
        if kind == "binary":
            return ast.Binary(self.expr(self.field(obj, "left", path, dict), f"{path}.left"),
                              self.op(obj, path, ast.BINARY_OPS),
                              self.expr(self.field(obj, "right", path, dict), f"{path}.right"), pos=pos)
        if kind == "unary":
            op = self.op(obj, path, ast.UNARY_OPS)
            operand = self.expr(self.field(obj, "operand", path, dict), f"{path}.operand")
            if op not in ("-", "!") and not isinstance(operand, ast.VarRef):
                raise SchemaError(f"{path}.operand", f"{op} needs a plain identifier")
            return ast.Unary(op, operand, pos=pos)
        if kind == "varRef":
            return ast.VarRef(self.field(obj, "name", path, str), pos=pos)
        if kind == "intLit":
            return ast.IntLiteral(self.field(obj, "value", path, int), pos=pos)
        if kind == "boolLit":
            return ast.BoolLiteral(self.field(obj, "value", path, bool), pos=pos)
        if kind == "call":
            args = self.field(obj, "args", path, list)
            return ast.Call(self.field(obj, "name", path, str),
                            tuple(self.expr(a, f"{path}.args[{i}]") for i, a in enumerate(args)), pos=pos)
        raise SchemaError(f"{path}.kind", f"unknown expression kind {kind!r}")

    def opt_expr(self, obj, key, path):
        value = self.field(obj, key, path, dict, optional=True)
        return None if value is None else self.expr(value, f"{path}.{key}")

    def opt_stmt(self, obj, key, path):
        value = self.field(obj, key, path, dict, optional=True)
        return None if value is None else self.stmt(value, f"{path}.{key}")

    def stmt(self, obj, path):
        kind = self.field(obj, "kind", path, str)
        pos = self.pos(obj)
        if kind == "block":
            items = self.field(obj, "statements", path, list)
            return ast.Block(tuple(self.stmt(s, f"{path}.statements[{i}]") for i, s in enumerate(items)), pos=pos)
        if kind == "localVar":
            return ast.LocalVarDecl(self.field(obj, "type", path, str), self.field(obj, "name", path, str),
                                    self.opt_expr(obj, "init", path), pos=pos)
        if kind == "exprStmt":
            return ast.ExprStmt(self.expr(self.field(obj, "expr", path, dict), f"{path}.expr"), pos=pos)
        if kind == "if":
            return ast.If(self.expr(self.field(obj, "cond", path, dict), f"{path}.cond"),
                          self.stmt(self.field(obj, "then", path, dict), f"{path}.then"),
                          self.opt_stmt(obj, "else", path), pos=pos)
        if kind == "while":
            return ast.While(self.expr(self.field(obj, "cond", path, dict), f"{path}.cond"),
                             self.stmt(self.field(obj, "body", path, dict), f"{path}.body"), pos=pos)
        if kind == "for":
            return ast.For(self.opt_stmt(obj, "init", path), self.opt_expr(obj, "cond", path),
                           self.opt_expr(obj, "update", path),
                           self.stmt(self.field(obj, "body", path, dict), f"{path}.body"), pos=pos)
        if kind == "return":
            return ast.Return(self.opt_expr(obj, "value", path), pos=pos)
        if kind in ("break", "continue"):
            node = ast.Break if kind == "break" else ast.Continue
            return node(self.field(obj, "label", path, str, optional=True), pos=pos)
        if kind == "labeled":
            return ast.Labeled(self.field(obj, "label", path, str),
                               self.stmt(self.field(obj, "body", path, dict), f"{path}.body"), pos=pos)
        if kind == "empty":
            return ast.Empty(pos=pos)
        raise SchemaError(f"{path}.kind", f"unknown statement kind {kind!r}")

    def method(self, obj, path):
        name = self.field(obj, "name", path, str)
        params = tuple(
            ast.Param(self.field(p, "name", f"{path}.params[{i}]", str),
                      self.field(p, "type", f"{path}.params[{i}]", str), pos=self.pos(p))
            for i, p in enumerate(self.field(obj, "params", path, list))
        )
        body = self.stmt(self.field(obj, "body", path, dict), f"{path}.body")
        if not isinstance(body, ast.Block):
            raise SchemaError(f"{path}.body", "method body must be a block")
        returns = self.field(obj, "returns", path, str, optional=True) or "void"
        return ast.MethodDecl(name, params, body, return_type=returns, pos=self.pos(obj))

    def unit(self, doc):
        if not isinstance(doc, dict):
            raise SchemaError("$", "expected an object")
        classes = []
        for i, cls in enumerate(self.field(doc, "classes", "$", list)):
            path = f"classes[{i}]"
            name = self.field(cls, "name", path, str)
            methods = tuple(self.method(m, f"{path}.methods[{j}]")
                            for j, m in enumerate(self.field(cls, "methods", path, list)))
            classes.append(ast.ClassDecl(name, methods, pos=self.pos(cls)))
        return ast.CompilationUnit(tuple(classes))


def _as_tuple(types):
    return types if isinstance(types, tuple) else (types,)


def _type_name(types):
    names = {dict: "object", list: "array", str: "string", int: "integer", bool: "boolean"}
    return " or ".join(names.get(t, t.__name__) for t in _as_tuple(types))


def load_ast_json(document: str, check: bool = True) -> ast.CompilationUnit:
    """Load a JSON AST document; raises :class:`SchemaError` naming the offending path."""
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"invalid JSON: {exc}") from exc
    unit = _Loader().unit(doc)
    if check:
        check_unit(unit)
    return unit
