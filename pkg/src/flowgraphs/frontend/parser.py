"""Tokenizer and recursive-descent parser for the Java subset."""
from __future__ import annotations

import re
from typing import List, NamedTuple

from ..errors import SyntaxError
from . import ast
from .semantics import check_unit

KEYWORDS = {
    "class", "void", "if", "else", "while", "for", "return",
    "break", "continue", "true", "false",
}
MODIFIERS = {"public", "private", "protected", "static", "final"}

# Java keywords that name constructs outside the subset; seeing one is a hard error.
UNSUPPORTED = {
    "abstract", "assert", "case", "catch", "default", "do", "enum", "extends",
    "finally", "goto", "implements", "import", "instanceof", "interface",
    "native", "new", "package", "super", "switch", "synchronized", "this",
    "throw", "throws", "transient", "try", "volatile", "null", "const",
}

OPERATORS = [
    "++", "--", "+=", "-=", "*=", "/=", "%=", "<=", ">=", "==", "!=", "&&", "||",
    "+", "-", "*", "/", "%", "<", ">", "=", "!",
    "(", ")", "{", "}", ";", ",", ":", ".",
]

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\f]+|\n)
    |(?P<line_comment>//[^\n]*)
    |(?P<block_comment>/\*.*?\*/)
    |(?P<ident>[A-Za-z_$][A-Za-z0-9_$]*)
    |(?P<int>[0-9]+)
    |(?P<op>%s)
    """ % "|".join(re.escape(op) for op in OPERATORS),
    re.VERBOSE | re.DOTALL,
)


class Token(NamedTuple):
    kind: str  # ident, keyword, int, op, eof
    value: str
    line: int
    col: int

    @property
    def pos(self):
        return (self.line, self.col)


def tokenize(source: str) -> List[Token]:
    tokens = []
    line, line_start = 1, 0
    i = 0
    n = len(source)
    while i < n:
        m = _TOKEN_RE.match(source, i)
        if m is None:
            raise SyntaxError(f"unexpected character {source[i]!r}", (line, i - line_start + 1))
        kind = m.lastgroup
        text = m.group()
        col = i - line_start + 1
        if kind == "ident":
            if text in UNSUPPORTED:
                raise SyntaxError(f"unsupported keyword {text!r}", (line, col))
            tokens.append(Token("keyword" if text in KEYWORDS else "ident", text, line, col))
        elif kind == "int":
            tokens.append(Token("int", text, line, col))
        elif kind == "op":
            tokens.append(Token("op", text, line, col))
        # comments and whitespace may span lines
        newlines = text.count("\n")
        if newlines:
            line += newlines
            line_start = i + text.rindex("\n") + 1
        i = m.end()
    tokens.append(Token("eof", "", line, i - line_start + 1))
    return tokens


# Binary operator precedence levels, loosest first.
BINARY_LEVELS = [
    ("||",),
    ("&&",),
    ("==", "!="),
    ("<", ">", "<=", ">="),
    ("+", "-"),
    ("*", "/", "%"),
]


class Parser:
    def __init__(self, source: str):
        self.tokens = tokenize(source)
        self.index = 0

    # -- token helpers -----------------------------------------------------

    @property
    def tok(self) -> Token:
        return self.tokens[self.index]

    def peek(self, offset=1) -> Token:
        return self.tokens[min(self.index + offset, len(self.tokens) - 1)]

    def at(self, value: str) -> bool:
        tok = self.tok
        return tok.kind in ("op", "keyword") and tok.value == value

    def advance(self) -> Token:
        tok = self.tok
        if tok.kind != "eof":
            self.index += 1
        return tok

    def error(self, expected):
        tok = self.tok
        found = "end of input" if tok.kind == "eof" else repr(tok.value)
        raise SyntaxError(f"unexpected {found}", tok.pos, expected)

    def expect(self, value: str) -> Token:
        if not self.at(value):
            self.error([value])
        return self.advance()

    def accept(self, value: str) -> bool:
        if self.at(value):
            self.advance()
            return True
        return False

    def ident(self) -> Token:
        if self.tok.kind != "ident":
            self.error(["identifier"])
        return self.advance()

    # -- declarations ------------------------------------------------------

    def compilation_unit(self) -> ast.CompilationUnit:
        classes = []
        while self.tok.kind != "eof":
            classes.append(self.class_decl())
        return ast.CompilationUnit(tuple(classes))

    def skip_modifiers(self):
        while self.tok.kind == "ident" and self.tok.value in MODIFIERS:
            self.advance()

    def class_decl(self) -> ast.ClassDecl:
        self.skip_modifiers()
        start = self.expect("class")
        name = self.ident().value
        self.expect("{")
        methods = []
        while not self.at("}"):
            if self.tok.kind == "eof":
                self.error(["}"])
            methods.append(self.method_decl())
        self.expect("}")
        return ast.ClassDecl(name, tuple(methods), pos=start.pos)

    def type_name(self) -> str:
        if self.at("void"):
            return self.advance().value
        return self.ident().value

    def method_decl(self) -> ast.MethodDecl:
        self.skip_modifiers()
        start = self.tok
        return_type = self.type_name()
        name = self.ident().value
        self.expect("(")
        params = []
        if not self.at(")"):
            while True:
                ptype = self.ident()
                pname = self.ident()
                params.append(ast.Param(pname.value, ptype.value, pos=ptype.pos))
                if not self.accept(","):
                    break
        self.expect(")")
        body = self.block()
        return ast.MethodDecl(name, tuple(params), body, return_type=return_type, pos=start.pos)

    # -- statements --------------------------------------------------------

    def block(self) -> ast.Block:
        start = self.expect("{")
        stmts = []
        while not self.at("}"):
            if self.tok.kind == "eof":
                self.error(["}"])
            stmts.append(self.statement())
        self.expect("}")
        return ast.Block(tuple(stmts), pos=start.pos)

    def statement(self) -> ast.Statement:
        tok = self.tok
        if self.at("{"):
            return self.block()
        if self.at(";"):
            self.advance()
            return ast.Empty(pos=tok.pos)
        if self.at("if"):
            self.advance()
            self.expect("(")
            cond = self.expression()
            self.expect(")")
            then = self.statement()
            else_ = self.statement() if self.accept("else") else None
            return ast.If(cond, then, else_, pos=tok.pos)
        if self.at("while"):
            self.advance()
            self.expect("(")
            cond = self.expression()
            self.expect(")")
            return ast.While(cond, self.statement(), pos=tok.pos)
        if self.at("for"):
            return self.for_statement()
        if self.at("return"):
            self.advance()
            value = None if self.at(";") else self.expression()
            self.expect(";")
            return ast.Return(value, pos=tok.pos)
        if self.at("break") or self.at("continue"):
            self.advance()
            label = self.ident().value if self.tok.kind == "ident" else None
            self.expect(";")
            node = ast.Break if tok.value == "break" else ast.Continue
            return node(label, pos=tok.pos)
        if tok.kind == "ident" and self.peek().kind == "op" and self.peek().value == ":":
            self.advance()
            self.advance()
            return ast.Labeled(tok.value, self.statement(), pos=tok.pos)
        if tok.kind == "ident" and self.peek().kind == "ident":
            decl = self.local_var_decl()
            self.expect(";")
            return decl
        if tok.kind in ("ident", "int", "keyword", "op"):
            if tok.kind == "keyword" and tok.value not in ("true", "false"):
                self.error(["statement"])
            expr = self.expression()
            self.expect(";")
            return ast.ExprStmt(expr, pos=tok.pos)
        self.error(["statement"])

    def local_var_decl(self) -> ast.LocalVarDecl:
        type_tok = self.ident()
        name = self.ident().value
        init = self.expression() if self.accept("=") else None
        return ast.LocalVarDecl(type_tok.value, name, init, pos=type_tok.pos)

    def for_statement(self) -> ast.For:
        start = self.expect("for")
        self.expect("(")
        init = None
        if not self.at(";"):
            tok = self.tok
            if tok.kind == "ident" and self.peek().kind == "ident":
                init = self.local_var_decl()
            else:
                init = ast.ExprStmt(self.expression(), pos=tok.pos)
        self.expect(";")
        cond = None if self.at(";") else self.expression()
        self.expect(";")
        update = None if self.at(")") else self.expression()
        self.expect(")")
        return ast.For(init, cond, update, self.statement(), pos=start.pos)

    # -- expressions -------------------------------------------------------

    def expression(self) -> ast.Expression:
        tok = self.tok
        left = self.binary(0)
        if self.tok.kind == "op" and self.tok.value in ast.ASSIGN_OPS:
            op_tok = self.advance()
            if not isinstance(left, ast.VarRef):
                raise SyntaxError("assignment target must be a plain identifier", op_tok.pos)
            value = self.expression()  # right-associative
            return ast.Assignment(left.name, op_tok.value, value, pos=tok.pos)
        return left

    def binary(self, level: int) -> ast.Expression:
        if level == len(BINARY_LEVELS):
            return self.unary()
        ops = BINARY_LEVELS[level]
        left = self.binary(level + 1)
        while self.tok.kind == "op" and self.tok.value in ops:
            op = self.advance().value
            right = self.binary(level + 1)
            left = ast.Binary(left, op, right, pos=left.pos)
        return left

    def unary(self) -> ast.Expression:
        tok = self.tok
        if tok.kind == "op" and tok.value in ("-", "!"):
            self.advance()
            return ast.Unary(tok.value, self.unary(), pos=tok.pos)
        if tok.kind == "op" and tok.value in ("++", "--"):
            self.advance()
            operand = self.unary()
            if not isinstance(operand, ast.VarRef):
                raise SyntaxError(f"{tok.value} needs a plain identifier", tok.pos)
            return ast.Unary(tok.value + "pre", operand, pos=tok.pos)
        return self.postfix()

    def postfix(self) -> ast.Expression:
        expr = self.primary()
        while self.tok.kind == "op" and self.tok.value in ("++", "--"):
            op_tok = self.advance()
            if not isinstance(expr, ast.VarRef):
                raise SyntaxError(f"{op_tok.value} needs a plain identifier", op_tok.pos)
            expr = ast.Unary(op_tok.value + "post", expr, pos=expr.pos)
        return expr

    def primary(self) -> ast.Expression:
        tok = self.tok
        if tok.kind == "int":
            self.advance()
            return ast.IntLiteral(int(tok.value), pos=tok.pos)
        if self.at("true") or self.at("false"):
            self.advance()
            return ast.BoolLiteral(tok.value == "true", pos=tok.pos)
        if self.at("("):
            self.advance()
            expr = self.expression()
            self.expect(")")
            return expr
        if tok.kind == "ident":
            self.advance()
            name = tok.value
            if self.at("."):
                # qualified names are only meaningful as call targets
                while self.accept("."):
                    name += "." + self.ident().value
                if not self.at("("):
                    self.error(["("])
            if self.accept("("):
                args = []
                if not self.at(")"):
                    while True:
                        args.append(self.expression())
                        if not self.accept(","):
                            break
                self.expect(")")
                return ast.Call(name, tuple(args), pos=tok.pos)
            return ast.VarRef(name, pos=tok.pos)
        self.error(["expression"])


def parse_java(source: str, check: bool = True) -> ast.CompilationUnit:
    """Parse Java-subset source text into a :class:`CompilationUnit`.

    Raises :class:`flowgraphs.errors.SyntaxError` for anything outside the
    grammar and :class:`flowgraphs.errors.SemanticError` for label, jump and
    declaration-uniqueness violations (unless ``check`` is false).
    """
    unit = Parser(source).compilation_unit()
    if check:
        check_unit(unit)
    return unit


def parse_method(source: str) -> ast.MethodDecl:
    """Convenience: parse a single method declaration wrapped in a dummy class."""
    unit = parse_java("class __M { %s }" % source)
    return unit.classes[0].methods[0]


def parse_expression(source: str) -> ast.Expression:
    parser = Parser(source)
    expr = parser.expression()
    if parser.tok.kind != "eof":
        parser.error(["end of input"])
    return expr
