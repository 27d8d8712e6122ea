"""Random and synthetic Java-subset methods.

:func:`generate_random_method` feeds property tests; the ``*_method``
profile builders feed the benchmark.
"""
from __future__ import annotations

import random
from typing import List, Optional

from .frontend import ast

_CMP = ("<", ">", "<=", ">=", "==", "!=")
_ARITH = ("+", "-", "*", "/", "%")
_COMPOUND = ("+=", "-=", "*=", "/=", "%=")


class _RandomMethod:
    def __init__(self, rng: random.Random, max_statements: int, var_names: List[str]):
        self.rng = rng
        self.budget = max_statements
        self.vars = var_names
        self.labels = 0

    def var(self) -> str:
        return self.rng.choice(self.vars)

    def operand(self, depth: int) -> ast.Expression:
        rng = self.rng
        roll = rng.random()
        if depth <= 0 or roll < 0.45:
            return ast.VarRef(self.var()) if rng.random() < 0.7 else ast.IntLiteral(rng.randint(0, 9))
        if roll < 0.85:
            return ast.Binary(self.operand(depth - 1), rng.choice(_ARITH), self.operand(depth - 1))
        if roll < 0.93:
            return ast.Unary("-", self.operand(depth - 1))
        return ast.Call("f", (self.operand(depth - 1),))

    def condition(self) -> ast.Expression:
        rng = self.rng
        roll = rng.random()
        cmp = ast.Binary(self.operand(1), rng.choice(_CMP), self.operand(1))
        if roll < 0.7:
            return cmp
        if roll < 0.8:
            return ast.Unary("!", cmp)
        if roll < 0.95:
            other = ast.Binary(ast.VarRef(self.var()), rng.choice(_CMP), ast.IntLiteral(rng.randint(0, 9)))
            return ast.Binary(cmp, rng.choice(("&&", "||")), other)
        return ast.BoolLiteral(rng.random() < 0.5)

    def side_effect(self) -> ast.Expression:
        rng = self.rng
        roll = rng.random()
        if roll < 0.55:
            return ast.Assignment(self.var(), "=", self.operand(2))
        if roll < 0.75:
            return ast.Assignment(self.var(), rng.choice(_COMPOUND), self.operand(1))
        if roll < 0.9:
            return ast.Unary(rng.choice(("++pre", "--pre", "++post", "--post")), ast.VarRef(self.var()))
        return ast.Call("g", (self.operand(1),))

    def simple(self) -> ast.Statement:
        return ast.ExprStmt(self.side_effect())

    def block(self, loops: List[Optional[str]], at_least: int = 1) -> ast.Block:
        """A block spending part of the remaining budget; ``loops`` lists enclosing loop labels."""
        stmts = []
        want = self.rng.randint(at_least, max(at_least, min(4, self.budget)))
        while len(stmts) < want and self.budget > 0:
            stmts.append(self.statement(loops))
        return ast.Block(tuple(stmts))

    def loop_body(self, loops) -> ast.Block:
        # one guaranteed plain statement keeps every loop non-empty
        self.budget -= 1
        first = self.simple()
        rest = self.block(loops, at_least=0) if self.budget > 0 and self.rng.random() < 0.7 else ast.Block()
        stmts = [first, *rest.statements]
        self.rng.shuffle(stmts)
        return ast.Block(tuple(stmts))

    def statement(self, loops) -> ast.Statement:
        rng = self.rng
        self.budget -= 1
        roll = rng.random()
        compound_ok = self.budget >= 1
        if roll < 0.32 or (roll < 0.62 and not compound_ok):
            return self.simple()
        if roll < 0.44 and compound_ok:
            then = self.block(loops)
            else_ = self.block(loops) if self.budget > 0 and rng.random() < 0.5 else None
            return ast.If(self.condition(), then, else_)
        if roll < 0.62 and compound_ok:
            label = None
            if rng.random() < 0.25:
                self.labels += 1
                label = f"L{self.labels}"
            inner = loops + [label]
            if rng.random() < 0.5:
                loop = ast.While(self.condition(), self.loop_body(inner))
            else:
                init = None
                if self.budget >= 2 and rng.random() < 0.7:
                    self.budget -= 1
                    init = ast.ExprStmt(ast.Assignment(self.var(), "=", ast.IntLiteral(0)))
                cond = self.condition() if rng.random() < 0.8 else None
                update = self.side_effect() if rng.random() < 0.7 else None
                loop = ast.For(init, cond, update, self.loop_body(inner))
            return ast.Labeled(label, loop) if label else loop
        if roll < 0.80 and loops:
            labels = [lbl for lbl in loops if lbl]
            label = rng.choice(labels) if labels and rng.random() < 0.4 else None
            node = ast.Break if rng.random() < 0.5 else ast.Continue
            return node(label)
        if roll < 0.86:
            value = ast.VarRef(self.var()) if rng.random() < 0.7 else None
            return ast.Return(value)
        if roll < 0.93:
            return ast.Block() if rng.random() < 0.6 else ast.Empty()
        return self.simple()


def generate_random_method(seed: int, max_statements: int = 12, max_vars: int = 4) -> ast.MethodDecl:
    """A random, semantically valid method; deterministic in ``seed``.

    Every variable is a parameter or declared at the top of the body, loops
    always contain at least one plain statement, and ``break``/``continue``
    only appear inside loops.  The total statement count (counting nested
    statements, not blocks) never exceeds ``max_statements``.
    """
    if max_statements < 1 or max_vars < 1:
        raise ValueError("max_statements and max_vars must be at least 1")
    rng = random.Random(seed)
    names = [f"v{i}" for i in range(rng.randint(1, max_vars))]
    params, decls = [], []
    budget = max_statements
    for name in names:
        if budget > 0 and rng.random() < 0.5:
            init = ast.IntLiteral(rng.randint(0, 9)) if rng.random() < 0.8 else None
            decls.append(ast.LocalVarDecl("int", name, init))
            budget -= 1
        else:
            params.append(ast.Param(name, "int"))
    gen = _RandomMethod(rng, budget, names)
    body = []
    while gen.budget > 0:
        body.append(gen.statement([]))
        if rng.random() < 0.1:
            break
    return ast.MethodDecl(f"m{seed}", tuple(params), ast.Block(tuple(decls + body)), return_type="int")


def count_statements(node) -> int:
    """Statements excluding blocks and label wrappers (what the generator budgets)."""
    return sum(1 for n in ast.walk(node)
               if isinstance(n, ast.Statement) and not isinstance(n, (ast.Block, ast.Labeled)))


# -- benchmark profiles ----------------------------------------------------


def _assign(target, a, b, k):
    return ast.ExprStmt(ast.Assignment(target, "=", ast.Binary(ast.VarRef(a), "+", ast.Binary(ast.VarRef(b), "*", ast.IntLiteral(k)))))


def straight_method(size: int, nvars: int = 4) -> ast.MethodDecl:
    """``size`` statements of straight-line code over a few rotating variables."""
    names = [f"x{i}" for i in range(nvars)]
    stmts = _declarations(names, size)
    for i in range(len(stmts), size):
        stmts.append(_assign(names[i % nvars], names[(i + 1) % nvars], names[(i + 3) % nvars], i % 10))
    return ast.MethodDecl("straight", (ast.Param("p", "int"),), ast.Block(tuple(stmts)), return_type="void")


def _declarations(names, size):
    return [ast.LocalVarDecl("int", name, ast.IntLiteral(i)) for i, name in enumerate(names[:size])]


def nested_method(size: int, nvars: int = 4) -> ast.MethodDecl:
    """Chunks of doubly nested for-loops, up to eight assignments per inner body.

    Each chunk starts by writing every variable, and the two loop counters are
    shared by all chunks, so definitions never reach past the next chunk.
    """
    names = [f"x{i}" for i in range(nvars)] + ["i", "k"]
    stmts: List[ast.Statement] = _declarations(names, size)
    used = len(stmts)
    chunk = 0
    while size - used >= 6 + nvars:
        # unconditional writes first, so definitions from earlier chunks end here
        for j in range(nvars):
            stmts.append(_assign(names[j], names[(j + 1) % nvars], names[(j + chunk) % nvars], chunk % 10))
        stmts.append(ast.ExprStmt(ast.Assignment("k", "=", ast.IntLiteral(0))))
        used += nvars + 1
        inner_n = min(8, size - used - 4)
        body = tuple(_assign(names[(chunk + j) % nvars], names[(chunk + j + 1) % nvars],
                             names[(chunk + j + 2) % nvars], j) for j in range(inner_n))
        inner = ast.For(ast.ExprStmt(ast.Assignment("k", "=", ast.IntLiteral(0))),
                        ast.Binary(ast.VarRef("k"), "<", ast.VarRef(names[0])),
                        ast.Unary("++post", ast.VarRef("k")), ast.Block(body))
        outer = ast.For(ast.ExprStmt(ast.Assignment("i", "=", ast.IntLiteral(0))),
                        ast.Binary(ast.VarRef("i"), "<", ast.IntLiteral(10)),
                        ast.Unary("++post", ast.VarRef("i")), ast.Block((inner,)))
        stmts.append(outer)
        used += 4 + inner_n
        chunk += 1
    for j in range(size - used):
        stmts.append(_assign(names[j % nvars], names[(j + 1) % nvars], names[(j + 2) % nvars], j))
    return ast.MethodDecl("nested", (), ast.Block(tuple(stmts)), return_type="void")


def branchy_method(size: int, nvars: int = 4) -> ast.MethodDecl:
    """A sequence of if/else statements (three statements each) writing the same variable on both arms."""
    names = [f"x{i}" for i in range(nvars)]
    stmts: List[ast.Statement] = _declarations(names, size)
    used = len(stmts)
    j = 0
    while size - used >= 3:
        a, b, c = names[j % nvars], names[(j + 1) % nvars], names[(j + 2) % nvars]
        stmts.append(ast.If(ast.Binary(ast.VarRef(a), "<", ast.IntLiteral(j % 10)),
                            ast.Block((_assign(b, a, c, 1),)),
                            ast.Block((_assign(b, c, a, 2),))))
        used += 3
        j += 1
    for k in range(size - used):
        stmts.append(_assign(names[k % nvars], names[(k + 1) % nvars], names[(k + 2) % nvars], k))
    return ast.MethodDecl("branchy", (), ast.Block(tuple(stmts)), return_type="void")


PROFILES = {"straight": straight_method, "nested": nested_method, "branchy": branchy_method}


def profile_unit(profile: str, size: int) -> ast.CompilationUnit:
    method = PROFILES[profile](size)
    return ast.CompilationUnit((ast.ClassDecl("Bench", (method,)),))
