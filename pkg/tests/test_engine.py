import pytest

from flowgraphs.engine import (InputKindMismatch, InstantiationConflict, Rule, RuleNotRegistered,
                               TransformationContext, TransformationError, call_rule, require,
                               resolve_instantiation, trace_lookup)
from flowgraphs.frontend import ast, parse_expression
from flowgraphs.structure import (EXPRESSION_RULES, Assignment2Info, Expression2Info, ExpressionInfo,
                                  render_expression)
from flowgraphs.model import VarDef


class Counting(Rule):
    input_kind = ast.Node

    def __init__(self):
        self.created = 0
        self.transformed = 0

    def create_output(self, input, context):
        self.created += 1
        return {"input": input}

    def transform(self, input, output, context):
        self.transformed += 1


def test_memoized_single_call():
    ctx = TransformationContext([Counting])
    node = ast.VarRef("a")
    first = call_rule(ctx, Counting, node)
    assert call_rule(ctx, Counting, node) is first
    rule = ctx.rule(Counting)
    assert rule.created == 1 and rule.transformed == 1


def test_distinct_equal_inputs_get_distinct_outputs():
    ctx = TransformationContext([Counting])
    a, b = ast.VarRef("a"), ast.VarRef("a")
    assert a == b and a is not b
    assert call_rule(ctx, Counting, a) is not call_rule(ctx, Counting, b)
    assert ctx.rule(Counting).created == 2


class Text(Rule):
    """A hub with an empty body, like the expression hub of the structure phase."""

    input_kind = ast.Expression

    def __init__(self):
        self.hub_transforms = []

    def create_output(self, input, context):
        return ["hub"]

    def transform(self, input, output, context):
        self.hub_transforms.append(input)


class AssignmentText(Rule):
    input_kind = ast.Assignment
    instantiates = Text

    def create_output(self, input, context):
        return ["assignment"]

    def transform(self, input, output, context):
        output.append("filled")


def test_hub_dispatch():
    ctx = TransformationContext([Text, AssignmentText])
    node = parse_expression("a = 1")
    out = call_rule(ctx, Text, node)
    assert out == ["assignment", "filled"]
    assert ctx.rule(Text).hub_transforms == [node]
    # the memo is keyed on the rule that was asked for
    assert trace_lookup(ctx, Text, node) is out
    assert trace_lookup(ctx, AssignmentText, node) is None


def test_hub_fallback_and_resolution():
    ctx = TransformationContext([Text, AssignmentText])
    assert resolve_instantiation(ctx, Text, parse_expression("a = 1")) is ctx.rule(AssignmentText)
    assert resolve_instantiation(ctx, Text, ast.IntLiteral(3)) is ctx.rule(Text)
    assert call_rule(ctx, Text, ast.IntLiteral(3)) == ["hub"]


class OtherAssignmentText(Rule):
    input_kind = ast.Assignment
    instantiates = Text


def test_sibling_conflict():
    ctx = TransformationContext([Text, AssignmentText, OtherAssignmentText])
    with pytest.raises(InstantiationConflict):
        call_rule(ctx, Text, parse_expression("a = 1"))
    # inputs the siblings do not claim are unaffected
    assert call_rule(ctx, Text, ast.IntLiteral(1)) == ["hub"]


class CompoundText(Rule):
    """Two levels below the hub: the deeper chain wins over AssignmentText."""

    input_kind = ast.Assignment
    instantiates = AssignmentText

    def create_output(self, input, context):
        return ["compound"]


def test_longest_chain_wins_and_whole_chain_transforms():
    ctx = TransformationContext([Text, AssignmentText, CompoundText])
    node = parse_expression("a += 1")
    out = call_rule(ctx, Text, node)
    assert out == ["compound", "filled"]
    assert ctx.rule(Text).hub_transforms == [node]


def test_trace_before_call_is_absent():
    ctx = TransformationContext([Counting])
    node = ast.IntLiteral(1)
    assert trace_lookup(ctx, Counting, node) is None
    assert not ctx.has_trace(Counting, node)
    out = call_rule(ctx, Counting, node)
    assert ctx.trace_all(Counting) == [(node, out)]


def test_unregistered_and_mismatched():
    ctx = TransformationContext([Text])
    with pytest.raises(RuleNotRegistered):
        call_rule(ctx, Counting, ast.IntLiteral(1))
    with pytest.raises(InputKindMismatch):
        call_rule(ctx, Text, ast.Return(None))
    with pytest.raises(RuleNotRegistered):
        TransformationContext([AssignmentText])


class Wider(Rule):
    input_kind = ast.Node
    instantiates = Text


def test_instantiating_rule_must_narrow():
    with pytest.raises(TransformationError):
        TransformationContext([Text, Wider])


class Parent(Rule):
    input_kind = ast.Binary

    def create_output(self, input, context):
        return []

    def requirements(self):
        return [require(lambda b: (b.left, b.right), Child, lambda out, child: out.append(child))]


class Child(Rule):
    input_kind = ast.Expression

    def create_output(self, input, context):
        return type(input).__name__


def test_dependencies_and_persistors():
    ctx = TransformationContext([Parent, Child])
    out = call_rule(ctx, Parent, parse_expression("a + 1"))
    assert out == ["VarRef", "IntLiteral"]
    assert ctx.create_count == 3


class Cyclic(Rule):
    """Requires itself on the same input: terminates because the memo is written first."""

    input_kind = ast.VarRef

    def create_output(self, input, context):
        return {"self": None}

    def requirements(self):
        return [require(lambda v: (v,), Cyclic, lambda out, child: out.__setitem__("self", child))]


def test_cyclic_requirement_terminates():
    ctx = TransformationContext([Cyclic])
    out = call_rule(ctx, Cyclic, ast.VarRef("a"))
    assert out["self"] is out


def test_thousand_calls_one_creation():
    ctx = TransformationContext([Counting])
    node = ast.VarRef("x")
    outs = {id(call_rule(ctx, Counting, node)) for _ in range(1000)}
    assert len(outs) == 1 and ctx.rule(Counting).created == 1


# -- the structure phase's expression rules -------------------------------


def scope(*names):
    return {n: VarDef(n) for n in names}


def names(vars_):
    return [v.name for v in vars_]


@pytest.mark.parametrize("text, rendered, defined, used", [
    ("a = b + 1", "a = b + 1", "a", ["b"]),
    ("a++", "a++", "a", ["a"]),
    ("a", "a", None, ["a"]),
    ("a += b", "a += b", "a", ["a", "b"]),
    ("--b", "--b", "b", ["b"]),
    ("g(a, a + b)", "g(a, a + b)", None, ["a", "b"]),
    ("!(a < 3) || true", "!(a < 3) || true", None, ["a"]),
    ("7", "7", None, []),
])
def test_expression_info(text, rendered, defined, used):
    info = render_expression(parse_expression(text), scope("a", "b"))
    assert isinstance(info, ExpressionInfo)
    assert info.text == rendered
    assert (info.defined_variable.name if info.defined_variable else None) == defined
    assert sorted(names(info.used_variables)) == used


def test_expression_rules_dispatch_assignments():
    ctx = TransformationContext(EXPRESSION_RULES)
    assert resolve_instantiation(ctx, Expression2Info, parse_expression("a = 1")) is ctx.rule(Assignment2Info)
