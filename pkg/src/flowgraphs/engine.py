"""A small rule-based model-to-model transformation engine.

Rules are classes.  A rule transforms inputs of its ``input_kind`` into an
output object in two steps: :meth:`Rule.create_output` builds the output,
then the rule's dependencies are evaluated and :meth:`Rule.transform` fills
the output in.  Within one :class:`TransformationContext` a rule runs at most
once per input; later calls return the same output object.

A rule may declare ``instantiates = HubRule``.  Calling the hub on an input
that matches the instantiating rule's (narrower) ``input_kind`` lets the
instantiating rule create the output instead, while the hub's own
dependencies and ``transform`` still run.  The memo entry is keyed on the
rule the caller asked for.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple, Type

from .errors import FlowgraphsError


class TransformationError(FlowgraphsError):
    pass


class RuleNotRegistered(TransformationError):
    pass


class InstantiationConflict(TransformationError):
    pass


class InputKindMismatch(TransformationError):
    pass


@dataclass(frozen=True)
class Dependency:
    """Call ``target_rule`` on every input picked by ``selector``.

    ``selector`` maps the parent input to a sequence of inputs (``None``
    entries are skipped).  ``persistor(parent_output, child_output)`` writes
    the child's result into the parent's output.
    """

    selector: Callable[[Any], Iterable[Any]]
    target_rule: Type["Rule"]
    persistor: Optional[Callable[[Any, Any], None]] = None


def require(selector, target_rule, persistor=None) -> Dependency:
    return Dependency(selector, target_rule, persistor)


class Rule:
    input_kind: type = object
    instantiates: Optional[Type["Rule"]] = None

    @property
    def name(self) -> str:
        return type(self).__name__

    def create_output(self, input, context: "TransformationContext"):
        return None

    def requirements(self) -> List[Dependency]:
        return []

    def transform(self, input, output, context: "TransformationContext") -> None:
        pass

    def __repr__(self):
        return f"<rule {self.name}>"


class _Missing:
    pass


_MISSING = _Missing()


class TransformationContext:
    """One transformation pass: registered rules, memo table and trace.

    ``data`` is free-form scratch space shared by the rules of this pass.
    Contexts are not thread-safe; use one per thread.
    """

    def __init__(self, rules: Iterable[Rule]):
        self.rules: Dict[type, Rule] = {}
        for rule in rules:
            if not isinstance(rule, Rule):
                rule = rule()
            self.rules[type(rule)] = rule
        self._check_instantiation_graph()
        self._requirements = {cls: tuple(r.requirements()) for cls, r in self.rules.items()}
        self._instantiators: Dict[type, List[Tuple[int, Rule]]] = {}
        for rule in self.rules.values():
            parent, depth = type(rule).instantiates, 1
            while parent is not None:
                self._instantiators.setdefault(parent, []).append((depth, rule))
                parent, depth = parent.instantiates, depth + 1
        self._dispatch: Dict[Tuple[type, type], Rule] = {}
        self._plans: Dict[Tuple[type, type], tuple] = {}
        # key -> (input, output); keeping the input alive pins its id()
        self._memo: Dict[Tuple[type, int], Tuple[Any, Any]] = {}
        self.data: Dict[str, Any] = {}
        self.create_count = 0

    def _check_instantiation_graph(self):
        for cls in self.rules:
            seen = {cls}
            parent = cls.instantiates
            child = cls
            while parent is not None:
                if parent in seen:
                    raise TransformationError(f"instantiation cycle through {cls.__name__}")
                if parent not in self.rules:
                    raise RuleNotRegistered(f"{child.__name__} instantiates unregistered {parent.__name__}")
                if not issubclass(child.input_kind, parent.input_kind):
                    raise TransformationError(
                        f"{child.__name__}.input_kind is not a subtype of {parent.__name__}.input_kind")
                seen.add(parent)
                child, parent = parent, parent.instantiates

    def rule(self, rule) -> Rule:
        cls = rule if isinstance(rule, type) else type(rule)
        try:
            return self.rules[cls]
        except KeyError:
            raise RuleNotRegistered(f"rule {cls.__name__} is not registered") from None

    def resolve_instantiation(self, hub, input) -> Rule:
        hub = self.rule(hub)
        kind = type(input)
        cached = self._dispatch.get((type(hub), kind))
        if cached is not None:
            return cached
        if not isinstance(input, hub.input_kind):
            raise InputKindMismatch(f"{hub.name} expects {hub.input_kind.__name__}, got {kind.__name__}")
        best_depth, best = 0, []
        for depth, rule in self._instantiators.get(type(hub), ()):
            if not isinstance(input, rule.input_kind):
                continue
            if depth > best_depth:
                best_depth, best = depth, [rule]
            elif depth == best_depth:
                best.append(rule)
        if len(best) > 1:
            names = ", ".join(sorted(r.name for r in best))
            raise InstantiationConflict(f"{names} all instantiate {hub.name} for {kind.__name__}")
        chosen = best[0] if best else hub
        self._dispatch[(type(hub), kind)] = chosen
        return chosen

    def call(self, rule, input):
        """Transform ``input`` with ``rule`` (memoized)."""
        hub_cls = rule if isinstance(rule, type) else type(rule)
        key = (hub_cls, id(input))
        hit = self._memo.get(key)
        if hit is not None:
            return hit[1]
        plan = self._plans.get((hub_cls, type(input)))
        if plan is None:
            plan = self._plan(hub_cls, input)
        concrete, chain, requirements = plan
        output = concrete.create_output(input, self)
        self.create_count += 1
        # record before requirements so that cyclic dependencies terminate
        self._memo[key] = (input, output)
        for dep in requirements:
            selected = dep.selector(input)
            if selected is None:
                continue
            for sub in selected:
                if sub is None:
                    continue
                child = self.call(dep.target_rule, sub)
                if dep.persistor is not None:
                    dep.persistor(output, child)
        for rule_in_chain in chain:
            rule_in_chain.transform(input, output, self)
        return output

    def _plan(self, hub_cls, input):
        """Dispatch result for a (hub, input type) pair: concrete rule, hub-first chain, requirements."""
        hub = self.rule(hub_cls)
        concrete = self.resolve_instantiation(hub, input)
        chain = [concrete]
        cls = type(concrete)
        while cls is not hub_cls:
            cls = cls.instantiates
            chain.append(self.rules[cls])
        chain.reverse()
        requirements = tuple(dep for r in chain for dep in self._requirements[type(r)])
        plan = (concrete, tuple(chain), requirements)
        self._plans[(hub_cls, type(input))] = plan
        return plan

    def trace(self, rule, input, default=None):
        """Memoized output of ``rule`` for ``input``; never triggers a transformation."""
        hit = self._memo.get((self.rule(rule).__class__, id(input)))
        if hit is None:
            return default
        return hit[1]

    def has_trace(self, rule, input) -> bool:
        return (self.rule(rule).__class__, id(input)) in self._memo

    def trace_all(self, rule) -> List[Tuple[Any, Any]]:
        """All ``(input, output)`` pairs recorded for ``rule``, in call order."""
        cls = self.rule(rule).__class__
        return [pair for (kind, _), pair in self._memo.items() if kind is cls]


def call_rule(context: TransformationContext, rule, input):
    return context.call(rule, input)


def resolve_instantiation(context: TransformationContext, hub, input) -> Rule:
    return context.resolve_instantiation(hub, input)


def trace_lookup(context: TransformationContext, rule, input):
    return context.trace(rule, input)
