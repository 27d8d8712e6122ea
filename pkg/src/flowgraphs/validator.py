"""Check ``cfNext`` / ``cfPrev`` / ``dfNext`` assertions against a flow graph.

Assertion files hold one assertion per line::

    cfNext: "int b = a + 1" --> "return b";

Blank lines and lines starting with ``#`` are ignored.  Instructions are
looked up by their ``txt``.
"""
from __future__ import annotations

import json
import re
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Dict, List

from .errors import FlowgraphsError
from .model import FlowGraph, FlowInstr

ASSERTION_RE = re.compile(
    r'(?P<command>(cfNext|cfPrev|dfNext)):\s*"(?P<source>[^"]*)"\s*-->\s*"(?P<target>[^"]*)"(;)?'
)

HOLDS = "holds"
VIOLATED = "violated"
UNKNOWN_SOURCE = "unknown-source"
UNKNOWN_TARGET = "unknown-target"
AMBIGUOUS = "ambiguous"
VERDICTS = (HOLDS, VIOLATED, UNKNOWN_SOURCE, UNKNOWN_TARGET, AMBIGUOUS)


class MalformedAssertion(FlowgraphsError):
    def __init__(self, line: int, content: str):
        self.line = line
        self.content = content
        super().__init__(f"line {line}: malformed assertion: {content!r}")


@dataclass(frozen=True)
class ValidationAssertion:
    command: str
    source: str
    target: str
    line: int = 0
    text: str = field(default="", compare=False)


def parse_assertions(text: str) -> List[ValidationAssertion]:
    assertions = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = ASSERTION_RE.fullmatch(line)
        if m is None:
            raise MalformedAssertion(number, raw)
        assertions.append(ValidationAssertion(m["command"], m["source"], m["target"], number, line))
    return assertions


@dataclass
class ValidationReport:
    results: List[tuple] = field(default_factory=list)  # (assertion, verdict)

    @property
    def counts(self) -> Counter:
        return Counter(verdict for _, verdict in self.results)

    @property
    def ok(self) -> bool:
        return all(verdict == HOLDS for _, verdict in self.results)

    def summary(self) -> Dict[str, int]:
        counts = self.counts
        return {
            "total": len(self.results),
            "holds": counts[HOLDS],
            "violated": counts[VIOLATED],
            "unknownSource": counts[UNKNOWN_SOURCE],
            "unknownTarget": counts[UNKNOWN_TARGET],
            "ambiguous": counts[AMBIGUOUS],
        }

    def lines(self) -> List[str]:
        return [f"{verdict}\t{a.line}\t{a.text or _render(a)}" for a, verdict in self.results]

    def render(self) -> str:
        return "\n".join(self.lines() + [json.dumps(self.summary())]) + "\n"


def _render(a: ValidationAssertion) -> str:
    return f'{a.command}: "{a.source}" --> "{a.target}";'


def index_instructions(graph: FlowGraph) -> Dict[str, List[FlowInstr]]:
    index: Dict[str, List[FlowInstr]] = defaultdict(list)
    for instr in graph.instrs:
        index[instr.txt].append(instr)
    return index


def verdict(index, a: ValidationAssertion) -> str:
    sources = index.get(a.source)
    if not sources:
        return UNKNOWN_SOURCE
    targets = index.get(a.target)
    if not targets:
        return UNKNOWN_TARGET
    if len(sources) > 1 or len(targets) > 1:
        return AMBIGUOUS
    source, target = sources[0], targets[0]
    links = {"cfNext": source._cf_next, "cfPrev": source._cf_prev, "dfNext": source._df_next}[a.command]
    return HOLDS if target in links else VIOLATED


def check(graph: FlowGraph, assertions) -> ValidationReport:
    index = index_instructions(graph)
    return ValidationReport([(a, verdict(index, a)) for a in assertions])
