"""End-to-end pipeline with per-phase timing."""
from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .control_flow import CONTROL_FLOW_RULES, derive_control_flow
from .data_flow import set_data_flow
from .engine import TransformationContext
from .frontend import ast, load_ast_json, parse_java
from .model import FlowGraph
from .serialize import serialize_dot_all, serialize_xml
from .structure import STRUCTURE_RULES, build_structure_graph

PHASES = ("read_input", "transformation", "control_flow", "data_flow", "write_output")


def new_context() -> TransformationContext:
    return TransformationContext(STRUCTURE_RULES + CONTROL_FLOW_RULES)


@dataclass
class Timings:
    """Accumulated nanoseconds per phase (``perf_counter_ns``)."""

    ns: Dict[str, int] = field(default_factory=lambda: dict.fromkeys(PHASES, 0))

    @contextmanager
    def phase(self, name: str):
        start = time.perf_counter_ns()
        try:
            yield
        finally:
            self.ns[name] += time.perf_counter_ns() - start

    def micros(self) -> Dict[str, float]:
        return {name: value / 1000 for name, value in self.ns.items()}

    def csv(self) -> str:
        rows = ["phase,micros"] + [f"{name},{value / 1000:.1f}" for name, value in self.ns.items()]
        return "\n".join(rows) + "\n"


@dataclass
class PipelineOptions:
    control_flow: bool = True
    data_flow: bool = True
    strategy: str = "traversal"

    def __post_init__(self):
        if self.data_flow and not self.control_flow:
            raise ValueError("data flow needs control flow")


def transform_method(method: ast.MethodDecl, class_name: Optional[str] = None,
                     options: PipelineOptions = PipelineOptions(),
                     timings: Optional[Timings] = None) -> FlowGraph:
    """Run structure, control-flow and data-flow phases on one method."""
    timings = timings or Timings()
    context = new_context()
    with timings.phase("transformation"):
        graph = build_structure_graph(method, context, class_name)
    if options.control_flow:
        with timings.phase("control_flow"):
            derive_control_flow(graph, method, context)
    if options.data_flow:
        with timings.phase("data_flow"):
            set_data_flow(graph, options.strategy)
    return graph


def transform_unit(unit: ast.CompilationUnit, options: PipelineOptions = PipelineOptions(),
                   timings: Optional[Timings] = None) -> List[FlowGraph]:
    timings = timings or Timings()
    return [transform_method(m, cls, options, timings) for cls, m in unit.methods()]


def read_unit(text: str, ast_json: bool = False) -> ast.CompilationUnit:
    return load_ast_json(text) if ast_json else parse_java(text)


def render(graphs: List[FlowGraph], fmt: str = "xml", edges: str = "both") -> str:
    if fmt == "xml":
        return serialize_xml(graphs)
    if fmt == "dot":
        return serialize_dot_all(graphs, edges)
    raise ValueError(f"unknown output format {fmt!r}")


def run_source(text: str, options: PipelineOptions = PipelineOptions(), fmt: str = "xml",
               edges: str = "both", ast_json: bool = False, timings: Optional[Timings] = None):
    """Parse, transform and render ``text``; returns ``(graphs, rendered)``."""
    timings = timings or Timings()
    with timings.phase("read_input"):
        unit = read_unit(text, ast_json)
    graphs = transform_unit(unit, options, timings)
    with timings.phase("write_output"):
        rendered = render(graphs, fmt, edges)
    return graphs, rendered
