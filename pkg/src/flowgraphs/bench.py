"""Synthetic-size benchmark of the transformation pipeline.

Each (profile, size) cell renders a generated method to Java source, then
runs the whole pipeline on that text ``repeat`` times and keeps the median
of every phase.  Collection is paused while a run is timed, in the same way
:mod:`timeit` does, so allocation-heavy phases are not charged for
collector pauses triggered by earlier garbage.
"""
from __future__ import annotations

import csv
import gc
import io
import statistics
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence

from .frontend import unit_source
from .generator import PROFILES, profile_unit
from .pipeline import PHASES, PipelineOptions, Timings, run_source

DEFAULT_SIZES = (0, 10, 100, 1000)
STRATEGIES = ("traversal", "fixpoint")

COLUMNS = ("profile", "size", "strategy", "instructions", "cf_edges", "df_edges") + PHASES


@dataclass
class BenchRow:
    profile: str
    size: int
    strategy: str
    instructions: int
    cf_edges: int
    df_edges: int
    medians: Dict[str, float] = field(default_factory=dict)  # microseconds
    df_signature: frozenset = field(default=frozenset(), repr=False, compare=False)

    def as_record(self) -> Dict[str, object]:
        record = {name: getattr(self, name) for name in COLUMNS[:6]}
        record.update({phase: f"{self.medians[phase]:.1f}" for phase in PHASES})
        return record


@contextmanager
def _collector_paused():
    was_enabled = gc.isenabled()
    gc.collect()
    gc.disable()
    try:
        yield
    finally:
        if was_enabled:
            gc.enable()


def _df_signature(graphs) -> frozenset:
    return frozenset((g.qualified_name, a.id, b.id) for g in graphs for a, b in g.df_edges())


def measure(source: str, strategy: str = "traversal", repeat: int = 3, profile: str = "",
            size: int = 0) -> BenchRow:
    """Time the pipeline on ``source``; the median is taken per phase."""
    if repeat < 1:
        raise ValueError("repeat must be at least 1")
    options = PipelineOptions(strategy=strategy)
    samples: Dict[str, List[float]] = {phase: [] for phase in PHASES}
    graphs = []
    for _ in range(repeat):
        timings = Timings()
        with _collector_paused():
            graphs, _ = run_source(source, options, timings=timings)
        for phase, micros in timings.micros().items():
            samples[phase].append(micros)
    return BenchRow(
        profile=profile,
        size=size,
        strategy=strategy,
        instructions=sum(len(g.instrs) for g in graphs),
        cf_edges=sum(len(g.cf_edges()) for g in graphs),
        df_edges=sum(len(g.df_edges()) for g in graphs),
        medians={phase: statistics.median(values) for phase, values in samples.items()},
        df_signature=_df_signature(graphs),
    )


def run_bench(sizes: Iterable[int] = DEFAULT_SIZES, profiles: Sequence[str] = ("straight",),
              strategies: Sequence[str] = ("traversal",), repeat: int = 3) -> List[BenchRow]:
    rows = []
    for profile in profiles:
        if profile not in PROFILES:
            raise ValueError(f"unknown profile {profile!r}")
        for size in sizes:
            if size < 0:
                raise ValueError("sizes must be non-negative")
            source = unit_source(profile_unit(profile, size))
            for strategy in strategies:
                rows.append(measure(source, strategy, repeat, profile, size))
    return rows


def mismatches(rows: Sequence[BenchRow]) -> List[tuple]:
    """``(profile, size)`` cells whose strategies disagree on the df edge set."""
    cells: Dict[tuple, List[BenchRow]] = {}
    for row in rows:
        cells.setdefault((row.profile, row.size), []).append(row)
    return [cell for cell, group in cells.items()
            if len({r.df_signature for r in group}) > 1]


def to_csv(rows: Sequence[BenchRow]) -> str:
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row.as_record())
    return out.getvalue()
