"""Access to the golden corpus.

Each program lives in ``corpus/<name>/``::

    input.java      the program (one class, one method)
    assertions.cf   cfNext lines, hand-traced: the complete cf edge list
    assertions.df   dfNext lines: the complete df edge list
    expected.xml    XML snapshot of the full pipeline
    expected.dot    DOT snapshot (cf and df edges)

The ``verdicts`` program is the exception: its assertion files hold one
assertion per verdict kind instead of an edge list.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional

from .pipeline import PipelineOptions, render, transform_unit
from .frontend import parse_java

SPECIAL = frozenset({"verdicts"})


@dataclass(frozen=True)
class CorpusProgram:
    name: str
    path: Path

    def read(self, filename: str) -> str:
        return (self.path / filename).read_text(encoding="utf-8")

    @property
    def source(self) -> str:
        return self.read("input.java")

    @property
    def is_edge_list(self) -> bool:
        """True when the assertion files enumerate every edge."""
        return self.name not in SPECIAL


def default_root() -> Path:
    env = os.environ.get("FLOWGRAPHS_CORPUS")
    if env:
        return Path(env)
    return Path(__file__).resolve().parents[2] / "corpus"


def load_corpus(root: Optional[Path] = None) -> List[CorpusProgram]:
    root = Path(root) if root is not None else default_root()
    if not root.is_dir():
        raise FileNotFoundError(f"corpus directory {root} not found (set FLOWGRAPHS_CORPUS)")
    return [CorpusProgram(p.name, p) for p in sorted(root.iterdir()) if (p / "input.java").is_file()]


def snapshots(program: CorpusProgram) -> Dict[str, str]:
    """Freshly computed contents of the generated files of ``program``."""
    graphs = transform_unit(parse_java(program.source), PipelineOptions())
    files = {"expected.xml": render(graphs, "xml"), "expected.dot": render(graphs, "dot", "both")}
    if program.is_edge_list:
        lines = [f"# data flow of {program.name}: every def-use edge, nothing else"]
        for g in graphs:
            lines += [f'dfNext: "{a.txt}" --> "{b.txt}";' for a, b in g.df_edges()]
        files["assertions.df"] = "\n".join(lines) + "\n"
    return files
