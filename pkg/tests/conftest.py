import os
from contextlib import contextmanager

import pytest

# every graph built anywhere in the suite is audited after every stage,
# including graphs built by CLI subprocesses
os.environ["FLOWGRAPHS_AUDIT"] = "1"

from flowgraphs.corpus import load_corpus  # noqa: E402
from flowgraphs.model import audit  # noqa: E402
from flowgraphs.pipeline import run_source  # noqa: E402

audit.enable()

_ACCEPTANCE = {}


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


@pytest.fixture
def graph_of():
    """Full pipeline on a one-method source; returns that method's graph."""

    def build(source, **kwargs):
        graphs, _ = run_source(source, **kwargs)
        assert len(graphs) == 1
        return graphs[0]

    return build


@pytest.fixture
def acceptance():
    """``with acceptance(3, "name", "detail"):`` records PASS/FAIL for the summary."""

    @contextmanager
    def record(number, name, detail=""):
        try:
            yield
        except BaseException as exc:
            _ACCEPTANCE[number] = (name, "FAIL", f"{type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''}")
            raise
        else:
            previous = _ACCEPTANCE.get(number)
            if previous is None:
                _ACCEPTANCE[number] = (name, "PASS", detail)
            elif previous[1] == "PASS":
                _ACCEPTANCE[number] = (name, "PASS", "; ".join(filter(None, (previous[2], detail))))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    if audit.failures:
        _ACCEPTANCE[3] = (_ACCEPTANCE.get(3, ("inverse property",))[0], "FAIL",
                          f"{len(audit.failures)} audit failures, first: {audit.failures[0]}")
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        name, verdict, detail = _ACCEPTANCE[number]
        line = f"ACCEPTANCE {number} {verdict} {name}"
        terminalreporter.write_line(f"{line} ({detail})" if detail else line)
    terminalreporter.write_line(f"graphs audited during the run: {audit.checked}, audit failures: {len(audit.failures)}")
