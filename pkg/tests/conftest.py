from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from leglab.corpus import default_corpus_dir, load_corpus

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

# filled in by test_acceptance; echoed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
        terminalreporter.write_line(line)


@pytest.fixture
def record():
    """Record one acceptance line: ``record(n, title, ok, detail)``."""

    def _record(n: int, title: str, ok: bool, detail: str) -> None:
        line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}  ({detail})"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return _record


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return default_corpus_dir()


@pytest.fixture(scope="session")
def corpus(corpus_dir):
    return {e.name: e for e in load_corpus(corpus_dir)}
