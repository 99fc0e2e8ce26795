from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from leibalg.linalg import Matrix

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

FIXTURES = Path(__file__).parent / "fixtures"
DOCS = Path(__file__).resolve().parent.parent / "docs"


@pytest.fixture
def fixtures() -> Path:
    return FIXTURES


def rationals(bound: int = 5, den: int = 3):
    return st.builds(
        Fraction, st.integers(-bound, bound), st.integers(1, den)
    )


def matrices(n: int | None = None, max_n: int = 5, bound: int = 4):
    size = st.just(n) if n is not None else st.integers(1, max_n)
    return size.flatmap(
        lambda k: st.lists(
            st.lists(rationals(bound), min_size=k, max_size=k), min_size=k, max_size=k
        ).map(Matrix.from_rows)
    )


def vectors(n: int, bound: int = 4):
    return st.lists(rationals(bound), min_size=n, max_size=n).map(tuple)


# acceptance lines collected by tests/test_acceptance.py
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
