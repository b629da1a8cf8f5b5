"""Shared fixtures: a seeded corpus of random orbit monomials.

The corpus stays within c <= 3 rows, r <= 3 support columns, support inside
the first 6 columns, and column degrees 1..4, which keeps every brute-force
truncation tractable while covering all structural branches (single column,
gaps, repeated column degrees, negative denominator power).
"""

from __future__ import annotations

import random

import pytest

from inchilb import OrbitMonomial

CORPUS_SEED = 20250818

_acceptance_lines: list[str] = []


def record_acceptance(line: str) -> None:
    """Collect one PASS/FAIL line per acceptance criterion for the summary."""
    _acceptance_lines.append(line)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in _acceptance_lines:
        terminalreporter.write_line(line)


def make_fuzz_corpus(count: int = 100, seed: int = CORPUS_SEED) -> list[OrbitMonomial]:
    rng = random.Random(seed)
    seen: set[OrbitMonomial] = set()
    out: list[OrbitMonomial] = []
    while len(out) < count:
        c = rng.randint(1, 3)
        r = rng.randint(1, 3)
        mu = sorted(rng.sample(range(1, 7), r))
        matrix = [[0] * mu[-1] for _ in range(c)]
        for col in mu:
            degree = rng.randint(1, 4)
            for _ in range(degree):
                matrix[rng.randrange(c)][col - 1] += 1
        orb = OrbitMonomial.from_matrix(matrix)
        if orb in seen:
            continue
        seen.add(orb)
        out.append(orb)
    return out


@pytest.fixture(scope="session")
def corpus() -> list[OrbitMonomial]:
    return make_fuzz_corpus()
