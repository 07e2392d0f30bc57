"""Shared fixtures: the two worked-example configurations and helpers."""

from __future__ import annotations

import random

import pytest

from orbitcode import GF, FqMatrix, GeneratorSpec, Subspace, enumerate_grassmannian

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def F2():
    return GF(2)


@pytest.fixture(scope="session")
def F3():
    return GF(3)


@pytest.fixture(scope="session")
def gen_two_blocks(F2):
    """Two companion blocks of x^2+x+1 over GF(2)."""
    return GeneratorSpec(F2, ["x^2+x+1", "x^2+x+1"])


@pytest.fixture(scope="session")
def gen_single_reducible(F2):
    """Single block x^4+x^2+1 = (x^2+x+1)^2 over GF(2)."""
    return GeneratorSpec(F2, ["x^4+x^2+1"])


@pytest.fixture(scope="session")
def gen_single_irreducible(F2):
    """Single irreducible block x^4+x+1 over GF(2)."""
    return GeneratorSpec(F2, ["x^4+x+1"])


@pytest.fixture(scope="session")
def seed_subspace(F2):
    """Row space of [[1,0,0,0],[0,1,1,0]], the seed both examples share."""
    return Subspace.from_text(F2, "1,0,0,0;0,1,1,0")


@pytest.fixture(scope="session")
def grassmann_2_4(F2):
    """All 35 two-dimensional subspaces of GF(2)^4."""
    return tuple(enumerate_grassmannian(F2, 2, 4))


def random_subspace(rng: random.Random, spec, k: int, n: int) -> Subspace:
    """Uniform-ish random k-dimensional subspace via random full-rank rows."""
    while True:
        rows = [[rng.randrange(spec.order) for _ in range(n)] for _ in range(k)]
        m = FqMatrix(spec, rows)
        if m.rank() == k:
            return Subspace.from_matrix(m)
