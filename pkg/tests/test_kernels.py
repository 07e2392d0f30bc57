"""Backend parity, table integrity, and environment-driven selection."""

from __future__ import annotations

import os
import random
import subprocess
import sys

import pytest

from orbitcode import GF
from orbitcode import _kernels as kernels

HAS_COMPILED = "compiled" in kernels.available_backends()

needs_compiled = pytest.mark.skipif(
    not HAS_COMPILED, reason="compiled kernel extension not built"
)


@pytest.fixture
def restore_backend():
    before = kernels.current_backend()
    yield
    kernels.use_backend(before)


def random_rows(rng: random.Random, q: int, r: int, c: int) -> list[list[int]]:
    return [[rng.randrange(q) for _ in range(c)] for _ in range(r)]


class TestTables:
    def test_prime_field_tables_are_mod_p(self):
        t = GF(5).tables
        for a in range(5):
            for b in range(5):
                assert t.add_list[a][b] == (a + b) % 5
                assert t.mul_list[a][b] == (a * b) % 5
            assert t.neg_list[a] == (-a) % 5
            if a:
                assert (a * t.inv_list[a]) % 5 == 1

    def test_extension_tables_match_digit_arithmetic(self):
        # codes are base-3 digit strings of coefficient vectors; addition
        # must act digitwise and never carry
        t = GF(9).tables
        for a in range(9):
            for b in range(9):
                digits = [
                    ((a // 3**i) % 3 + (b // 3**i) % 3) % 3 for i in range(2)
                ]
                assert t.add_list[a][b] == digits[0] + 3 * digits[1]

    def test_multiplication_tables_define_a_field(self):
        for q in (4, 8, 9):
            t = GF(q).tables
            # every nonzero row of mul is a permutation hitting 1
            for a in range(1, q):
                row = t.mul_list[a]
                assert sorted(row) == list(range(q))
                assert row[t.inv_list[a]] == 1

    def test_inverse_of_zero_is_sentinel(self):
        for q in (2, 3, 4, 9):
            assert GF(q).tables.inv_list[0] == 0

    def test_arrays_are_read_only(self):
        t = GF(4).tables
        with pytest.raises(ValueError):
            t.add[0, 0] = 1


class TestBackendParity:
    @needs_compiled
    def test_all_operations_agree(self, restore_backend):
        from orbitcode._kernels import _core, pure

        rng = random.Random(99)
        for q in (2, 3, 4, 9):
            t = GF(q).tables
            for _ in range(60):
                r = rng.randrange(1, 5)
                c = rng.randrange(1, 6)
                a = random_rows(rng, q, r, c)
                b = random_rows(rng, q, c, r)
                assert pure.matmul(a, b, t) == _core.matmul(a, b, t)
                assert pure.rref(a, t) == _core.rref(a, t)
                square = random_rows(rng, q, r, r)
                assert pure.det(square, t) == _core.det(square, t)
                k = rng.randrange(1, r + 1)
                if c < k:
                    continue
                rows = sorted(rng.sample(range(r), k))
                row_sets = [tuple(rows)]
                col_sets = [
                    tuple(sorted(rng.sample(range(c), k))) for _ in range(3)
                ]
                assert pure.batch_minors(a, row_sets, col_sets, t) == _core.batch_minors(
                    a, row_sets, col_sets, t
                )

    @needs_compiled
    def test_rref_result_types_match(self):
        from orbitcode._kernels import _core, pure

        t = GF(2).tables
        a = [[1, 1, 0], [0, 1, 1]]
        for impl in (pure, _core):
            rows, rank, pivots = impl.rref(a, t)
            assert isinstance(rows, list) and isinstance(rows[0], list)
            assert isinstance(rank, int)
            assert isinstance(pivots, tuple)

    @needs_compiled
    def test_high_level_results_are_backend_independent(self, restore_backend):
        from orbitcode import GeneratorSpec, Subspace, orbit

        F = GF(2)
        g = GeneratorSpec(F, ["x^4+x^2+1"])
        seed = Subspace.from_text(F, "1,0,0,0;0,1,1,0")
        results = {}
        for name in kernels.available_backends():
            kernels.use_backend(name)
            code = orbit(g, seed)
            results[name] = (code.min_distance, tuple(w.matrix.to_text() for w in code.codewords))
        assert results["pure"] == results["compiled"]


class TestBackendSelection:
    def test_use_backend_round_trip(self, restore_backend):
        kernels.use_backend("pure")
        assert kernels.current_backend() == "pure"
        t = GF(2).tables
        assert kernels.det([[1, 1], [0, 1]], t) == 1

    def test_unknown_backend_rejected(self):
        with pytest.raises(ValueError):
            kernels.use_backend("gpu")

    def test_env_forces_pure(self):
        env = dict(os.environ, ORBITCODE_KERNEL="pure")
        out = subprocess.run(
            [sys.executable, "-c",
             "from orbitcode import _kernels; print(_kernels.current_backend())"],
            capture_output=True, text=True, env=env,
        )
        assert out.returncode == 0
        assert out.stdout.strip() == "pure"

    @needs_compiled
    def test_env_forces_compiled(self):
        env = dict(os.environ, ORBITCODE_KERNEL="compiled")
        out = subprocess.run(
            [sys.executable, "-c",
             "from orbitcode import _kernels; print(_kernels.current_backend())"],
            capture_output=True, text=True, env=env,
        )
        assert out.returncode == 0
        assert out.stdout.strip() == "compiled"

    def test_env_rejects_unknown_name(self):
        env = dict(os.environ, ORBITCODE_KERNEL="gpu")
        out = subprocess.run(
            [sys.executable, "-c", "import orbitcode"],
            capture_output=True, text=True, env=env,
        )
        assert out.returncode != 0
