"""Subspaces, projective minor coordinates, distance, and balls."""

from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from orbitcode import (
    GF,
    AlgebraError,
    FqMatrix,
    PlueckerPoint,
    Subspace,
    ball_bound_tuple,
    enumerate_grassmannian,
    gaussian_binomial,
    in_ball,
    in_standard_ball,
    plucker_coordinates,
    standard_subspace,
    subspace_distance,
    tuple_leq,
)
from conftest import random_subspace


def span_vectors(u: Subspace) -> frozenset:
    """Every vector of the subspace, by brute-force row combinations."""
    spec = u.spec
    add, mul = spec.add, spec.mul
    vectors = set()
    for coeffs in itertools.product(range(spec.order), repeat=u.k):
        v = [0] * u.n
        for c, row in zip(coeffs, u.matrix.rows):
            if c:
                v = [add(a, mul(c, b)) for a, b in zip(v, row)]
        vectors.add(tuple(v))
    return frozenset(vectors)


def distance_by_span_counting(u: Subspace, v: Subspace) -> int:
    """dim u + dim v - 2 dim(u n v) with the intersection counted directly."""
    common = span_vectors(u) & span_vectors(v)
    dim = 0
    while u.spec.order**dim < len(common):
        dim += 1
    assert u.spec.order**dim == len(common)
    return u.k + v.k - 2 * dim


class TestSubspace:
    def test_canonicalization_forgets_the_spanning_set(self, F2):
        a = Subspace.from_text(F2, "1,0,0,0;0,1,1,0")
        b = Subspace.from_text(F2, "1,1,1,0;0,1,1,0")
        assert a == b
        assert hash(a) == hash(b)

    def test_dependent_rows_are_dropped(self, F2):
        s = Subspace.from_text(F2, "1,0,1;0,1,1;1,1,0")
        assert s.k == 2

    def test_zero_space_rejected(self, F2):
        with pytest.raises(AlgebraError):
            Subspace.from_matrix(FqMatrix(F2, [[0, 0, 0]]))

    def test_membership_matches_span_enumeration(self, F3):
        rng = random.Random(1)
        for _ in range(10):
            u = random_subspace(rng, F3, 2, 4)
            vectors = span_vectors(u)
            for v in itertools.product(range(3), repeat=4):
                assert (v in u) == (tuple(v) in vectors)

    def test_action_requires_invertible(self, F2):
        u = Subspace.from_text(F2, "1,0;0,1")
        with pytest.raises(AlgebraError):
            u @ FqMatrix(F2, [[1, 1], [1, 1]])


class TestDistance:
    def test_against_span_counting_oracle(self):
        rng = random.Random(6)
        for q, n in ((2, 4), (2, 5), (3, 4)):
            F = GF(q)
            for _ in range(25):
                u = random_subspace(rng, F, rng.randint(1, 3), n)
                v = random_subspace(rng, F, rng.randint(1, 3), n)
                assert subspace_distance(u, v) == distance_by_span_counting(u, v)

    def test_metric_axioms_sampled(self):
        rng = random.Random(7)
        F = GF(2)
        subs = [random_subspace(rng, F, 2, 5) for _ in range(12)]
        for u in subs:
            assert subspace_distance(u, u) == 0
        for u, v in itertools.combinations(subs, 2):
            duv = subspace_distance(u, v)
            assert duv == subspace_distance(v, u)
            assert duv > 0 or u == v
        for u, v, w in itertools.islice(itertools.combinations(subs, 3), 100):
            assert subspace_distance(u, w) <= subspace_distance(u, v) + subspace_distance(v, w)

    def test_right_action_is_an_isometry(self, F3):
        rng = random.Random(14)
        for _ in range(15):
            u = random_subspace(rng, F3, 2, 4)
            v = random_subspace(rng, F3, 2, 4)
            while True:
                a = FqMatrix(F3, [[rng.randrange(3) for _ in range(4)] for _ in range(4)])
                if a.is_invertible:
                    break
            assert subspace_distance(u @ a, v @ a) == subspace_distance(u, v)

    def test_ambient_mismatch_rejected(self, F2):
        u = Subspace.from_text(F2, "1,0;0,1")
        v = Subspace.from_text(F2, "1,0,0;0,1,0")
        with pytest.raises(AlgebraError):
            subspace_distance(u, v)


class TestPlueckerPoint:
    def test_first_nonzero_is_normalized_to_one(self, F3):
        p = PlueckerPoint.from_coords(F3, 4, 2, [0, 2, 1, 0, 2, 1])
        assert p.coords[1] == 1
        q = PlueckerPoint.from_coords(F3, 4, 2, [0, 1, 2, 0, 1, 2])
        assert p == q

    def test_all_zero_rejected(self, F2):
        with pytest.raises(AlgebraError):
            PlueckerPoint.from_coords(F2, 4, 2, [0] * 6)

    def test_str_format(self, F2):
        u = Subspace.from_text(F2, "1,0,0,0;0,1,1,0")
        assert str(plucker_coordinates(u)) == "[1:1:0:0:0:0]"

    def test_coordinate_lookup(self, F2):
        u = Subspace.from_text(F2, "1,0,0,0;0,1,1,0")
        p = plucker_coordinates(u)
        assert p.coordinate((1, 2)).code == 1
        assert p.coordinate((1, 3)).code == 1
        assert p.coordinate((3, 4)).code == 0
        assert p.support() == ((1, 2), (1, 3))

    def test_injective_on_the_grassmannian(self, F2, grassmann_2_4):
        points = {plucker_coordinates(u) for u in grassmann_2_4}
        assert len(points) == len(grassmann_2_4)

    def test_equivariance_random(self):
        rng = random.Random(21)
        for q in (2, 3):
            F = GF(q)
            for _ in range(15):
                u = random_subspace(rng, F, 2, 4)
                while True:
                    a = FqMatrix(F, [[rng.randrange(q) for _ in range(4)] for _ in range(4)])
                    if a.is_invertible:
                        break
                assert plucker_coordinates(u @ a) == plucker_coordinates(u).apply_matrix(a)


class TestEnumeration:
    @pytest.mark.parametrize(
        "q,k,n,count",
        [(2, 2, 4, 35), (2, 1, 3, 7), (2, 2, 5, 155), (3, 2, 4, 130), (2, 3, 5, 155), (3, 1, 3, 13)],
    )
    def test_counts_match_gaussian_binomial(self, q, k, n, count):
        F = GF(q)
        subs = list(enumerate_grassmannian(F, k, n))
        assert gaussian_binomial(n, k, q) == count
        assert len(subs) == count
        assert len(set(subs)) == count
        assert all(s.k == k and s.n == n for s in subs)

    def test_gaussian_binomial_symmetry_and_recurrence(self):
        for q in (2, 3, 4):
            for n in range(1, 8):
                for k in range(n + 1):
                    assert gaussian_binomial(n, k, q) == gaussian_binomial(n, n - k, q)
                    if 0 < k:
                        assert gaussian_binomial(n, k, q) == (
                            gaussian_binomial(n - 1, k, q)
                            + q ** (n - k) * gaussian_binomial(n - 1, k - 1, q)
                        )

    def test_cap_refuses_oversized_requests(self, F2):
        with pytest.raises(AlgebraError):
            list(enumerate_grassmannian(F2, 5, 25))


class TestTupleOrder:
    @given(st.lists(st.integers(1, 9), min_size=2, max_size=2).map(tuple),
           st.lists(st.integers(1, 9), min_size=2, max_size=2).map(tuple),
           st.lists(st.integers(1, 9), min_size=2, max_size=2).map(tuple))
    def test_partial_order_laws(self, a, b, c):
        assert tuple_leq(a, a)
        if tuple_leq(a, b) and tuple_leq(b, a):
            assert a == b
        if tuple_leq(a, b) and tuple_leq(b, c):
            assert tuple_leq(a, c)

    def test_incomparable_pair(self):
        assert not tuple_leq((1, 4), (2, 3))
        assert not tuple_leq((2, 3), (1, 4))

    def test_length_mismatch_rejected(self):
        with pytest.raises(AlgebraError):
            tuple_leq((1, 2), (1, 2, 3))


class TestBalls:
    def test_bound_tuple_reference(self):
        assert ball_bound_tuple(4, 2, 1) == (2, 4)
        assert ball_bound_tuple(4, 2, 0) == (1, 2)
        assert ball_bound_tuple(4, 2, 2) == (3, 4)
        assert ball_bound_tuple(6, 3, 1) == (2, 3, 6)
        assert ball_bound_tuple(6, 3, 5) == (4, 5, 6)

    def test_standard_ball_size_19(self, F2, grassmann_2_4):
        members = [u for u in grassmann_2_4 if in_standard_ball(u, 1)]
        assert len(members) == 19

    def test_standard_ball_equals_distance_condition(self, F2, grassmann_2_4):
        u0 = standard_subspace(F2, 2, 4)
        for t in range(0, 3):
            for u in grassmann_2_4:
                assert in_standard_ball(u, t) == (subspace_distance(u, u0) <= 2 * t)

    def test_radius_zero_is_the_center_alone(self, F2, grassmann_2_4):
        members = [u for u in grassmann_2_4 if in_standard_ball(u, 0)]
        assert members == [standard_subspace(F2, 2, 4)]

    def test_radius_k_is_everything(self, F2, grassmann_2_4):
        assert all(in_standard_ball(u, 2) for u in grassmann_2_4)

    def test_general_center_equals_distance_condition(self, F3):
        rng = random.Random(30)
        all_g = list(enumerate_grassmannian(F3, 2, 4))
        centers = [random_subspace(rng, F3, 2, 4) for _ in range(3)]
        for c in centers:
            for t in (0, 1, 2):
                for u in all_g:
                    assert in_ball(u, c, t) == (subspace_distance(u, c) <= 2 * t)

    def test_ball_transport_under_the_action(self, F2, grassmann_2_4):
        rng = random.Random(31)
        while True:
            a = FqMatrix(F2, [[rng.randrange(2) for _ in range(4)] for _ in range(4)])
            if a.is_invertible:
                break
        center = random_subspace(rng, F2, 2, 4)
        for u in grassmann_2_4:
            assert in_ball(u @ a, center @ a, 1) == in_ball(u, center, 1)

    def test_dimension_mismatch_rejected(self, F2):
        u = Subspace.from_text(F2, "1,0,0,0")
        c = standard_subspace(F2, 2, 4)
        with pytest.raises(AlgebraError):
            in_ball(u, c, 1)

    def test_negative_radius_rejected(self):
        with pytest.raises(AlgebraError):
            ball_bound_tuple(4, 2, -1)


class TestStandardSubspace:
    def test_shape(self, F3):
        u = standard_subspace(F3, 2, 5)
        assert u.matrix.to_text() == "1,0,0,0,0;0,1,0,0,0"
        assert plucker_coordinates(u).coords[0] == 1
        assert sum(plucker_coordinates(u).coords) == 1
