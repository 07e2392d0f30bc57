"""Subspaces of GF(q)^n, their projective minor coordinates, and balls.

A :class:`Subspace` is canonicalized to the reduced row echelon basis
of its row space, so equality and hashing are structural.  Points of
projective minor space (:class:`PlueckerPoint`) carry one coordinate
per strictly increasing column tuple, in tuple-lex order, scaled so
the first nonzero coordinate is 1.

Balls here are always in the injection metric's even radii: the ball
of radius 2t around a subspace U contains the subspaces V of the same
dimension with d(U, V) <= 2t, where d is twice the codimension of the
intersection.  Around the standard subspace, membership is a vanishing
condition on coordinates; other centers are reached by transporting
the query with the inverse of a matrix that moves the standard
subspace onto the center.
"""

from __future__ import annotations

import functools
import itertools
import math
from typing import Iterator, Sequence

from . import _kernels as kernels
from .errors import AlgebraError
from .gf import FieldElement, FieldSpec
from .linalg import (
    FqMatrix,
    complete_to_invertible,
    compound_matrix,
    index_tuples,
    validate_index_tuple,
)

ENUMERATION_CAP = 1_000_000


class Subspace:
    """A k-dimensional subspace of GF(q)^n in reduced echelon form."""

    __slots__ = ("matrix", "pivots")

    def __init__(self, matrix: FqMatrix, pivots: tuple[int, ...], _trusted: bool = False):
        if not _trusted:
            raise AlgebraError("use Subspace.from_matrix to build subspaces")
        self.matrix = matrix
        self.pivots = pivots

    @classmethod
    def from_matrix(cls, mat: FqMatrix) -> "Subspace":
        """Row space of a matrix; rows may be dependent, zero space is refused."""
        res = mat.rref()
        if res.rank == 0:
            raise AlgebraError("the zero space has no spanning set")
        rows = res.matrix.rows[: res.rank]
        return cls(FqMatrix(mat.spec, rows), res.pivots, _trusted=True)

    @classmethod
    def from_text(cls, spec: FieldSpec, text: str) -> "Subspace":
        return cls.from_matrix(FqMatrix.from_text(spec, text))

    @property
    def spec(self) -> FieldSpec:
        return self.matrix.spec

    @property
    def k(self) -> int:
        return self.matrix.n_rows

    @property
    def n(self) -> int:
        return self.matrix.n_cols

    def __matmul__(self, a: FqMatrix) -> "Subspace":
        """Image under an invertible change of coordinates, acting on the right."""
        if not isinstance(a, FqMatrix):
            return NotImplemented
        if a.shape != (self.n, self.n):
            raise AlgebraError(f"action matrix must be {self.n}x{self.n}")
        if not a.is_invertible:
            raise AlgebraError("action matrix is singular")
        return Subspace.from_matrix(self.matrix @ a)

    def __contains__(self, vector: Sequence[int]) -> bool:
        v = [int(c) for c in vector]
        if len(v) != self.n:
            raise AlgebraError(f"vector length {len(v)} does not match ambient {self.n}")
        stacked = FqMatrix(self.spec, list(self.matrix.rows) + [v])
        return stacked.rank() == self.k

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __str__(self):
        return self.matrix.to_text()

    def __repr__(self):
        return f"Subspace({self.spec!r}, {self.matrix.to_text()!r})"


def standard_subspace(spec: FieldSpec, k: int, n: int) -> Subspace:
    """Row space of the first k standard basis vectors."""
    if not 1 <= k <= n:
        raise AlgebraError(f"need 1 <= k <= n, got k={k}, n={n}")
    rows = [[1 if j == i else 0 for j in range(n)] for i in range(k)]
    return Subspace.from_matrix(FqMatrix(spec, rows))


def subspace_distance(u: Subspace, v: Subspace) -> int:
    """Injection metric distance 2 rank(stack) - dim u - dim v."""
    if u.spec != v.spec or u.n != v.n:
        raise AlgebraError("subspaces live in different ambient spaces")
    stacked = u.matrix.stack(v.matrix)
    return 2 * stacked.rank() - u.k - v.k


class PlueckerPoint:
    """A projective point of minor coordinates, one per column tuple.

    Coordinates follow the tuple-lex order of
    :func:`orbitcode.linalg.index_tuples` and are normalized so the
    first nonzero entry is 1, which makes equality exact.
    """

    __slots__ = ("spec", "n", "k", "coords")

    def __init__(self, spec: FieldSpec, n: int, k: int, coords: tuple[int, ...], _trusted: bool = False):
        if not _trusted:
            raise AlgebraError("use PlueckerPoint.from_coords")
        self.spec = spec
        self.n = n
        self.k = k
        self.coords = coords

    @classmethod
    def from_coords(cls, spec: FieldSpec, n: int, k: int, coords: Sequence) -> "PlueckerPoint":
        cs = []
        for c in coords:
            if isinstance(c, FieldElement):
                if c.spec != spec:
                    raise AlgebraError("coordinate from a different field")
                cs.append(c.code)
            else:
                code = int(c)
                if not 0 <= code < spec.order:
                    raise AlgebraError(f"coordinate code {code} out of range for {spec!r}")
                cs.append(code)
        expected = math.comb(n, k)
        if len(cs) != expected:
            raise AlgebraError(f"expected {expected} coordinates for n={n}, k={k}, got {len(cs)}")
        first = next((c for c in cs if c), None)
        if first is None:
            raise AlgebraError("projective coordinates cannot all vanish")
        if first != 1:
            s = spec.inv(first)
            cs = [spec.mul(s, c) for c in cs]
        return cls(spec, n, k, tuple(cs), _trusted=True)

    def coordinate(self, tup: Sequence[int]) -> FieldElement:
        """Coordinate at a 1-based strictly increasing column tuple."""
        t = validate_index_tuple(tup, self.n, self.k)
        return FieldElement(self.spec, self.coords[_tuple_position(self.n, self.k)[t]])

    def support(self) -> tuple[tuple[int, ...], ...]:
        """Column tuples with nonzero coordinate, in tuple-lex order."""
        tuples = index_tuples(self.n, self.k)
        return tuple(t for t, c in zip(tuples, self.coords) if c)

    def apply_compound(self, comp: FqMatrix) -> "PlueckerPoint":
        """Right action of a precomputed k-th compound matrix."""
        if comp.spec != self.spec:
            raise AlgebraError("compound matrix over a different field")
        size = math.comb(self.n, self.k)
        if comp.shape != (size, size):
            raise AlgebraError(f"compound matrix must be {size}x{size}")
        row = kernels.matmul([list(self.coords)], comp.to_lists(), self.spec.tables)[0]
        return PlueckerPoint.from_coords(self.spec, self.n, self.k, row)

    def apply_matrix(self, a: FqMatrix) -> "PlueckerPoint":
        """Image under an ambient change of coordinates."""
        if a.shape != (self.n, self.n):
            raise AlgebraError(f"action matrix must be {self.n}x{self.n}")
        return self.apply_compound(compound_matrix(a, self.k))

    def __eq__(self, other):
        if not isinstance(other, PlueckerPoint):
            return NotImplemented
        return (
            self.spec == other.spec
            and self.n == other.n
            and self.k == other.k
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.spec, self.n, self.k, self.coords))

    def __str__(self):
        return "[" + ":".join(str(c) for c in self.coords) + "]"

    def __repr__(self):
        return f"PlueckerPoint({self.spec!r}, n={self.n}, k={self.k}, {self})"


@functools.lru_cache(maxsize=None)
def _tuple_position(n: int, k: int) -> dict[tuple[int, ...], int]:
    return {t: i for i, t in enumerate(index_tuples(n, k))}


def plucker_coordinates(u: Subspace) -> PlueckerPoint:
    """All k x k column minors of the canonical basis, normalized.

    The echelon basis makes the minor at the pivot tuple equal to 1 and
    kills every tuple-lex earlier coordinate, so the result is already
    in normalized form.
    """
    k, n = u.k, u.n
    col_sets = [[i - 1 for i in t] for t in index_tuples(n, k)]
    minors = kernels.batch_minors(u.matrix.to_lists(), [list(range(k))], col_sets, u.spec.tables)
    return PlueckerPoint.from_coords(u.spec, n, k, minors[0])


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of GF(q)^n, exactly."""
    if k < 0 or k > n:
        return 0
    num = 1
    den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


def enumerate_grassmannian(spec: FieldSpec, k: int, n: int) -> Iterator[Subspace]:
    """All k-dimensional subspaces of GF(q)^n, each exactly once.

    Enumerates canonical echelon matrices grouped by pivot columns.
    Refuses counts beyond ``ENUMERATION_CAP``; this is a desk-scale
    tool, not a search engine.
    """
    if not 1 <= k <= n:
        raise AlgebraError(f"need 1 <= k <= n, got k={k}, n={n}")
    total = gaussian_binomial(n, k, spec.order)
    if total > ENUMERATION_CAP:
        raise AlgebraError(f"{total} subspaces exceed the enumeration cap {ENUMERATION_CAP}")
    q = spec.order
    for pivots in itertools.combinations(range(n), k):
        pivot_set = set(pivots)
        free = [
            (i, j)
            for i in range(k)
            for j in range(pivots[i] + 1, n)
            if j not in pivot_set
        ]
        base = [[0] * n for _ in range(k)]
        for i, p in enumerate(pivots):
            base[i][p] = 1
        for values in itertools.product(range(q), repeat=len(free)):
            rows = [r[:] for r in base]
            for (i, j), c in zip(free, values):
                rows[i][j] = c
            yield Subspace(FqMatrix(spec, rows), pivots, _trusted=True)


def tuple_leq(s: Sequence[int], t: Sequence[int]) -> bool:
    """Componentwise order on increasing index tuples of equal length."""
    a = tuple(s)
    b = tuple(t)
    if len(a) != len(b):
        raise AlgebraError("tuples of different length are incomparable")
    return all(x <= y for x, y in zip(a, b))


def ball_bound_tuple(n: int, k: int, t: int) -> tuple[int, ...]:
    """Componentwise-largest pivot tuple inside the radius-2t ball at U0.

    A subspace lies in the ball iff all its minor coordinates vanish
    outside the lower set of this tuple.  For t >= k the bound is the
    maximal tuple and the condition is vacuous.
    """
    if not 1 <= k <= n:
        raise AlgebraError(f"need 1 <= k <= n, got k={k}, n={n}")
    if t < 0:
        raise AlgebraError("the radius parameter t must be nonnegative")
    bound = []
    for i in range(k):
        hi = n - k + i + 1
        bound.append(hi if i >= k - t else min(t + i + 1, hi))
    return tuple(bound)


def in_standard_ball(u: Subspace, t: int) -> bool:
    """Membership of u in the radius-2t ball around the standard subspace."""
    bound = ball_bound_tuple(u.n, u.k, t)
    point = plucker_coordinates(u)
    for tup, c in zip(index_tuples(u.n, u.k), point.coords):
        if c and not tuple_leq(tup, bound):
            return False
    return True


def in_ball(u: Subspace, center: Subspace, t: int) -> bool:
    """Membership of u in the radius-2t ball around an arbitrary center.

    Implemented on the projective side: pick A invertible with
    U0 A = center, transport the query with the compound of A^{-1},
    and test the standard vanishing condition.  The direct rank check
    via :func:`subspace_distance` must agree; tests hold both routes
    together.
    """
    if u.spec != center.spec or u.n != center.n:
        raise AlgebraError("query and center live in different ambient spaces")
    if u.k != center.k:
        raise AlgebraError("query and center have different dimensions")
    bound = ball_bound_tuple(u.n, u.k, t)
    a = complete_to_invertible(center.matrix)
    comp = compound_matrix(a.inverse(), u.k)
    point = plucker_coordinates(u).apply_compound(comp)
    for tup, c in zip(index_tuples(u.n, u.k), point.coords):
        if c and not tuple_leq(tup, bound):
            return False
    return True
