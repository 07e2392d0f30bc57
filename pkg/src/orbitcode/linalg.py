"""Matrices over GF(q): elimination, minors, and the structural builders.

An :class:`FqMatrix` is immutable and stores its entries as integer
element codes (see :mod:`orbitcode.gf`), row major.  Elimination,
determinants, and batched minors are delegated to the kernel backend,
which works on plain nested lists; everything here stays exact.

Index conventions: matrix entries are addressed 0-based, while the
column tuples produced by :func:`index_tuples` are 1-based, matching
the usual labelling of projective coordinates on the Grassmannian.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import _kernels as kernels
from .errors import AlgebraError, ParseError
from .gf import FieldElement, FieldSpec, Polynomial


class FqMatrix:
    """Immutable matrix of GF(q) element codes."""

    __slots__ = ("spec", "rows")

    def __init__(self, spec: FieldSpec, rows: Sequence[Sequence]):
        mat = []
        width = None
        for row in rows:
            r = []
            for c in row:
                if isinstance(c, FieldElement):
                    if c.spec != spec:
                        raise AlgebraError("entry from a different field")
                    r.append(c.code)
                else:
                    code = int(c)
                    if not 0 <= code < spec.order:
                        raise AlgebraError(f"entry code {code} out of range for {spec!r}")
                    r.append(code)
            if width is None:
                width = len(r)
            elif len(r) != width:
                raise AlgebraError("ragged rows")
            mat.append(tuple(r))
        if not mat or width == 0:
            raise AlgebraError("matrices must have at least one row and one column")
        self.spec = spec
        self.rows = tuple(mat)

    # -- constructors --------------------------------------------------------

    @classmethod
    def zeros(cls, spec: FieldSpec, n_rows: int, n_cols: int) -> "FqMatrix":
        return cls(spec, [[0] * n_cols for _ in range(n_rows)])

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> "FqMatrix":
        return cls(spec, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_text(cls, spec: FieldSpec, text: str) -> "FqMatrix":
        """Parse ';'-separated rows of ','-separated codes.

        Over GF(2) a row may also be written as a bitstring, e.g.
        "1000;0110" for the 2x4 matrix with rows 1000 and 0110.
        """
        s = text.strip()
        if not s:
            raise ParseError("empty matrix")
        rows = []
        for row_text in s.split(";"):
            row_text = row_text.strip()
            if not row_text:
                raise ParseError(f"empty row in {text!r}")
            if "," in row_text:
                parts = [p.strip() for p in row_text.split(",")]
            elif spec.order == 2 and set(row_text) <= {"0", "1"}:
                parts = list(row_text)
            else:
                parts = [row_text]
            try:
                codes = [int(p) for p in parts]
            except ValueError as exc:
                raise ParseError(f"bad matrix entry in {text!r}") from exc
            if any(not 0 <= c < spec.order for c in codes):
                raise ParseError(f"matrix entry out of range for {spec!r} in {text!r}")
            rows.append(codes)
        if len({len(r) for r in rows}) != 1:
            raise ParseError(f"rows of unequal length in {text!r}")
        return cls(spec, rows)

    # -- shape and access ------------------------------------------------------

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.n_rows, self.n_cols)

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def __getitem__(self, key: tuple[int, int]) -> FieldElement:
        i, j = key
        return FieldElement(self.spec, self.rows[i][j])

    def row(self, i: int) -> tuple[int, ...]:
        return self.rows[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    # -- arithmetic ------------------------------------------------------------

    def _check(self, other: "FqMatrix"):
        if not isinstance(other, FqMatrix):
            raise TypeError("expected an FqMatrix")
        if other.spec != self.spec:
            raise AlgebraError("mixed fields in matrix arithmetic")

    def __add__(self, other: "FqMatrix") -> "FqMatrix":
        self._check(other)
        if self.shape != other.shape:
            raise AlgebraError(f"shape mismatch {self.shape} + {other.shape}")
        add = self.spec.add
        return FqMatrix(
            self.spec,
            [[add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __sub__(self, other: "FqMatrix") -> "FqMatrix":
        self._check(other)
        if self.shape != other.shape:
            raise AlgebraError(f"shape mismatch {self.shape} - {other.shape}")
        sub = self.spec.sub
        return FqMatrix(
            self.spec,
            [[sub(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __matmul__(self, other: "FqMatrix") -> "FqMatrix":
        self._check(other)
        if self.n_cols != other.n_rows:
            raise AlgebraError(f"shape mismatch {self.shape} @ {other.shape}")
        prod = kernels.matmul(self.to_lists(), other.to_lists(), self.spec.tables)
        return FqMatrix(self.spec, prod)

    def scale(self, c) -> "FqMatrix":
        if isinstance(c, FieldElement):
            if c.spec != self.spec:
                raise AlgebraError("scalar from a different field")
            code = c.code
        else:
            code = int(c)
            if not 0 <= code < self.spec.order:
                raise AlgebraError("scalar code out of range")
        mul = self.spec.mul
        return FqMatrix(self.spec, [[mul(code, a) for a in r] for r in self.rows])

    def __pow__(self, n: int) -> "FqMatrix":
        if not self.is_square:
            raise AlgebraError("powers require a square matrix")
        if n < 0:
            return self.inverse() ** (-n)
        out = FqMatrix.identity(self.spec, self.n_rows)
        base = self
        while n:
            if n & 1:
                out = out @ base
            base = base @ base
            n >>= 1
        return out

    def transpose(self) -> "FqMatrix":
        return FqMatrix(self.spec, list(zip(*self.rows)))

    def stack(self, other: "FqMatrix") -> "FqMatrix":
        """Vertical concatenation."""
        self._check(other)
        if other.n_cols != self.n_cols:
            raise AlgebraError("stack requires equal column counts")
        return FqMatrix(self.spec, list(self.rows) + list(other.rows))

    # -- elimination -------------------------------------------------------------

    def rref(self) -> "RrefResult":
        rows, rank, pivots = kernels.rref(self.to_lists(), self.spec.tables)
        return RrefResult(FqMatrix(self.spec, rows), rank, tuple(pivots))

    def rank(self) -> int:
        return self.rref().rank

    def det(self) -> FieldElement:
        if not self.is_square:
            raise AlgebraError("determinant requires a square matrix")
        return FieldElement(self.spec, kernels.det(self.to_lists(), self.spec.tables))

    @property
    def is_invertible(self) -> bool:
        return self.is_square and self.det().code != 0

    def inverse(self) -> "FqMatrix":
        if not self.is_square:
            raise AlgebraError("inverse requires a square matrix")
        n = self.n_rows
        aug = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(self.rows)]
        rows, rank, _ = kernels.rref(aug, self.spec.tables)
        if rank < n or any(rows[i][i] != 1 for i in range(n)):
            raise AlgebraError("matrix is singular")
        return FqMatrix(self.spec, [r[n:] for r in rows])

    def minor(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> FieldElement:
        """Determinant of the submatrix on the given 0-based index sets."""
        rs = list(row_idx)
        cs = list(col_idx)
        if len(rs) != len(cs):
            raise AlgebraError("minor needs equally many rows and columns")
        if any(not 0 <= i < self.n_rows for i in rs) or any(not 0 <= j < self.n_cols for j in cs):
            raise AlgebraError("minor index out of range")
        out = kernels.batch_minors(self.to_lists(), [rs], [cs], self.spec.tables)
        return FieldElement(self.spec, out[0][0])

    # -- identity ----------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, FqMatrix):
            return NotImplemented
        return self.spec == other.spec and self.rows == other.rows

    def __hash__(self):
        return hash((self.spec, self.rows))

    def to_text(self) -> str:
        return ";".join(",".join(str(c) for c in r) for r in self.rows)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"FqMatrix({self.spec!r}, {self.to_text()!r})"


@dataclass(frozen=True)
class RrefResult:
    """Reduced row echelon form with its rank and 0-based pivot columns."""

    matrix: FqMatrix
    rank: int
    pivots: tuple[int, ...]


def companion_matrix(poly: Polynomial) -> FqMatrix:
    """Companion matrix of a monic polynomial, acting on row vectors.

    With p(x) = c_0 + c_1 x + ... + x^m the matrix has ones on the
    superdiagonal and last row (-c_0, ..., -c_{m-1}), so that v |-> v P
    is multiplication by x on coefficient vectors mod p.
    """
    if poly.degree is None or poly.degree < 1:
        raise AlgebraError("companion matrix needs degree >= 1")
    if not poly.is_monic:
        raise AlgebraError("companion matrix needs a monic polynomial")
    m = poly.degree
    spec = poly.base
    neg = spec.neg
    rows = [[1 if j == i + 1 else 0 for j in range(m)] for i in range(m - 1)]
    rows.append([neg(poly.coeffs[j]) for j in range(m)])
    return FqMatrix(spec, rows)


def block_diagonal(blocks: Sequence[FqMatrix]) -> FqMatrix:
    """Square block-diagonal assembly of square blocks over one field."""
    if not blocks:
        raise AlgebraError("block_diagonal needs at least one block")
    spec = blocks[0].spec
    for b in blocks:
        if b.spec != spec:
            raise AlgebraError("blocks over mixed fields")
        if not b.is_square:
            raise AlgebraError("blocks must be square")
    n = sum(b.n_rows for b in blocks)
    rows = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, r in enumerate(b.rows):
            rows[off + i][off : off + b.n_cols] = list(r)
        off += b.n_rows
    return FqMatrix(spec, rows)


def complete_to_invertible(mat: FqMatrix) -> FqMatrix:
    """Extend a full-row-rank k x n matrix to an invertible n x n one.

    The original rows come first; a standard basis row e_j is appended
    for every non-pivot column j of the row space, in increasing j.
    """
    res = mat.rref()
    if res.rank != mat.n_rows:
        raise AlgebraError("rows are linearly dependent")
    n = mat.n_cols
    pivots = set(res.pivots)
    rows = [list(r) for r in mat.rows]
    for j in range(n):
        if j not in pivots:
            rows.append([1 if c == j else 0 for c in range(n)])
    return FqMatrix(mat.spec, rows)


@functools.lru_cache(maxsize=None)
def index_tuples(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """All strictly increasing k-tuples from {1..n}, lexicographically."""
    if not 1 <= k <= n:
        raise AlgebraError(f"need 1 <= k <= n, got k={k}, n={n}")
    return tuple(itertools.combinations(range(1, n + 1), k))


def validate_index_tuple(t: Iterable[int], n: int, k: int) -> tuple[int, ...]:
    """Check a 1-based strictly increasing k-tuple inside {1..n}."""
    tup = tuple(int(i) for i in t)
    if len(tup) != k:
        raise AlgebraError(f"expected {k} indices, got {len(tup)}")
    if any(not 1 <= i <= n for i in tup):
        raise AlgebraError(f"index out of range 1..{n} in {tup}")
    if any(a >= b for a, b in zip(tup, tup[1:])):
        raise AlgebraError(f"indices must be strictly increasing, got {tup}")
    return tup


def compound_matrix(mat: FqMatrix, k: int) -> FqMatrix:
    """Matrix of all k x k minors of a square matrix, tuple-lex ordered.

    Entry (S, T) is the minor on row set S and column set T, with both
    sets enumerated as in :func:`index_tuples`.  Right multiplication
    by the compound of A maps the k-minor vector of M to that of M A.
    """
    if not mat.is_square:
        raise AlgebraError("compound matrix requires a square matrix")
    n = mat.n_rows
    sets = [[i - 1 for i in t] for t in index_tuples(n, k)]
    minors = kernels.batch_minors(mat.to_lists(), sets, sets, mat.spec.tables)
    return FqMatrix(mat.spec, minors)
