"""Exterior algebra over the block module attached to a cyclic generator.

A generator with blocks p_1, ..., p_m identifies GF(q)^n with the
product module GF(q)[x]/p_1 x ... x GF(q)[x]/p_m: a row vector is cut
at block boundaries and each piece becomes a residue (a
:class:`ModuleElement`).  Right multiplication by the generator matrix
corresponds to multiplying every residue by x, so orbits of subspaces
can be followed inside the module instead of by matrix products.

Wedges of k module elements expand over the global basis consisting of
the monomials of block 1 (exponents 0..deg p_1 - 1), then block 2, and
so on.  A :class:`WedgeElement` stores the expansion sparsely, keyed by
strictly increasing tuples of global basis indices.  Multiplying every
factor of a wedge by a unit of the module (:func:`factorwise_multiply`)
realizes one orbit step, and reading coefficients off by shifting each
index up by one gives projective minor coordinates
(:func:`wedge_to_plucker`).  The whole pipeline deliberately never
forms a matrix product or a determinant; agreement with the
minor-based route is an invariant the tests enforce.
"""

from __future__ import annotations

from typing import Sequence

from . import _kernels as kernels
from .errors import AlgebraError
from .gf import FieldElement, ResidueElement
from .grassmann import PlueckerPoint, Subspace
from .linalg import index_tuples
from .orbits import GeneratorSpec, generator_matrix, generator_order


class ModuleElement:
    """One residue per generator block, the module picture of a row vector."""

    __slots__ = ("generator", "residues")

    def __init__(self, generator: GeneratorSpec, residues: Sequence[ResidueElement]):
        res = tuple(residues)
        if len(res) != len(generator.blocks):
            raise AlgebraError("residue count does not match block count")
        for r, b in zip(res, generator.blocks):
            if not isinstance(r, ResidueElement) or r.modulus != b:
                raise AlgebraError("residue modulus does not match its block polynomial")
        self.generator = generator
        self.residues = res

    def _check(self, other: "ModuleElement"):
        if not isinstance(other, ModuleElement):
            raise TypeError("expected a ModuleElement")
        if other.generator != self.generator:
            raise AlgebraError("module elements under different generators")

    def __mul__(self, other: "ModuleElement") -> "ModuleElement":
        self._check(other)
        return ModuleElement(
            self.generator, [a * b for a, b in zip(self.residues, other.residues)]
        )

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        self._check(other)
        return ModuleElement(
            self.generator, [a + b for a, b in zip(self.residues, other.residues)]
        )

    def __pow__(self, n: int) -> "ModuleElement":
        return ModuleElement(self.generator, [r**n for r in self.residues])

    @property
    def is_zero(self) -> bool:
        return all(r.is_zero for r in self.residues)

    @property
    def is_unit(self) -> bool:
        return all(r.is_unit for r in self.residues)

    def __eq__(self, other):
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return self.generator == other.generator and self.residues == other.residues

    def __hash__(self):
        return hash((self.generator, self.residues))

    def __str__(self):
        if len(self.residues) == 1:
            return str(self.residues[0])
        return "(" + ", ".join(str(r) for r in self.residues) + ")"

    def __repr__(self):
        return f"ModuleElement({self})"


def vector_to_module(vector: Sequence[int], g: GeneratorSpec) -> ModuleElement:
    """Cut a length-n row vector at block boundaries into residues."""
    v = [int(c) for c in vector]
    if len(v) != g.n:
        raise AlgebraError(f"vector length {len(v)} does not match generator size {g.n}")
    residues = []
    pos = 0
    for b in g.blocks:
        residues.append(ResidueElement(b, v[pos : pos + b.degree]))
        pos += b.degree
    return ModuleElement(g, residues)


def module_to_vector(m: ModuleElement) -> tuple[int, ...]:
    """Concatenate the residue coefficient vectors; inverse of the cut."""
    out: list[int] = []
    for r in m.residues:
        out.extend(r.coeffs)
    return tuple(out)


def x_element(g: GeneratorSpec) -> ModuleElement:
    """The element (x, ..., x), whose action mirrors the generator matrix."""
    return ModuleElement(g, [ResidueElement.x(b) for b in g.blocks])


def one_element(g: GeneratorSpec) -> ModuleElement:
    return ModuleElement(g, [ResidueElement.one(b) for b in g.blocks])


def basis_element(g: GeneratorSpec, i: int) -> ModuleElement:
    """Global basis member i: a monomial in its block, zero elsewhere."""
    if not 0 <= i < g.n:
        raise AlgebraError(f"basis index {i} out of range for n={g.n}")
    residues = []
    for b, off in zip(g.blocks, g.block_offsets):
        if off <= i < off + b.degree:
            residues.append(ResidueElement(b, [0] * (i - off) + [1]))
        else:
            residues.append(ResidueElement.zero(b))
    return ModuleElement(g, residues)


def commutes_with_generator(vector: Sequence[int], g: GeneratorSpec) -> bool:
    """Check that the module picture of v P equals the picture of v times x."""
    v = [int(c) for c in vector]
    if len(v) != g.n:
        raise AlgebraError(f"vector length {len(v)} does not match generator size {g.n}")
    p = generator_matrix(g)
    moved = kernels.matmul([v], p.to_lists(), g.spec.tables)[0]
    return vector_to_module(moved, g) == vector_to_module(v, g) * x_element(g)


class WedgeElement:
    """Sparse expansion of a k-fold wedge over the global module basis.

    ``coeffs`` maps strictly increasing index tuples over [0, n) to
    nonzero coefficient codes; it is stored sorted, so equal expansions
    compare and hash equal.
    """

    __slots__ = ("generator", "k", "coeffs")

    def __init__(self, generator: GeneratorSpec, k: int, coeffs):
        items = sorted(dict(coeffs).items())
        n = generator.n
        for t, c in items:
            if len(t) != k or any(a >= b for a, b in zip(t, t[1:])):
                raise AlgebraError(f"bad wedge basis tuple {t}")
            if any(not 0 <= i < n for i in t):
                raise AlgebraError(f"wedge index out of range in {t}")
            if not 0 < c < generator.spec.order:
                raise AlgebraError(f"wedge coefficient {c} must be a nonzero code")
        self.generator = generator
        self.k = k
        self.coeffs = tuple(items)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, t: Sequence[int]) -> FieldElement:
        key = tuple(t)
        for tt, c in self.coeffs:
            if tt == key:
                return FieldElement(self.generator.spec, c)
        return self.generator.spec.zero

    def scale(self, c) -> "WedgeElement":
        spec = self.generator.spec
        code = c.code if isinstance(c, FieldElement) else int(c)
        if code == 0:
            return WedgeElement(self.generator, self.k, {})
        mul = spec.mul
        return WedgeElement(
            self.generator, self.k, {t: mul(code, v) for t, v in self.coeffs}
        )

    def __add__(self, other: "WedgeElement") -> "WedgeElement":
        if not isinstance(other, WedgeElement):
            return NotImplemented
        if other.generator != self.generator or other.k != self.k:
            raise AlgebraError("wedge elements of different shapes")
        add = self.generator.spec.add
        acc = dict(self.coeffs)
        for t, c in other.coeffs:
            s = add(acc.get(t, 0), c)
            if s:
                acc[t] = s
            else:
                acc.pop(t, None)
        return WedgeElement(self.generator, self.k, acc)

    def __eq__(self, other):
        if not isinstance(other, WedgeElement):
            return NotImplemented
        return (
            self.generator == other.generator
            and self.k == other.k
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.generator, self.k, self.coeffs))

    def _basis_name(self, i: int) -> str:
        if len(self.generator.blocks) == 1:
            e = i
            return "1" if e == 0 else ("x" if e == 1 else f"x^{e}")
        for j, (b, off) in enumerate(zip(self.generator.blocks, self.generator.block_offsets), start=1):
            if off <= i < off + b.degree:
                e = i - off
                return f"1_{j}" if e == 0 else (f"a_{j}" if e == 1 else f"a_{j}^{e}")
        raise AlgebraError(f"basis index {i} out of range")

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for t, c in self.coeffs:
            body = "(" + "∧".join(self._basis_name(i) for i in t) + ")"
            parts.append(body if c == 1 else f"{c}*{body}")
        return " + ".join(parts)

    def __repr__(self):
        return f"WedgeElement({self})"


def _wedge_in_vector(
    terms: dict[tuple[int, ...], int], vector: Sequence[int], spec
) -> dict[tuple[int, ...], int]:
    """One multilinear expansion step: wedge every term with a vector."""
    add, mul, neg = spec.add, spec.mul, spec.neg
    out: dict[tuple[int, ...], int] = {}
    support = [(i, c) for i, c in enumerate(vector) if c]
    for t, coeff in terms.items():
        for i, c in support:
            if i in t:
                continue
            pos = sum(1 for e in t if e < i)
            value = mul(coeff, c)
            if (len(t) - pos) % 2:
                value = neg(value)
            key = t[:pos] + (i,) + t[pos:]
            s = add(out.get(key, 0), value)
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


def wedge_expand(elements: Sequence[ModuleElement]) -> WedgeElement:
    """Expand v_1 ^ ... ^ v_k over the global basis, multilinearly.

    Signs come from sorting each index insertion; tuples with repeats
    vanish.  Dependent inputs therefore produce the zero wedge.  The
    coefficients coincide with the k x k column minors of the stacked
    coefficient rows, but no determinant is computed here.
    """
    if not elements:
        raise AlgebraError("wedge of zero factors is not supported")
    g = elements[0].generator
    for m in elements:
        if m.generator != g:
            raise AlgebraError("wedge factors under different generators")
    spec = g.spec
    terms: dict[tuple[int, ...], int] = {(): 1}
    for m in elements:
        terms = _wedge_in_vector(terms, module_to_vector(m), spec)
        if not terms:
            break
    return WedgeElement(g, len(elements), terms)


def factorwise_multiply(w: WedgeElement, m: ModuleElement) -> WedgeElement:
    """The unit action on wedges: multiply every factor by m and re-expand.

    Each basis wedge e_{i_1} ^ ... ^ e_{i_k} becomes
    (e_{i_1} m) ^ ... ^ (e_{i_k} m), expanded again over the global
    basis.  With m = (x, ..., x) this follows one orbit step of the
    underlying subspace.
    """
    if m.generator != w.generator:
        raise AlgebraError("wedge and multiplier under different generators")
    if not m.is_unit:
        raise AlgebraError("factorwise multiplication needs a unit multiplier")
    g = w.generator
    spec = g.spec
    images = [module_to_vector(basis_element(g, i) * m) for i in range(g.n)]
    add = spec.add
    acc: dict[tuple[int, ...], int] = {}
    for t, coeff in w.coeffs:
        terms: dict[tuple[int, ...], int] = {(): coeff}
        for i in t:
            terms = _wedge_in_vector(terms, images[i], spec)
            if not terms:
                break
        for key, value in terms.items():
            s = add(acc.get(key, 0), value)
            if s:
                acc[key] = s
            else:
                acc.pop(key, None)
    return WedgeElement(g, w.k, acc)


def wedge_to_plucker(w: WedgeElement) -> PlueckerPoint:
    """Read a nonzero wedge as projective minor coordinates.

    The coefficient at global tuple (i_1, ..., i_k) lands at column
    tuple (i_1 + 1, ..., i_k + 1); the point constructor normalizes.
    """
    if w.is_zero:
        raise AlgebraError("the zero wedge is not the image of a subspace")
    g = w.generator
    n = g.n
    tuples = index_tuples(n, w.k)
    position = {t: i for i, t in enumerate(tuples)}
    coords = [0] * len(tuples)
    for t, c in w.coeffs:
        coords[position[tuple(i + 1 for i in t)]] = c
    return PlueckerPoint.from_coords(g.spec, n, w.k, coords)


def plucker_orbit(g: GeneratorSpec, seed: Subspace) -> tuple[PlueckerPoint, ...]:
    """Projective coordinates of the whole orbit from one wedge expansion.

    Expands the seed's rows once, then iterates the unit action of
    (x, ..., x), translating each step; no further matrices, minors, or
    echelon forms are touched.  Iteration stops when the starting point
    recurs, which happens exactly at the orbit length because the
    embedding is injective.
    """
    if seed.spec != g.spec:
        raise AlgebraError("seed and generator live over different fields")
    if seed.n != g.n:
        raise AlgebraError(f"seed ambient {seed.n} does not match generator size {g.n}")
    x = x_element(g)
    w = wedge_expand([vector_to_module(row, g) for row in seed.matrix.rows])
    first = wedge_to_plucker(w)
    points = [first]
    cap = generator_order(g)
    while True:
        w = factorwise_multiply(w, x)
        point = wedge_to_plucker(w)
        if point == first:
            break
        points.append(point)
        if len(points) > cap:
            raise AlgebraError("orbit failed to close within the generator order")
    return tuple(points)
