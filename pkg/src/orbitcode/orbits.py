"""Cyclic orbit codes: generators in rational canonical form and orbits.

A generator is specified by its list of companion-block polynomials.
The generated cyclic group acts on the Grassmannian by right matrix
multiplication; the orbit of a seed subspace is a constant-dimension
code.  The block polynomials also classify the generator: one
irreducible block, all blocks irreducible, or anything else.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

from .errors import AlgebraError
from .gf import (
    FieldSpec,
    Polynomial,
    ResidueElement,
    is_irreducible,
    multiplicative_order,
    parse_polynomial,
)
from .grassmann import Subspace, subspace_distance
from .linalg import FqMatrix, block_diagonal, companion_matrix


class ReducibilityClass(enum.Enum):
    IRREDUCIBLE = "irreducible"
    COMPLETELY_REDUCIBLE = "completely_reducible"
    NON_COMPLETELY_REDUCIBLE = "non_completely_reducible"

    def __str__(self):
        return self.value


class GeneratorSpec:
    """A block-diagonal companion generator of an invertible cyclic group.

    Blocks are monic polynomials of degree >= 1 with nonzero constant
    term (a zero constant term would make the companion singular).
    Block order is significant and preserved.
    """

    __slots__ = ("spec", "blocks")

    def __init__(self, spec: FieldSpec, blocks: Sequence):
        parsed = []
        for b in blocks:
            if isinstance(b, str):
                b = parse_polynomial(b, spec)
            elif not isinstance(b, Polynomial):
                b = Polynomial(spec, b)
            if b.base != spec:
                raise AlgebraError("block polynomial over a different field")
            if b.degree is None or b.degree < 1:
                raise AlgebraError("block polynomials must have degree >= 1")
            if not b.is_monic:
                raise AlgebraError(f"block polynomial {b} is not monic")
            if b.coeffs[0] == 0:
                raise AlgebraError(f"block polynomial {b} has zero constant term (singular generator)")
            parsed.append(b)
        if not parsed:
            raise AlgebraError("a generator needs at least one block")
        self.spec = spec
        self.blocks = tuple(parsed)

    @property
    def n(self) -> int:
        return sum(b.degree for b in self.blocks)

    @property
    def block_offsets(self) -> tuple[int, ...]:
        """Starting index of each block in the concatenated coordinate vector."""
        offs = []
        acc = 0
        for b in self.blocks:
            offs.append(acc)
            acc += b.degree
        return tuple(offs)

    def __eq__(self, other):
        if not isinstance(other, GeneratorSpec):
            return NotImplemented
        return self.spec == other.spec and self.blocks == other.blocks

    def __hash__(self):
        return hash((self.spec, self.blocks))

    def __repr__(self):
        blocks = "; ".join(str(b) for b in self.blocks)
        return f"GeneratorSpec({self.spec!r}, [{blocks}])"


def classify(g: GeneratorSpec) -> ReducibilityClass:
    """Reducibility class from the block polynomials."""
    if all(is_irreducible(b) for b in g.blocks):
        if len(g.blocks) == 1:
            return ReducibilityClass.IRREDUCIBLE
        return ReducibilityClass.COMPLETELY_REDUCIBLE
    return ReducibilityClass.NON_COMPLETELY_REDUCIBLE


def generator_matrix(g: GeneratorSpec) -> FqMatrix:
    """Block-diagonal assembly of the companion matrices, in block order."""
    return block_diagonal([companion_matrix(b) for b in g.blocks])


def generator_order(g: GeneratorSpec) -> int:
    """Multiplicative order of the generator matrix.

    Computed blockwise: the order of the companion of p is the order of
    x in GF(q)[x]/p(x), and the block-diagonal order is their lcm.
    """
    return math.lcm(*(multiplicative_order(ResidueElement.x(b)) for b in g.blocks))


@dataclass(frozen=True)
class OrbitCode:
    """The orbit of a seed subspace under a cyclic generator.

    ``codewords[i]`` is the canonical form of seed P^i; the tuple stops
    right before the seed recurs.  ``min_distance`` is None for a
    one-word orbit, where no pair of distinct codewords exists.
    """

    generator: GeneratorSpec
    seed: Subspace
    codewords: tuple[Subspace, ...]
    min_distance: "int | None"

    @property
    def orbit_length(self) -> int:
        return len(self.codewords)

    @property
    def classification(self) -> ReducibilityClass:
        return classify(self.generator)

    def as_dict(self) -> dict:
        """JSON-ready summary; field codes appear as plain integers."""
        spec = self.generator.spec
        return {
            "q": spec.order,
            "modulus": None if spec.modulus is None else list(spec.modulus.coeffs),
            "blocks": [list(b.coeffs) for b in self.generator.blocks],
            "classification": str(self.classification),
            "n": self.seed.n,
            "k": self.seed.k,
            "generator_order": generator_order(self.generator),
            "orbit_length": self.orbit_length,
            "min_distance": self.min_distance,
            "seed": self.seed.matrix.to_text(),
            "codewords": [w.matrix.to_text() for w in self.codewords],
        }


def orbit(g: GeneratorSpec, seed: Subspace) -> OrbitCode:
    """Enumerate the cyclic orbit of a seed and its minimum distance.

    The trajectory U, UP, UP^2, ... is a pure cycle because P is
    invertible, so iteration stops exactly when the seed recurs.  The
    minimum distance uses the single-center shortcut: right
    multiplication by P preserves distances, hence
    d(UP^a, UP^b) = d(U, UP^(b-a)) and the minimum over pairs equals
    the minimum over distances from the seed.
    """
    if seed.spec != g.spec:
        raise AlgebraError("seed and generator live over different fields")
    if seed.n != g.n:
        raise AlgebraError(f"seed ambient {seed.n} does not match generator size {g.n}")
    p = generator_matrix(g)
    cap = generator_order(g)
    words = [seed]
    current = seed @ p
    while current != seed:
        words.append(current)
        current = current @ p
        if len(words) > cap:
            raise AlgebraError("orbit failed to close within the generator order")
    if len(words) == 1:
        dist = None
    else:
        dist = min(subspace_distance(seed, w) for w in words[1:])
    return OrbitCode(g, seed, tuple(words), dist)
