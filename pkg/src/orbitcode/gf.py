"""Exact arithmetic in GF(q), its polynomial ring, and residue rings.

Representation conventions used throughout the package:

- An element of GF(p^e) is stored as an integer code in [0, p^e).  The
  base-p digits of the code, least significant first, are the element's
  coordinates in the power basis 1, a, ..., a^(e-1) of the field's
  modulus.  For a prime field the code is simply the residue mod p.
- A polynomial is a tuple of element codes over its base field, lowest
  degree first, with trailing zeros trimmed.  The zero polynomial has
  an empty coefficient tuple and degree ``None`` (no degree).
- An element of GF(q)[x]/m(x) keeps its coefficient vector padded to
  deg(m) entries.

Field arithmetic is table driven, which keeps the matrix kernels
branch-free; table construction caps the field order at
``MAX_TABLE_ORDER``.  Larger rings are reached through residue rings
over a small base field, which need no tables.
"""

from __future__ import annotations

import functools
import re
from typing import Iterator, Sequence

import numpy as np

from ._kernels.tables import FieldTables
from .errors import AlgebraError, ParseError

MAX_TABLE_ORDER = 1024


def is_prime(n: int) -> bool:
    """Trial-division primality check, adequate at desk scale."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _factor_prime_power(q: int) -> tuple[int, int]:
    """Split q into (p, e) with p prime, or raise."""
    if q < 2:
        raise AlgebraError(f"field order must be at least 2, got {q}")
    for p in range(2, q + 1):
        if q % p == 0:
            e = 0
            m = q
            while m % p == 0:
                m //= p
                e += 1
            if m != 1:
                raise AlgebraError(f"{q} is not a prime power")
            return p, e
    raise AlgebraError(f"{q} is not a prime power")


# ---------------------------------------------------------------------------
# Prime-coefficient polynomial helpers, used to bootstrap extension fields.
# Coefficients are plain ints mod p, lowest degree first, trimmed.
# ---------------------------------------------------------------------------


def _ptrim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    # m must be monic
    r = list(a)
    dm = len(m) - 1
    while len(r) - 1 >= dm and r:
        lead = r[-1]
        shift = len(r) - 1 - dm
        if lead:
            for i in range(dm):
                r[shift + i] = (r[shift + i] - lead * m[i]) % p
        r.pop()
        _ptrim(r)
    return r


class FieldSpec:
    """A finite field GF(p^e) with a fixed modulus and element coding.

    Use the :func:`GF` factory in preference to the constructor; it
    normalizes and interns specs so that equal fields share their
    arithmetic tables.
    """

    __slots__ = ("characteristic", "degree", "order", "modulus", "_tables", "_pow")

    def __init__(self, characteristic: int, degree: int = 1, modulus=None):
        if not is_prime(characteristic):
            raise AlgebraError(f"characteristic {characteristic} is not prime")
        if degree < 1:
            raise AlgebraError(f"extension degree must be positive, got {degree}")
        p = characteristic
        q = p**degree
        if q > MAX_TABLE_ORDER:
            raise AlgebraError(
                f"field order {q} exceeds the desk-scale cap {MAX_TABLE_ORDER}; "
                "use a residue ring over a smaller base field instead"
            )
        self.characteristic = p
        self.degree = degree
        self.order = q
        self._tables = None
        self._pow = [p**i for i in range(degree)]
        if degree == 1:
            if modulus is not None:
                raise AlgebraError("prime fields take no modulus")
            self.modulus = None
        else:
            if modulus is None:
                modulus = smallest_irreducible(GF(p), degree)
            elif not isinstance(modulus, Polynomial):
                modulus = parse_polynomial(modulus, GF(p)) if isinstance(modulus, str) else Polynomial(GF(p), modulus)
            if modulus.base.order != p:
                raise AlgebraError("modulus must have coefficients in the prime field")
            if modulus.degree != degree or not modulus.is_monic:
                raise AlgebraError(f"modulus must be monic of degree {degree}, got {modulus}")
            if not is_irreducible(modulus):
                raise AlgebraError(f"modulus {modulus} is reducible over GF({p})")
            self.modulus = modulus

    # -- identity ----------------------------------------------------------

    def _key(self):
        mod = None if self.modulus is None else self.modulus.coeffs
        return (self.characteristic, self.degree, mod)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.degree == 1:
            return f"GF({self.order})"
        return f"GF({self.order}, modulus={self.modulus})"

    # -- element coding ----------------------------------------------------

    def _encode(self, digits: Sequence[int]) -> int:
        return sum(d * w for d, w in zip(digits, self._pow))

    def _decode(self, code: int) -> tuple[int, ...]:
        p = self.characteristic
        return tuple((code // w) % p for w in self._pow)

    def element(self, value) -> "FieldElement":
        """Element from an integer code or a coefficient sequence over GF(p)."""
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise AlgebraError(f"element of {value.spec!r} is not in {self!r}")
            return value
        if isinstance(value, int):
            if not 0 <= value < self.order:
                raise AlgebraError(f"code {value} out of range for {self!r}")
            return FieldElement(self, value)
        coeffs = list(value)
        if len(coeffs) > self.degree:
            raise AlgebraError(f"too many coefficients for {self!r}")
        coeffs += [0] * (self.degree - len(coeffs))
        p = self.characteristic
        if any(not 0 <= c < p for c in coeffs):
            raise AlgebraError(f"coefficients must lie in [0, {p})")
        return FieldElement(self, self._encode(coeffs))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def gen(self) -> "FieldElement":
        """The residue class of x for an extension field."""
        if self.degree == 1:
            raise AlgebraError("prime fields have no distinguished generator element")
        return FieldElement(self, self.characteristic)

    def elements(self) -> Iterator["FieldElement"]:
        return (FieldElement(self, c) for c in range(self.order))

    # -- scalar arithmetic on codes -----------------------------------------

    @property
    def tables(self) -> FieldTables:
        if self._tables is None:
            self._tables = self._build_tables()
        return self._tables

    def add(self, a: int, b: int) -> int:
        return self.tables.add_list[a][b]

    def sub(self, a: int, b: int) -> int:
        t = self.tables
        return t.add_list[a][t.neg_list[b]]

    def mul(self, a: int, b: int) -> int:
        return self.tables.mul_list[a][b]

    def neg(self, a: int) -> int:
        return self.tables.neg_list[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self!r}")
        return self.tables.inv_list[a]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def _embed_int(self, n: int) -> int:
        # ring homomorphism Z -> GF(p^e); lands in the prime subfield
        return n % self.characteristic

    def _build_tables(self) -> FieldTables:
        q = self.order
        p = self.characteristic
        if self.degree == 1:
            idx = np.arange(q, dtype=np.int64)
            add = (idx[:, None] + idx[None, :]) % p
            mul = (idx[:, None] * idx[None, :]) % p
            neg = (p - idx) % p
            inv = np.array([0] + [pow(i, p - 2, p) for i in range(1, q)], dtype=np.int64)
        else:
            digits = np.array([self._decode(c) for c in range(q)], dtype=np.int64)
            weights = np.array(self._pow, dtype=np.int64)
            add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
            neg = ((p - digits) % p) @ weights
            exp, log = self._discrete_log_tables()
            exp_np = np.array(exp, dtype=np.int64)
            log_np = np.array(log, dtype=np.int64)
            a = log_np[:, None] + log_np[None, :]
            mul = exp_np[a % (q - 1)]
            mul[0, :] = 0
            mul[:, 0] = 0
            inv = np.zeros(q, dtype=np.int64)
            inv[1:] = exp_np[(q - 1 - log_np[1:]) % (q - 1)]
        return FieldTables(q, add.tolist(), mul.tolist(), neg.tolist(), inv.tolist())

    def _discrete_log_tables(self) -> tuple[list[int], list[int]]:
        # find a generator of the (cyclic) multiplicative group and tabulate it
        q = self.order
        p = self.characteristic
        m = self.modulus.coeffs

        def raw_mul(a: int, b: int) -> int:
            prod = _pmod(_pmul(self._decode(a), self._decode(b), p), m, p)
            return self._encode(prod + [0] * (self.degree - len(prod)))

        for g in range(2, q):
            exp = [1]
            v = g
            while v != 1:
                exp.append(v)
                v = raw_mul(v, g)
                if len(exp) > q:
                    raise AlgebraError("multiplicative group iteration failed to close")
            if len(exp) == q - 1:
                log = [0] * q
                for i, c in enumerate(exp):
                    log[c] = i
                return exp, log
        raise AlgebraError(f"no multiplicative generator found for {self!r}")


@functools.lru_cache(maxsize=None)
def _interned_spec(p: int, e: int, modulus_coeffs) -> FieldSpec:
    if modulus_coeffs is None:
        return FieldSpec(p, e)
    return FieldSpec(p, e, Polynomial(GF(p), modulus_coeffs))


def GF(q: int, modulus=None) -> FieldSpec:
    """The field with q elements.

    For prime powers q = p^e with e > 1 the modulus may be given as a
    :class:`Polynomial` over GF(p), a coefficient sequence, or a string
    such as ``"x^2+x+1"``.  When omitted, the irreducible of degree e
    whose non-leading coefficient vector is smallest as a base-p numeral
    is chosen, so repeated calls are reproducible.
    """
    p, e = _factor_prime_power(q)
    if modulus is None:
        if e == 1:
            return _interned_spec(p, 1, None)
        default = smallest_irreducible(_interned_spec(p, 1, None), e)
        return _interned_spec(p, e, default.coeffs)
    if e == 1:
        raise AlgebraError("prime fields take no modulus")
    prime = _interned_spec(p, 1, None)
    if isinstance(modulus, str):
        modulus = parse_polynomial(modulus, prime)
    elif not isinstance(modulus, Polynomial):
        modulus = Polynomial(prime, modulus)
    return _interned_spec(p, e, modulus.coeffs)


class FieldElement:
    """An element of a :class:`FieldSpec`, stored as an integer code."""

    __slots__ = ("spec", "code")

    def __init__(self, spec: FieldSpec, code: int):
        self.spec = spec
        self.code = code

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Coordinates over GF(p) in the power basis, length = degree."""
        return self.spec._decode(self.code)

    def _coerce(self, other) -> "int | None":
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise AlgebraError(f"mixed fields: {self.spec!r} and {other.spec!r}")
            return other.code
        if isinstance(other, int):
            return self.spec._embed_int(other)
        return None

    def __add__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.add(self.code, c))

    __radd__ = __add__

    def __sub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.sub(self.code, c))

    def __rsub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.sub(c, self.code))

    def __mul__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.mul(self.code, c))

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        if c == 0:
            raise ZeroDivisionError(f"division by zero in {self.spec!r}")
        return FieldElement(self.spec, self.spec.div(self.code, c))

    def __rtruediv__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        if self.code == 0:
            raise ZeroDivisionError(f"division by zero in {self.spec!r}")
        return FieldElement(self.spec, self.spec.div(c, self.code))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.code))

    def __pow__(self, n: int):
        if n < 0:
            return (self**-n).inverse()
        out = self.spec.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv(self.code))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.code == other.code
        if isinstance(other, int):
            return self.code == self.spec._embed_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.code))

    def __bool__(self):
        return self.code != 0

    def __str__(self):
        return str(self.code)

    def __repr__(self):
        return f"{self.spec!r}[{self.code}]"


class Polynomial:
    """Univariate polynomial over a finite field.

    Coefficients are element codes, lowest degree first, trailing zeros
    trimmed.  The zero polynomial has degree ``None``.
    """

    __slots__ = ("base", "coeffs")

    def __init__(self, base: FieldSpec, coeffs: Sequence = ()):
        cs = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.spec != base:
                    raise AlgebraError("coefficient from a different field")
                cs.append(c.code)
            else:
                code = int(c)
                if not 0 <= code < base.order:
                    raise AlgebraError(f"coefficient code {code} out of range for {base!r}")
                cs.append(code)
        while cs and cs[-1] == 0:
            cs.pop()
        self.base = base
        self.coeffs = tuple(cs)

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, base: FieldSpec) -> "Polynomial":
        return cls(base, ())

    @classmethod
    def one(cls, base: FieldSpec) -> "Polynomial":
        return cls(base, (1,))

    @classmethod
    def x(cls, base: FieldSpec) -> "Polynomial":
        return cls(base, (0, 1))

    # -- structure -----------------------------------------------------------

    @property
    def degree(self) -> "int | None":
        """Degree, or None for the zero polynomial (which has no degree)."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def constant_term(self) -> "FieldElement":
        return FieldElement(self.base, self.coeffs[0] if self.coeffs else 0)

    def coefficient(self, i: int) -> "FieldElement":
        code = self.coeffs[i] if 0 <= i < len(self.coeffs) else 0
        return FieldElement(self.base, code)

    def monic(self) -> "Polynomial":
        if self.is_zero:
            raise AlgebraError("the zero polynomial cannot be made monic")
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        s = self.base.inv(lead)
        return Polynomial(self.base, [self.base.mul(c, s) for c in self.coeffs])

    def evaluate(self, at: FieldElement) -> FieldElement:
        if at.spec != self.base:
            raise AlgebraError("evaluation point from a different field")
        acc = self.base.zero
        for c in reversed(self.coeffs):
            acc = acc * at + FieldElement(self.base, c)
        return acc

    # -- arithmetic ------------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if not isinstance(other, Polynomial):
            raise TypeError("expected a Polynomial")
        if other.base != self.base:
            raise AlgebraError(f"mixed base fields: {self.base!r} and {other.base!r}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        f = self.base.add
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f(out[i], c)
        return Polynomial(self.base, out)

    def __neg__(self) -> "Polynomial":
        n = self.base.neg
        return Polynomial(self.base, [n(c) for c in self.coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        if self.is_zero or other.is_zero:
            return Polynomial.zero(self.base)
        add, mul = self.base.add, self.base.mul
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = add(out[i + j], mul(a, b))
        return Polynomial(self.base, out)

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        base = self.base
        add, mul, neg = base.add, base.mul, base.neg
        ilead = base.inv(other.coeffs[-1])
        r = list(self.coeffs)
        dq = len(r) - len(other.coeffs)
        if dq < 0:
            return Polynomial.zero(base), self
        q = [0] * (dq + 1)
        db = len(other.coeffs) - 1
        while len(r) - 1 >= db and r:
            lead = r[-1]
            shift = len(r) - 1 - db
            if lead:
                factor = mul(lead, ilead)
                q[shift] = factor
                nf = neg(factor)
                for i, c in enumerate(other.coeffs):
                    if c:
                        r[shift + i] = add(r[shift + i], mul(nf, c))
            r.pop()
            while r and r[-1] == 0:
                r.pop()
        return Polynomial(base, q), Polynomial(base, r)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise AlgebraError("negative polynomial powers are not defined")
        out = Polynomial.one(self.base)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.base == other.base and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.base, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    # -- formatting --------------------------------------------------------

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else str(c)
                terms.append(f"{head}x" if i == 1 else f"{head}x^{i}")
        return "+".join(terms)

    def __repr__(self):
        return f"Polynomial({self.base!r}, {self})"

    def coeff_text(self) -> str:
        """Low-to-high comma form, e.g. '1,1,0,1' for 1+x+x^3."""
        if self.is_zero:
            return "0"
        return ",".join(str(c) for c in self.coeffs)


_TERM_RE = re.compile(r"^(\d+)?\*?x(?:\^(\d+))?$")


def parse_polynomial(text: str, base: FieldSpec) -> Polynomial:
    """Parse '1,1,0,1' (codes, low degree first) or 'x^3+x+1'."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ParseError("empty polynomial")
    if "x" not in s:
        parts = s.split(",")
        try:
            codes = [int(p) for p in parts]
        except ValueError as exc:
            raise ParseError(f"bad polynomial coefficient in {text!r}") from exc
        if any(not 0 <= c < base.order for c in codes):
            raise ParseError(f"coefficient out of range for {base!r} in {text!r}")
        return Polynomial(base, codes)
    if s[0] not in "+-":
        s = "+" + s
    chunks = re.findall(r"([+-])([^+-]+)", s)
    if "".join(sign + body for sign, body in chunks) != s:
        raise ParseError(f"cannot parse polynomial {text!r}")
    coeffs: dict[int, int] = {}
    for sign, body in chunks:
        m = _TERM_RE.match(body)
        if m:
            c = int(m.group(1)) if m.group(1) else 1
            exp = int(m.group(2)) if m.group(2) else 1
        elif body.isdigit():
            c = int(body)
            exp = 0
        else:
            raise ParseError(f"bad polynomial term {body!r} in {text!r}")
        if not 0 <= c < base.order:
            raise ParseError(f"coefficient {c} out of range for {base!r}")
        if sign == "-":
            c = base.neg(c)
        coeffs[exp] = base.add(coeffs.get(exp, 0), c)
    out = [0] * (max(coeffs) + 1)
    for exp, c in coeffs.items():
        out[exp] = c
    return Polynomial(base, out)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor; gcd(0, 0) is 0."""
    a._check(b)
    while not b.is_zero:
        a, b = b, a % b
    return a.monic() if not a.is_zero else a


def poly_powmod(f: Polynomial, n: int, mod: Polynomial) -> Polynomial:
    """f^n reduced mod a nonzero polynomial."""
    if mod.is_zero:
        raise ZeroDivisionError("reduction modulo the zero polynomial")
    out = Polynomial.one(f.base)
    base = f % mod
    while n:
        if n & 1:
            out = out * base % mod
        base = base * base % mod
        n >>= 1
    return out


def is_irreducible(f: Polynomial) -> bool:
    """Irreducibility over the base field, by the gcd ladder.

    Checks gcd(f, x^(q^i) - x) = 1 for all i up to deg(f)/2, which
    detects any factor of degree at most deg(f)/2.  Requires a monic
    input of degree at least 1.
    """
    if f.degree is None or f.degree < 1:
        raise AlgebraError("irreducibility is defined for polynomials of degree >= 1")
    if not f.is_monic:
        raise AlgebraError("irreducibility test expects a monic polynomial")
    q = f.base.order
    x = Polynomial.x(f.base)
    h = x % f
    for _ in range(f.degree // 2):
        h = poly_powmod(h, q, f)
        if poly_gcd(f, h - x).degree != 0:
            return False
    return True


def is_primitive(f: Polynomial) -> bool:
    """True when f is irreducible and x generates the residue field's units."""
    if not is_irreducible(f):
        return False
    order = f.base.order**f.degree - 1
    return multiplicative_order(ResidueElement.x(f)) == order


def smallest_irreducible(base: FieldSpec, degree: int) -> Polynomial:
    """First monic irreducible of the given degree in code order.

    Candidates are scanned by increasing value of the non-leading
    coefficient vector read as a base-q numeral, so the choice is
    deterministic.
    """
    if degree < 1:
        raise AlgebraError("degree must be positive")
    q = base.order
    for code in range(q**degree):
        coeffs = [(code // q**i) % q for i in range(degree)] + [1]
        f = Polynomial(base, coeffs)
        if is_irreducible(f):
            return f
    raise AlgebraError("no irreducible polynomial found")  # unreachable


class ResidueElement:
    """An element of GF(q)[x]/m(x) for a monic modulus m of degree >= 1.

    The coefficient vector is kept padded to deg(m) entries, so equal
    residues compare equal componentwise.
    """

    __slots__ = ("modulus", "coeffs")

    def __init__(self, modulus: Polynomial, coeffs: Sequence[int]):
        if modulus.degree is None or modulus.degree < 1 or not modulus.is_monic:
            raise AlgebraError("residue modulus must be monic of degree >= 1")
        m = modulus.degree
        cs = [int(c) for c in coeffs]
        if len(cs) > m:
            raise AlgebraError("residue coefficients exceed modulus degree")
        q = modulus.base.order
        if any(not 0 <= c < q for c in cs):
            raise AlgebraError("residue coefficient out of range")
        cs += [0] * (m - len(cs))
        self.modulus = modulus
        self.coeffs = tuple(cs)

    @classmethod
    def from_poly(cls, value: Polynomial, modulus: Polynomial) -> "ResidueElement":
        value._check(modulus)
        return cls(modulus, (value % modulus).coeffs)

    @classmethod
    def zero(cls, modulus: Polynomial) -> "ResidueElement":
        return cls(modulus, ())

    @classmethod
    def one(cls, modulus: Polynomial) -> "ResidueElement":
        return cls(modulus, (1,))

    @classmethod
    def x(cls, modulus: Polynomial) -> "ResidueElement":
        return cls.from_poly(Polynomial.x(modulus.base), modulus)

    def lift(self) -> Polynomial:
        """The unique representative of degree below deg(modulus)."""
        return Polynomial(self.modulus.base, self.coeffs)

    @property
    def base(self) -> FieldSpec:
        return self.modulus.base

    def _check(self, other: "ResidueElement"):
        if not isinstance(other, ResidueElement):
            raise TypeError("expected a ResidueElement")
        if other.modulus != self.modulus:
            raise AlgebraError("mixed residue rings")

    def __add__(self, other: "ResidueElement") -> "ResidueElement":
        self._check(other)
        f = self.base.add
        return ResidueElement(self.modulus, [f(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "ResidueElement") -> "ResidueElement":
        self._check(other)
        f = self.base.sub
        return ResidueElement(self.modulus, [f(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "ResidueElement":
        n = self.base.neg
        return ResidueElement(self.modulus, [n(a) for a in self.coeffs])

    def __mul__(self, other: "ResidueElement") -> "ResidueElement":
        self._check(other)
        prod = self.lift() * other.lift()
        return ResidueElement(self.modulus, (prod % self.modulus).coeffs)

    def scale(self, c: int) -> "ResidueElement":
        mul = self.base.mul
        return ResidueElement(self.modulus, [mul(a, c) for a in self.coeffs])

    def __pow__(self, n: int) -> "ResidueElement":
        if n < 0:
            raise AlgebraError("negative residue powers are not supported")
        return ResidueElement(self.modulus, poly_powmod(self.lift(), n, self.modulus).coeffs)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @property
    def is_unit(self) -> bool:
        return poly_gcd(self.lift(), self.modulus).degree == 0

    def __eq__(self, other):
        if not isinstance(other, ResidueElement):
            return NotImplemented
        return self.modulus == other.modulus and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.modulus, self.coeffs))

    def __str__(self):
        return str(self.lift())

    def __repr__(self):
        return f"ResidueElement({self.lift()} mod {self.modulus})"


def multiplicative_order(e) -> int:
    """Least N >= 1 with e^N = 1, by iterated multiplication.

    Works for :class:`FieldElement` and :class:`ResidueElement` units;
    the iteration is capped at q^m - 1 for a ring with q^m elements.
    """
    if isinstance(e, FieldElement):
        if e.code == 0:
            raise AlgebraError("0 has no multiplicative order")
        one = e.spec.one
        cap = e.spec.order - 1
    elif isinstance(e, ResidueElement):
        if not e.is_unit:
            raise AlgebraError(f"{e!r} is not a unit in its residue ring")
        one = ResidueElement.one(e.modulus)
        cap = e.base.order**e.modulus.degree - 1
    else:
        raise TypeError("multiplicative_order expects a FieldElement or ResidueElement")
    acc = e
    n = 1
    while acc != one:
        acc = acc * e
        n += 1
        if n > cap:
            raise AlgebraError("order iteration exceeded the ring's unit bound")
    return n
