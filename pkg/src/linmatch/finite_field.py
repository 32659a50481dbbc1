"""Exact arithmetic in simple extensions K[x]/(f) with K = GF(p) or Q.

Polynomials are little-endian coefficient tuples with no trailing zeros; the
zero polynomial is the empty tuple.  The text format used throughout the
package (CLI flags, JSON reports) is the comma-separated coefficient list, so
``"1,1,1"`` is x^2 + x + 1 and ``"-2,0,0,1"`` is x^3 - 2.  Rational
coefficients are written ``"p/q"``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Iterator, Optional, Sequence, Union

from . import linalg
from .errors import (ContextMismatch, InvariantViolation, NotADivisor, NotDecidable,
                     RationalBase, ZeroPolynomial)
from .numtheory import divisors, is_prime, prime_factors


# ---------------------------------------------------------------------------
# Base fields
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PrimeField:
    """GF(p) with elements stored as ints in ``range(p)``."""

    p: int
    zero = 0
    one = 1
    is_finite = True

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def order(self) -> int:
        return self.p

    @property
    def mod(self) -> int:
        return self.p

    @property
    def characteristic(self) -> int:
        return self.p

    def normalize(self, a) -> int:
        if type(a) is int:
            return a % self.p
        if isinstance(a, Fraction):
            if a.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return a.numerator * pow(a.denominator, -1, self.p) % self.p
        return int(a) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def key(self, a):
        return a

    def elements(self) -> Iterator[int]:
        return iter(range(self.p))

    def random(self, rng: random.Random) -> int:
        return rng.randrange(self.p)

    def parse(self, text: str) -> int:
        return self.normalize(Fraction(text.strip()))

    def format(self, a) -> str:
        return str(a)

    def __str__(self):
        return f"GF({self.p})"


class RationalField:
    """The rationals, elements stored as ``fractions.Fraction``."""

    zero = Fraction(0)
    one = Fraction(1)
    is_finite = False
    order = None
    characteristic = 0
    p = 0

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __reduce__(self):
        return (RationalField, ())

    def normalize(self, a) -> Fraction:
        return Fraction(a)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def is_zero(self, a) -> bool:
        return a == 0

    def key(self, a):
        return a

    def elements(self):
        raise TypeError("the rationals are infinite")

    def random(self, rng: random.Random, bound: int = 4) -> Fraction:
        return Fraction(rng.randint(-bound, bound))

    def parse(self, text: str) -> Fraction:
        return Fraction(text.strip())

    def format(self, a) -> str:
        return str(a)

    def __str__(self):
        return "Q"

    def __repr__(self):
        return "QQ"


QQ = RationalField()
BaseField = Union[PrimeField, RationalField]


def base_field(spec) -> BaseField:
    """Coerce a prime, ``"Q"`` or an existing base field into a base field."""
    if isinstance(spec, (PrimeField, RationalField)):
        return spec
    if isinstance(spec, str):
        if spec.strip().upper() in ("Q", "QQ"):
            return QQ
        spec = int(spec)
    return PrimeField(int(spec))


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Polynomial:
    """Polynomial over a base field, coefficients little-endian."""

    coeffs: tuple
    base: BaseField = field(compare=True)

    def __post_init__(self):
        c = [self.base.normalize(a) for a in self.coeffs]
        while c and self.base.is_zero(c[-1]):
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def x(cls, base: BaseField) -> "Polynomial":
        return cls((0, 1), base)

    @classmethod
    def constant(cls, c, base: BaseField) -> "Polynomial":
        return cls((c,), base)

    @classmethod
    def from_text(cls, text: str, base) -> "Polynomial":
        base = base_field(base)
        text = text.strip()
        if not text:
            return cls((), base)
        return cls(tuple(base.parse(t) for t in text.split(",")), base)

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        return ",".join(self.base.format(a) for a in self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else self.base.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.lead == self.base.one

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no monic associate")
        inv = self.base.inv(self.lead)
        return Polynomial(tuple(self.base.mul(inv, a) for a in self.coeffs), self.base)

    def _check(self, other: "Polynomial"):
        if self.base != other.base:
            raise ContextMismatch(f"polynomials over {self.base} and {other.base}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        a = a + (self.base.zero,) * (n - len(a))
        b = b + (self.base.zero,) * (n - len(b))
        return Polynomial(tuple(x + y for x, y in zip(a, b)), self.base)

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-a for a in self.coeffs), self.base)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial((), self.base)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Polynomial(tuple(out), self.base)

    def __divmod__(self, other: "Polynomial"):
        self._check(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.base
        rem = list(self.coeffs)
        d = other.degree
        inv_lead = F.inv(other.lead)
        quo = [F.zero] * max(len(rem) - d, 0)
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k]
            if F.is_zero(c):
                continue
            t = F.mul(c, inv_lead)
            quo[k - d] = t
            for j, bj in enumerate(other.coeffs):
                rem[k - d + j] = F.sub(rem[k - d + j], F.mul(t, bj))
        return Polynomial(tuple(quo), F), Polynomial(tuple(rem[:d]), F)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        """Evaluate by Horner's rule at a base scalar or a FieldElement."""
        acc = x * 0 if isinstance(x, FieldElement) else self.base.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc if isinstance(x, FieldElement) else self.base.normalize(acc)

    def powmod(self, e: int, mod: "Polynomial") -> "Polynomial":
        result = Polynomial((1,), self.base) % mod
        b = self % mod
        while e:
            if e & 1:
                result = (result * b) % mod
            b = (b * b) % mod
            e >>= 1
        return result

    def __str__(self):
        terms = []
        for i, c in reversed(list(enumerate(self.coeffs))):
            if self.base.is_zero(c):
                continue
            mon = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            coef = self.base.format(c)
            if mon and coef == "1":
                coef = ""
            elif mon and coef == "-1":
                coef = "-"
            terms.append(f"{coef}{'*' if coef not in ('', '-') and mon else ''}{mon}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd (zero if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a if a.is_zero() else a.monic()


def poly_xgcd(a: Polynomial, b: Polynomial):
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` monic."""
    F = a.base
    zero, one = Polynomial((), F), Polynomial((1,), F)
    r0, r1, s0, s1, t0, t1 = a, b, one, zero, zero, one
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    c = Polynomial((F.inv(r0.lead),), F)
    return r0 * c, s0 * c, t0 * c


# ---------------------------------------------------------------------------
# Irreducibility
# ---------------------------------------------------------------------------

def _integer_coefficients(f: Polynomial) -> list[int]:
    m = lcm(*(Fraction(c).denominator for c in f.coeffs))
    return [int(Fraction(c) * m) for c in f.coeffs]


def rational_roots(f: Polynomial) -> list[Fraction]:
    """All rational roots of a nonzero polynomial over Q, sorted."""
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial vanishes everywhere")
    c = _integer_coefficients(f)
    roots = set()
    k = 0
    while c[k] == 0:
        k += 1
    if k:
        roots.add(Fraction(0))
    c = c[k:]
    if len(c) > 1:
        for r in divisors(abs(c[0])):
            for s in divisors(abs(c[-1])):
                for cand in (Fraction(r, s), Fraction(-r, s)):
                    if f(cand) == 0:
                        roots.add(cand)
    return sorted(roots)


def _x_pow_p_iter(f: Polynomial, k: int) -> Polynomial:
    p = f.base.p
    h = Polynomial.x(f.base) % f
    for _ in range(k):
        h = h.powmod(p, f)
    return h


def _rabin(f: Polynomial) -> bool:
    n = f.degree
    if n == 1:
        return True
    f = f.monic()
    x = Polynomial.x(f.base)
    if _x_pow_p_iter(f, n) != x % f:
        return False
    for q in prime_factors(n):
        h = _x_pow_p_iter(f, n // q)
        if poly_gcd(h - x, f).degree != 0:
            return False
    return True


_SMALL_PRIMES = [q for q in range(2, 600) if is_prime(q)]


def poly_is_irreducible(f: Polynomial) -> bool:
    """Irreducibility over the coefficient field.

    Over GF(p) this is Rabin's test and always decides.  Over Q, degrees up to
    three reduce to the rational root test; larger degrees are certified
    irreducible if some reduction modulo a prime keeping the degree is
    irreducible, refuted by a rational root, and otherwise ``NotDecidable``.
    """
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial")
    if f.degree < 1:
        raise ValueError("irreducibility needs degree >= 1")
    if isinstance(f.base, PrimeField):
        return _rabin(f)
    if f.degree == 1:
        return True
    if rational_roots(f):
        return False
    if f.degree <= 3:
        return True
    c = _integer_coefficients(f)
    for q in _SMALL_PRIMES:
        if c[-1] % q == 0:
            continue
        if _rabin(Polynomial(tuple(c), PrimeField(q))):
            return True
    raise NotDecidable(f"cannot decide irreducibility of {f} over Q")


def find_irreducible(p: int, n: int) -> Polynomial:
    """Smallest monic irreducible polynomial of degree ``n`` over GF(p).

    Candidates are ordered by the integer ``sum(c_i * p**i)`` of their lower
    coefficients, i.e. the x^(n-1) coefficient is compared first and the
    constant term last.
    """
    if n < 1:
        raise ValueError("degree must be >= 1")
    F = PrimeField(p)
    for code in range(p ** n):
        low = []
        for _ in range(n):
            code, r = divmod(code, p)
            low.append(r)
        f = Polynomial(tuple(low) + (1,), F)
        if poly_is_irreducible(f):
            return f
    raise InvariantViolation(f"no irreducible polynomial of degree {n} over GF({p})")


# ---------------------------------------------------------------------------
# Extensions and their elements
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExtensionContext:
    """The field L = base[x]/(modulus) with the power basis 1, a, ..., a^(n-1)."""

    modulus: Polynomial
    check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        f = self.modulus
        if f.degree < 1:
            raise ValueError("modulus must have degree >= 1")
        if not f.is_monic():
            raise ValueError(f"modulus {f} is not monic")
        if self.check and not poly_is_irreducible(f):
            from .errors import NotIrreducible
            raise NotIrreducible(f"{f} is reducible over {f.base}")

    @classmethod
    def galois(cls, p: int, n: int) -> "ExtensionContext":
        """GF(p^n) built on ``find_irreducible(p, n)``."""
        return cls(find_irreducible(p, n), check=False)

    @classmethod
    def parse(cls, text: str, base) -> "ExtensionContext":
        """Context from a modulus in the coefficient-list text format."""
        return cls(Polynomial.from_text(text, base))

    @property
    def base(self) -> BaseField:
        return self.modulus.base

    @property
    def degree(self) -> int:
        return self.modulus.degree

    @property
    def is_finite(self) -> bool:
        return self.base.is_finite

    @property
    def order(self) -> Optional[int]:
        return self.base.p ** self.degree if self.is_finite else None

    @property
    def characteristic(self) -> int:
        return self.base.characteristic

    @cached_property
    def _tail(self) -> tuple:
        # x^n = -(f_0 + ... + f_{n-1} x^{n-1})
        return tuple(-c for c in self.modulus.coeffs[:-1])

    def element(self, coords: Sequence) -> "FieldElement":
        coords = tuple(coords)
        if len(coords) > self.degree:
            raise ValueError(f"{len(coords)} coordinates for a degree-{self.degree} field")
        coords = coords + (0,) * (self.degree - len(coords))
        return FieldElement(self, tuple(self.base.normalize(c) for c in coords))

    def embed(self, c) -> "FieldElement":
        return self.element((c,))

    @cached_property
    def zero(self) -> "FieldElement":
        return self.embed(0)

    @cached_property
    def one(self) -> "FieldElement":
        return self.embed(1)

    @cached_property
    def generator(self) -> "FieldElement":
        """Residue class of x."""
        if self.degree == 1:
            return self.embed(self._tail[0])
        return self.element((0, 1))

    def from_text(self, text: str) -> "FieldElement":
        return self.from_polynomial(Polynomial.from_text(text, self.base))

    def from_polynomial(self, g: Polynomial) -> "FieldElement":
        if g.base != self.base:
            raise ContextMismatch("polynomial over a different base field")
        return self.element((g % self.modulus).coeffs)

    def elements(self) -> Iterator["FieldElement"]:
        """All elements, in lexicographic order of coordinate vectors."""
        if not self.is_finite:
            raise TypeError("infinite field")
        for c in itertools.product(range(self.base.p), repeat=self.degree):
            yield FieldElement(self, c)

    def random_element(self, rng: random.Random) -> "FieldElement":
        return FieldElement(self, tuple(self.base.random(rng) for _ in range(self.degree)))

    def reduce(self, prod: list) -> tuple:
        n, tail = self.degree, self._tail
        for k in range(len(prod) - 1, n - 1, -1):
            c = prod[k]
            if c:
                for j, t in enumerate(tail):
                    if t:
                        prod[k - n + j] += c * t
        return tuple(self.base.normalize(a) for a in prod[:n])

    def describe(self) -> str:
        return f"{self.base}[x]/({self.modulus.to_text()})"

    def __str__(self):
        if self.is_finite:
            return f"GF({self.base.p}^{self.degree}) = {self.describe()}"
        return self.describe()


Scalar = Union[int, Fraction]


class FieldElement:
    """An element of an ExtensionContext in power-basis coordinates."""

    __slots__ = ("ctx", "coords")

    def __init__(self, ctx: ExtensionContext, coords: tuple):
        self.ctx = ctx
        self.coords = coords

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise ContextMismatch(f"{self.ctx.describe()} vs {other.ctx.describe()}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.embed(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.ctx.base
        return FieldElement(self.ctx, tuple(F.normalize(a + b) for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        F = self.ctx.base
        return FieldElement(self.ctx, tuple(F.normalize(-a) for a in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.ctx.base
        return FieldElement(self.ctx, tuple(F.normalize(a - b) for a, b in zip(self.coords, other.coords)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coords, other.coords
        prod = [0] * (2 * len(a) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return FieldElement(self.ctx, self.ctx.reduce(prod))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in " + self.ctx.describe())
        g, s, _ = poly_xgcd(self.polynomial(), self.ctx.modulus)
        if g.degree != 0:
            raise InvariantViolation("modulus is not irreducible")
        return self.ctx.from_polynomial(s)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, b = self.ctx.one, self
        while e:
            if e & 1:
                result = result * b
            b = b * b
            e >>= 1
        return result

    def frobenius(self, k: int = 1) -> "FieldElement":
        return frobenius(self, k)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.embed(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.coords == other.coords and (self.ctx is other.ctx or self.ctx == other.ctx)

    def __hash__(self):
        return hash(self.coords)

    def polynomial(self) -> Polynomial:
        return Polynomial(self.coords, self.ctx.base)

    def to_text(self) -> str:
        return self.polynomial().to_text()

    def __repr__(self):
        return f"FieldElement({self.polynomial()})"


# ---------------------------------------------------------------------------
# Frobenius and subfields
# ---------------------------------------------------------------------------

def _require_finite(ctx: ExtensionContext):
    if not ctx.is_finite:
        raise RationalBase("only defined for finite fields")


def frobenius(x: FieldElement, k: int = 1) -> FieldElement:
    """``x ** (p ** k)``, computed as k successive p-th powers."""
    ctx = x.ctx
    _require_finite(ctx)
    p = ctx.base.p
    for _ in range(k % ctx.degree):
        x = x ** p
    return x


def frobenius_matrix(ctx: ExtensionContext, k: int = 1) -> tuple:
    """Matrix M over GF(p) with ``coords(frobenius(y, k)) = M @ coords(y)``."""
    _require_finite(ctx)
    n = ctx.degree
    cols = [frobenius(ctx.element((0,) * j + (1,)), k).coords for j in range(n)]
    return linalg.transpose(cols)


def subfield_degrees(ctx: ExtensionContext) -> list[int]:
    """Degrees m (over the prime field) of all subfields; one subfield per divisor."""
    _require_finite(ctx)
    return divisors(ctx.degree)


class SubfieldDescriptor:
    """The subfield of p^m elements inside a finite extension, as a GF(p)-basis.

    Doubles as a scalar field (``zero``, ``add``, ``inv``, ...) whose scalars are
    FieldElements of the ambient field, so it can serve as the ground field of
    linear algebra.
    """

    is_finite = True

    def __init__(self, ctx: ExtensionContext, sub_degree: int, basis: tuple):
        self.ctx = ctx
        self.sub_degree = sub_degree
        self.basis = tuple(basis)
        F = ctx.base
        self._echelon, self._pivots = linalg.rref([b.coords for b in self.basis], F)
        if len(self._echelon) != sub_degree:
            raise InvariantViolation("subfield basis has the wrong dimension")

    @property
    def order(self) -> int:
        return self.ctx.base.p ** self.sub_degree

    @property
    def characteristic(self) -> int:
        return self.ctx.base.p

    @property
    def zero(self) -> FieldElement:
        return self.ctx.zero

    @property
    def one(self) -> FieldElement:
        return self.ctx.one

    def contains(self, x: FieldElement) -> bool:
        return linalg.in_span(x.coords, self._echelon, self._pivots, self.ctx.base)

    def elements(self) -> Iterator[FieldElement]:
        F, ctx = self.ctx.base, self.ctx
        vecs = [b.coords for b in self.basis]
        for coeffs in itertools.product(range(F.p), repeat=self.sub_degree):
            yield FieldElement(ctx, linalg.combine(coeffs, vecs, F)) if vecs else ctx.zero

    def random(self, rng: random.Random) -> FieldElement:
        F = self.ctx.base
        coeffs = [rng.randrange(F.p) for _ in self.basis]
        return FieldElement(self.ctx, linalg.combine(coeffs, [b.coords for b in self.basis], F))

    def normalize(self, a) -> FieldElement:
        return a if isinstance(a, FieldElement) else self.ctx.embed(a)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def inv(a):
        return a.inverse()

    @staticmethod
    def is_zero(a) -> bool:
        return a.is_zero()

    @staticmethod
    def key(a):
        return a.coords

    def parse(self, text: str) -> FieldElement:
        x = self.ctx.from_text(text)
        if not self.contains(x):
            raise ValueError(f"{text!r} is not in the subfield of order {self.order}")
        return x

    @staticmethod
    def format(a) -> str:
        return a.to_text()

    def __str__(self):
        return f"GF({self.ctx.base.p}^{self.sub_degree})"

    def __repr__(self):
        return f"SubfieldDescriptor({self.ctx.describe()}, m={self.sub_degree})"

    def __eq__(self, other):
        return (isinstance(other, SubfieldDescriptor) and self.ctx == other.ctx
                and self.sub_degree == other.sub_degree)

    def __hash__(self):
        return hash((self.ctx, self.sub_degree))


def subfield_basis(ctx: ExtensionContext, m: int) -> SubfieldDescriptor:
    """GF(p)-basis of the fixed space of ``y -> y ** (p ** m)``.

    The basis is the reduced echelon basis of the kernel of Frobenius^m - 1,
    hence canonical.  Its span is the unique subfield with p^m elements.
    """
    _require_finite(ctx)
    n = ctx.degree
    if m < 1 or n % m:
        raise NotADivisor(f"{m} does not divide {n}")
    F = ctx.base
    M = frobenius_matrix(ctx, m)
    shifted = tuple(tuple(F.sub(M[i][j], 1 if i == j else 0) for j in range(n)) for i in range(n))
    ker = linalg.kernel(shifted, n, F)
    echelon, _ = linalg.rref(ker, F)
    if len(echelon) != m:
        raise InvariantViolation(f"fixed space of Frobenius^{m} has dimension {len(echelon)}")
    return SubfieldDescriptor(ctx, m, tuple(FieldElement(ctx, row) for row in echelon))
