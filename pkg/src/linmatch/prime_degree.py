"""Prime-valued degree combinations and root-existence predicates.

Given degrees d_0..d_n with gcd 1, some nonnegative combination sum k_i d_i is
prime; ``prime_combination`` finds the smallest such prime and the
lexicographically smallest coefficient vector reaching it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Sequence, Union

from .errors import BoundExceeded, GcdNotOne, InvariantViolation, NotDecidable
from .finite_field import (ExtensionContext, FieldElement, Polynomial, PrimeField,
                           RationalField, find_irreducible, rational_roots)
from .numtheory import is_prime

MAX_TOTAL = 10**6
ROOT_SEARCH_BOUND = 2**20


@dataclass(frozen=True)
class DegreeSystem:
    degrees: tuple

    def __post_init__(self):
        degrees = tuple(int(d) for d in self.degrees)
        if not degrees:
            raise ValueError("need at least one degree")
        if any(d < 1 for d in degrees):
            raise ValueError(f"degrees must be >= 1, got {degrees}")
        object.__setattr__(self, "degrees", degrees)

    @property
    def gcd(self) -> int:
        return reduce(gcd, self.degrees)


@dataclass(frozen=True)
class PrimeComboSolution:
    degrees: tuple
    coefficients: tuple
    total: int

    def __post_init__(self):
        if any(k < 0 for k in self.coefficients):
            raise InvariantViolation("negative coefficient")
        if sum(k * d for k, d in zip(self.coefficients, self.degrees)) != self.total:
            raise InvariantViolation("total does not match the coefficients")
        if not is_prime(self.total):
            raise InvariantViolation(f"total {self.total} is not prime")


def _suffix_tables(degrees: Sequence[int], limit: int) -> list[bytearray]:
    # tables[j][t] == 1 iff t is a nonnegative combination of degrees[j:]
    tables = [bytearray(limit + 1) for _ in range(len(degrees) + 1)]
    tables[-1][0] = 1
    for j in range(len(degrees) - 1, -1, -1):
        d, prev, cur = degrees[j], tables[j + 1], tables[j]
        for t in range(limit + 1):
            cur[t] = prev[t] or (t >= d and cur[t - d])
    return tables


def _lex_smallest(degrees: Sequence[int], total: int, tables) -> tuple:
    coeffs, rest = [], total
    for j, d in enumerate(degrees):
        k = 0
        while not tables[j + 1][rest - k * d]:
            k += 1
        coeffs.append(k)
        rest -= k * d
    return tuple(coeffs)


def prime_combination(sys: Union[DegreeSystem, Sequence[int]], max_total: int = MAX_TOTAL,
                      min_coefficient: int = 0) -> PrimeComboSolution:
    """Smallest prime representable as a combination of the degrees.

    Coefficients range over integers >= ``min_coefficient`` (nonnegative by
    default).  Totals are scanned upward with a coin-problem table; among the
    representations of the first prime found, the lexicographically smallest
    coefficient vector is returned.
    """
    if not isinstance(sys, DegreeSystem):
        sys = DegreeSystem(tuple(sys))
    if sys.gcd != 1:
        raise GcdNotOne(f"gcd of {sys.degrees} is {sys.gcd}")
    if min_coefficient < 0:
        raise ValueError("min_coefficient must be >= 0")
    degrees = sys.degrees
    offset = min_coefficient * sum(degrees)
    reach = bytearray(max_total + 1)
    reach[0] = 1
    for t in range(max_total + 1):
        if t:
            reach[t] = any(t >= d and reach[t - d] for d in degrees)
        if t >= offset and reach[t - offset] and is_prime(t):
            tables = _suffix_tables(degrees, t - offset)
            ks = _lex_smallest(degrees, t - offset, tables)
            return PrimeComboSolution(degrees, tuple(k + min_coefficient for k in ks), t)
    raise BoundExceeded(f"no representable prime up to {max_total}")


def brute_force_prime_combination(degrees: Sequence[int], max_total: int) -> tuple:
    """Reference enumerator over all coefficient vectors with total <= max_total.

    Returns ``(total, coefficients)`` for the smallest prime total and the
    lexicographically smallest vector reaching it, or None.
    """
    best = None
    ranges = [range(max_total // d + 1) for d in degrees]
    for ks in itertools.product(*ranges):
        t = sum(k * d for k, d in zip(ks, degrees))
        if t > max_total or not is_prime(t):
            continue
        if best is None or (t, ks) < best:
            best = (t, ks)
    return best


def has_root(f: Polynomial, field=None, bound: int = ROOT_SEARCH_BOUND) -> bool:
    """Whether f has a root in ``field``.

    ``field`` is an ExtensionContext (roots in L), or None / a base field for
    roots in the coefficient field itself.  Finite fields are searched
    exhaustively up to ``bound`` elements; over Q the rational root test is
    used.
    """
    if f.degree < 1:
        raise ValueError("has_root needs degree >= 1")
    if field is None or isinstance(field, (PrimeField, RationalField)):
        field = f.base if field is None else field
        if field != f.base:
            raise ValueError(f"polynomial over {f.base} checked in {field}")
        if isinstance(field, RationalField):
            return bool(rational_roots(f))
        if field.p > bound:
            raise BoundExceeded(f"field of size {field.p} exceeds {bound}")
        return any(f(a) == 0 for a in range(field.p))
    ctx: ExtensionContext = field
    if ctx.base != f.base:
        raise ValueError(f"polynomial over {f.base} checked in {ctx.describe()}")
    if not ctx.is_finite:
        if ctx.degree == 1:
            return bool(rational_roots(f))
        raise NotDecidable("root existence in a proper extension of Q is not implemented")
    if ctx.order > bound:
        raise BoundExceeded(f"field of size {ctx.order} exceeds {bound}")
    return any(f(x).is_zero() for x in ctx.elements())


def prime_degree_irreducible_witness(p: int) -> Polynomial:
    """An irreducible polynomial of prime degree (always 2) over GF(p)."""
    return find_irreducible(p, 2)
