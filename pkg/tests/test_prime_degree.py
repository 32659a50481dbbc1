import random
from math import gcd
from functools import reduce

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linmatch.errors import BoundExceeded, GcdNotOne, InvariantViolation, NotDecidable
from linmatch.finite_field import QQ, ExtensionContext, Polynomial, PrimeField, poly_is_irreducible
from linmatch.numtheory import is_prime
from linmatch.prime_degree import (DegreeSystem, PrimeComboSolution, brute_force_prime_combination,
                                   has_root, prime_combination, prime_degree_irreducible_witness)


def test_two_and_three():
    # k = (1, 0) already gives the prime 2.
    sol = prime_combination((2, 3))
    assert (sol.coefficients, sol.total) == ((1, 0), 2)
    assert brute_force_prime_combination((2, 3), 2) == (2, (1, 0))


def test_two_and_three_with_every_degree_used():
    sol = prime_combination((2, 3), min_coefficient=1)
    assert (sol.coefficients, sol.total) == ((1, 1), 5)


def test_degree_one_present():
    sol = prime_combination(DegreeSystem((1, 4)))
    assert (sol.coefficients, sol.total) == ((2, 0), 2)


def test_gcd_must_be_one():
    with pytest.raises(GcdNotOne):
        prime_combination((4, 6))


def test_bound_and_validation():
    with pytest.raises(BoundExceeded):
        prime_combination((9, 10), max_total=18)
    with pytest.raises(ValueError):
        DegreeSystem(())
    with pytest.raises(ValueError):
        DegreeSystem((0, 3))
    with pytest.raises(InvariantViolation):
        PrimeComboSolution((2, 3), (1, 1), 6)
    with pytest.raises(InvariantViolation):
        PrimeComboSolution((2, 3), (3, 0), 6)


def _gcd_one_system(rng):
    while True:
        degrees = tuple(rng.randint(1, 30) for _ in range(rng.randint(1, 5)))
        if reduce(gcd, degrees) == 1:
            return degrees


def test_matches_brute_force_on_random_systems():
    rng = random.Random(2024)
    for _ in range(200):
        degrees = _gcd_one_system(rng)
        sol = prime_combination(degrees)
        assert is_prime(sol.total)
        assert sol.total == sum(k * d for k, d in zip(sol.coefficients, degrees))
        assert brute_force_prime_combination(degrees, sol.total) == (sol.total, sol.coefficients)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 12), min_size=1, max_size=3), st.integers(0, 2))
def test_min_coefficient_gives_smallest_shifted_prime(degrees, floor):
    degrees = tuple(degrees)
    if reduce(gcd, degrees) != 1:
        return
    sol = prime_combination(degrees, min_coefficient=floor)
    assert min(sol.coefficients) >= floor
    offset = floor * sum(degrees)
    # After subtracting the floor from every coefficient, no smaller prime is reachable.
    for t in range(offset, sol.total):
        if is_prime(t):
            assert next(_vectors(degrees, t - offset), None) is None


def _vectors(degrees, total):
    if not degrees:
        if total == 0:
            yield ()
        return
    for k in range(total // degrees[0] + 1):
        for rest in _vectors(degrees[1:], total - k * degrees[0]):
            yield (k,) + rest


# --- roots ------------------------------------------------------------------

def test_has_root_examples():
    assert not has_root(Polynomial.from_text("1,1,1", 2))
    assert has_root(Polynomial.from_text("1,0,1", 2))
    assert not has_root(Polynomial.from_text("-2,0,0,1", QQ))
    assert has_root(Polynomial.from_text("-8,0,0,1", QQ))


def test_has_root_in_extensions():
    f = Polynomial.from_text("1,1,1", 2)
    assert has_root(f, ExtensionContext.galois(2, 2))
    assert not has_root(f, ExtensionContext.galois(2, 3))
    g = Polynomial.from_text("-2,0,0,1", QQ)
    with pytest.raises(NotDecidable):
        has_root(g, ExtensionContext.parse("-2,0,0,1", QQ))
    with pytest.raises(ValueError):
        has_root(f, PrimeField(3))
    with pytest.raises(BoundExceeded):
        has_root(f, ExtensionContext.galois(2, 21))


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_irreducible_polynomials_have_no_roots(p):
    rng = random.Random(p)
    F = PrimeField(p)
    for _ in range(300):
        degree = rng.randint(1, 4)
        f = Polynomial(tuple(rng.randrange(p) for _ in range(degree)) + (rng.randrange(1, p),), F)
        roots = [a for a in range(p) if f(a) == 0]
        assert has_root(f) == bool(roots)
        if f.degree >= 2 and poly_is_irreducible(f):
            assert not has_root(f)
        if f.degree in (2, 3):
            assert poly_is_irreducible(f) == (not roots)


@pytest.mark.parametrize("p,expected", [(2, "1,1,1"), (3, "1,0,1"), (5, "2,0,1"), (11, None)])
def test_prime_degree_witness(p, expected):
    f = prime_degree_irreducible_witness(p)
    if expected is not None:
        assert f.to_text() == expected
    assert is_prime(f.degree)
    assert poly_is_irreducible(f)
    assert not has_root(f)
