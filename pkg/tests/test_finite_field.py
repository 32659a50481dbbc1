import itertools
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from linmatch.errors import (ContextMismatch, NotADivisor, NotDecidable, NotIrreducible,
                             RationalBase, ZeroPolynomial)
from linmatch.finite_field import (QQ, ExtensionContext, Polynomial, PrimeField,
                                   find_irreducible, frobenius, frobenius_matrix,
                                   poly_is_irreducible, rational_roots, subfield_basis,
                                   subfield_degrees)


def poly(text, base):
    return Polynomial.from_text(text, base)


def monic_polys(p, degree):
    F = PrimeField(p)
    for low in itertools.product(range(p), repeat=degree):
        yield Polynomial(low + (1,), F)


def reducible_by_trial_division(f):
    """Oracle: f is reducible iff a monic factor of degree 1..deg/2 divides it."""
    p = f.base.p
    for d in range(1, f.degree // 2 + 1):
        for g in monic_polys(p, d):
            if (f % g).is_zero():
                return True
    return False


def mobius(n):
    out, k = 1, 2
    while k * k <= n:
        if n % k == 0:
            n //= k
            if n % k == 0:
                return 0
            out = -out
        k += 1
    return -out if n > 1 else out


# --- polynomials ------------------------------------------------------------

def test_polynomial_canonical_form():
    assert poly("1,1,0,0", 2).coeffs == (1, 1)
    assert poly("0", 2).coeffs == ()
    assert poly("2,4", 3).coeffs == (2, 1)
    assert poly("1/2,-3/6", QQ).coeffs == (Fraction(1, 2), Fraction(-1, 2))


@pytest.mark.parametrize("text,base", [("1,1,1", 2), ("-2,0,0,1", "Q"), ("1/3,0,5", "Q"), ("0", 5)])
def test_polynomial_text_round_trip(text, base):
    assert poly(text, base).to_text() == text


def test_polynomial_division():
    F = PrimeField(5)
    a = Polynomial((1, 2, 3, 4, 1), F)
    b = Polynomial((2, 0, 1), F)
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


def test_rational_roots():
    assert rational_roots(poly("-2,0,0,1", QQ)) == []
    assert rational_roots(poly("-4,0,1", QQ)) == [-2, 2]
    assert rational_roots(poly("-1,2", QQ)) == [Fraction(1, 2)]
    assert rational_roots(poly("0,0,1,1", QQ)) == [-1, 0]


# --- irreducibility -----------------------------------------------------------

def test_irreducible_examples():
    assert poly_is_irreducible(poly("1,1,1", 2))
    assert not poly_is_irreducible(poly("1,0,1", 2))
    assert poly_is_irreducible(poly("-2,0,0,1", QQ))


def test_irreducible_over_q_beyond_cubics():
    assert poly_is_irreducible(poly("1,1,0,0,1", QQ))  # irreducible mod 2
    assert not poly_is_irreducible(poly("-1,0,0,0,1", QQ))  # root 1
    with pytest.raises(NotDecidable):
        poly_is_irreducible(poly("1,0,0,0,1", QQ))  # x^4+1 splits mod every prime
    with pytest.raises(ZeroPolynomial):
        poly_is_irreducible(poly("0", QQ))


@pytest.mark.parametrize("p,max_degree", [(2, 6), (3, 4), (5, 3)])
def test_rabin_matches_trial_division(p, max_degree):
    for n in range(1, max_degree + 1):
        for f in monic_polys(p, n):
            assert poly_is_irreducible(f) == (not reducible_by_trial_division(f)), f


@pytest.mark.parametrize("p,n", [(2, 1), (2, 4), (2, 7), (3, 3), (5, 2), (7, 2)])
def test_irreducible_count_matches_gauss_formula(p, n):
    expected = sum(mobius(d) * p ** (n // d) for d in range(1, n + 1) if n % d == 0) // n
    assert sum(poly_is_irreducible(f) for f in monic_polys(p, n)) == expected


@pytest.mark.parametrize("p,n,expected", [(2, 2, "1,1,1"), (2, 1, "0,1"), (3, 2, "1,0,1"),
                                          (5, 2, "2,0,1")])
def test_find_irreducible_examples(p, n, expected):
    assert find_irreducible(p, n).to_text() == expected


@pytest.mark.parametrize("p,n", [(2, 3), (2, 8), (3, 4), (7, 3)])
def test_find_irreducible_is_smallest_and_stable(p, n):
    f = find_irreducible(p, n)
    assert poly_is_irreducible(f) and f.is_monic() and f.degree == n
    assert find_irreducible(p, n) == f
    code = lambda g: sum(c * p ** i for i, c in enumerate(g.coeffs[:-1]))
    assert all(not poly_is_irreducible(g) for g in monic_polys(p, n) if code(g) < code(f))


# --- element arithmetic -------------------------------------------------------

def test_gf4_product():
    ctx = ExtensionContext.parse("1,1,1", 2)
    a = ctx.generator
    assert a * (a + 1) == ctx.one


def test_cube_root_of_two():
    ctx = ExtensionContext.parse("-2,0,0,1", QQ)
    a = ctx.generator
    assert a * a ** 2 == ctx.embed(2)
    assert a.inverse() == ctx.element((0, 0, Fraction(1, 2)))


def test_context_rejects_bad_moduli():
    with pytest.raises(NotIrreducible):
        ExtensionContext.parse("1,0,1", 2)
    with pytest.raises(ValueError):
        ExtensionContext.parse("1,0,2", 3)  # not monic


def test_errors_on_mixed_contexts_and_zero():
    k4 = ExtensionContext.galois(2, 2)
    k8 = ExtensionContext.galois(2, 3)
    with pytest.raises(ContextMismatch):
        k4.generator + k8.generator
    with pytest.raises(ZeroDivisionError):
        k4.zero.inverse()


CONTEXTS = [
    ExtensionContext.galois(2, 2),
    ExtensionContext.galois(3, 2),
    ExtensionContext.galois(2, 5),
    ExtensionContext.galois(5, 3),
    ExtensionContext.parse("-2,0,0,1", QQ),
]


@pytest.mark.parametrize("ctx", CONTEXTS, ids=str)
def test_field_axioms_sampled(ctx):
    rng = random.Random(1234)
    for _ in range(1000):
        x, y, z = (ctx.random_element(rng) for _ in range(3))
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x + y == y + x and x * y == y * x
        assert x * (y + z) == x * y + x * z
        assert x + ctx.zero == x and x * ctx.one == x
        assert x - x == ctx.zero
        if x:
            assert x * x.inverse() == ctx.one


@pytest.mark.parametrize("p,n", [(2, 3), (3, 2), (2, 4)])
def test_inverse_exhaustive(p, n):
    ctx = ExtensionContext.galois(p, n)
    for x in ctx.elements():
        if x:
            assert x * x.inverse() == ctx.one
            assert x ** (ctx.order - 1) == ctx.one


@given(st.lists(st.integers(0, 1), min_size=4, max_size=4),
       st.lists(st.integers(0, 1), min_size=4, max_size=4))
def test_multiplication_matches_polynomial_reduction(a, b):
    ctx = ExtensionContext.galois(2, 4)
    x, y = ctx.element(a), ctx.element(b)
    assert (x * y).polynomial() == (x.polynomial() * y.polynomial()) % ctx.modulus


# --- Frobenius and subfields ----------------------------------------------

def test_frobenius_examples():
    ctx = ExtensionContext.galois(2, 2)
    a = ctx.generator
    assert frobenius(a, 1) == a + 1
    L = ExtensionContext.galois(3, 4)
    rng = random.Random(7)
    for c in range(3):
        assert frobenius(L.embed(c), 1) == L.embed(c)
    for _ in range(20):
        x = L.random_element(rng)
        assert frobenius(x, 4) == x


@pytest.mark.parametrize("p,n", [(2, 4), (3, 3), (2, 6)])
def test_frobenius_is_a_ring_homomorphism(p, n):
    ctx = ExtensionContext.galois(p, n)
    rng = random.Random(p * 100 + n)
    for _ in range(200):
        x, y = ctx.random_element(rng), ctx.random_element(rng)
        for k in (1, 2):
            assert frobenius(x + y, k) == frobenius(x, k) + frobenius(y, k)
            assert frobenius(x * y, k) == frobenius(x, k) * frobenius(y, k)


@pytest.mark.parametrize("p,n", [(2, 4), (2, 6), (3, 4), (2, 8), (5, 2)])
def test_frobenius_fixed_sets_by_element(p, n):
    ctx = ExtensionContext.galois(p, n)
    elements = list(ctx.elements())
    for m in subfield_degrees(ctx):
        fixed = [x for x in elements if frobenius(x, m) == x]
        assert len(fixed) == p ** m


def test_frobenius_fixed_sets_gf_2_16():
    ctx = ExtensionContext.galois(2, 16)
    rng = random.Random(3)
    for m in range(1, 17):
        M = np.array(frobenius_matrix(ctx, m), dtype=np.int64)
        for _ in range(5):
            x = ctx.random_element(rng)
            assert tuple(M @ np.array(x.coords) % 2) == frobenius(x, m).coords
        vecs = np.array(list(itertools.product((0, 1), repeat=16)), dtype=np.int64)
        images = vecs @ M.T % 2
        fixed = int(np.all(images == vecs, axis=1).sum())
        assert fixed == 2 ** int(np.gcd(m, 16))


@pytest.mark.parametrize("p,n,expected", [(2, 6, [1, 2, 3, 6]), (2, 1, [1]), (3, 4, [1, 2, 4])])
def test_subfield_degrees(p, n, expected):
    assert subfield_degrees(ExtensionContext.galois(p, n)) == expected


def test_subfield_degrees_needs_finite_field():
    with pytest.raises(RationalBase):
        subfield_degrees(ExtensionContext.parse("-2,0,0,1", QQ))


def _span(S):
    return set(S.elements())


def test_subfield_basis_examples():
    k4 = ExtensionContext.galois(2, 2)
    S = subfield_basis(k4, 1)
    assert S.basis == (k4.one,)
    assert _span(S) == {k4.zero, k4.one}
    k16 = ExtensionContext.galois(2, 4)
    T = _span(subfield_basis(k16, 2))
    assert len(T) == 4 and all(x * y in T for x in T for y in T)
    k8 = ExtensionContext.galois(2, 3)
    assert _span(subfield_basis(k8, 3)) == set(k8.elements())
    with pytest.raises(NotADivisor):
        subfield_basis(k16, 3)


@pytest.mark.parametrize("p,n", [(2, 6), (2, 8), (3, 4), (5, 2), (2, 12)])
def test_subfields_closed_and_sized(p, n):
    ctx = ExtensionContext.galois(p, n)
    for m in subfield_degrees(ctx):
        S = subfield_basis(ctx, m)
        assert S.order == p ** m
        if p ** m > 256:
            continue
        elems = _span(S)
        assert len(elems) == p ** m
        assert all(x * y in elems for x in elems for y in elems)
        assert all(x.inverse() in elems for x in elems if x)
        assert all(frobenius(x, m) == x for x in elems)
