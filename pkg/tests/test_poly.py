import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st

from soclelab.field import GF, QQ
from soclelab.poly import (Poly, PolyError, charpoly, omega, poly_factor, poly_gcd,
                           squarefree_decomposition)

import oracles

PRIMES = [2, 3, 5, 7, 17]


@st.composite
def polys(draw, max_degree=14, nonzero=True):
    p = draw(st.sampled_from(PRIMES))
    coeffs = draw(st.lists(st.integers(0, p - 1), min_size=1, max_size=max_degree + 1))
    f = Poly(GF(p), tuple(coeffs))
    if nonzero and not f:
        f = Poly(GF(p), (1,))
    return f


def test_parse_and_str():
    f = GF(5)
    g = Poly.parse(f, "x^2+3x+1")
    assert g.coeffs == (1, 3, 1)
    assert str(g) == "x^2+3x+1"
    assert Poly.parse(f, str(Poly.parse(f, "4x^3-x"))) == Poly.parse(f, "4x^3+4x")
    assert Poly.parse(f, "0").degree == -1
    with pytest.raises(PolyError):
        Poly.parse(f, "x^^2")


@given(polys(), polys())
def test_divmod_identity(a, b):
    if a.field != b.field:
        b = Poly(a.field, b.coeffs)
        if not b:
            return
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(polys())
def test_factorization_matches_sympy(f):
    facs = poly_factor(f)
    prod = Poly.const(f.field, f.lead)
    for g, e in facs:
        assert g.lead == 1
        prod = prod * g ** e
    assert prod == f
    assert omega(f) == oracles.omega_sympy(f.coeffs, f.field.p)


@given(polys())
def test_factors_are_irreducible(f):
    x = sympy.Symbol("x")
    for g, _ in poly_factor(f):
        expr = sum(int(c) * x**i for i, c in enumerate(g.coeffs))
        assert sympy.Poly(expr, x, modulus=f.field.p).is_irreducible


@given(polys())
def test_squarefree_parts(f):
    prod = Poly.const(f.field, f.lead)
    for g, e in squarefree_decomposition(f):
        assert poly_gcd(g, g.derivative()).degree == 0
        prod = prod * g ** e
    assert prod == f


def test_factor_examples():
    f2, f5 = GF(2), GF(5)
    assert poly_factor(Poly.parse(f2, "x^2+1")) == [(Poly.parse(f2, "x+1"), 2)]
    assert poly_factor(Poly.parse(f5, "x^2+1")) == [(Poly.parse(f5, "x+2"), 1), (Poly.parse(f5, "x+3"), 1)]
    assert omega(Poly.parse(f5, "3")) == 0
    with pytest.raises(PolyError):
        poly_factor(Poly(f5, ()))
    with pytest.raises(PolyError):
        poly_factor(Poly(QQ, (1, 1)))


@given(st.sampled_from([QQ, GF(17), GF(3)]), st.integers(1, 6), st.integers(0, 1000))
def test_charpoly_matches_sympy(f, n, seed):
    rng = np.random.default_rng(seed)
    m = f.random(rng, (n, n))
    cp = charpoly(f, m)
    x = sympy.Symbol("x")
    ref = sympy.Matrix(m.tolist()).charpoly(x)
    ref_coeffs = [f(int(sympy.numer(c)) * f.inv(int(sympy.denom(c))) if f.p else c)
                  for c in reversed(ref.all_coeffs())]
    assert list(cp.coeffs) == [f(c) for c in ref_coeffs]
    # Cayley-Hamilton
    assert f.is_zero(cp.eval_matrix(m))
