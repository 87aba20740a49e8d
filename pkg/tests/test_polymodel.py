import math

import pytest
from hypothesis import given, strategies as st

from soclelab.field import GF
from soclelab.poly import Poly
from soclelab.polymodel import (PolyElement, p_is_fredholm, p_is_weak_fredholm, p_rho, p_verify_root_divisibility,
                                p_xi, p_zeta, poly_report)

import oracles

PRIMES = [2, 3, 5, 7]


def P(p, text):
    return Poly.parse(GF(p), text)


@st.composite
def nonzero_polys(draw, p=None, max_degree=12):
    p = p or draw(st.sampled_from(PRIMES))
    coeffs = draw(st.lists(st.integers(0, p - 1), min_size=1, max_size=max_degree + 1))
    f = Poly(GF(p), tuple(coeffs))
    return f if f else Poly(GF(p), (1,))


def test_spec_examples():
    assert p_xi(P(2, "1")) == 0
    assert p_xi(P(2, "x^2+1")) == 2
    assert p_xi(P(2, "0")) == math.inf
    assert p_is_fredholm(P(5, "3")) and p_zeta(P(5, "3")) == 0
    x = P(5, "x")
    assert p_xi(x) == 1 and not p_is_fredholm(x) and p_zeta(x) == 1 and p_is_weak_fredholm(x)
    assert not p_is_weak_fredholm(P(5, "0"))
    cubic = P(5, "x^3+4x")  # x (x - 1)(x + 1) = x^3 - x
    assert p_zeta(cubic) == 3
    assert p_rho(P(5, "0")) == math.inf and p_rho(cubic) == 0


def test_root_divisibility_examples():
    assert p_verify_root_divisibility(P(5, "x"), 4)
    assert p_zeta(P(5, "x") ** 4) == 4
    assert all(p_verify_root_divisibility(P(3, "1"), n) for n in range(1, 6))
    s = P(3, "x^2+x")
    assert p_zeta(s ** 2) == 4 and p_verify_root_divisibility(s, 2)
    with pytest.raises(ValueError):
        p_verify_root_divisibility(P(3, "0"), 2)


@given(nonzero_polys())
def test_xi_counts_factors(f):
    assert p_xi(f) == oracles.omega_sympy(f.coeffs, f.field.p)
    assert (p_zeta(f) == 0) == p_is_fredholm(f)
    if f.degree >= 1:
        assert p_is_weak_fredholm(f) and not p_is_fredholm(f) and p_zeta(f) >= 1


@given(st.sampled_from(PRIMES).flatmap(lambda p: st.tuples(nonzero_polys(p), nonzero_polys(p))))
def test_zeta_additive(fg):
    f, g = fg
    assert p_zeta(f * g) == p_zeta(f) + p_zeta(g)
    assert p_xi(f * g) == p_xi(f) + p_xi(g)


def test_element_wrapper_and_report():
    e = PolyElement.parse(GF(2), "x^2+1")
    assert str(e * e) == "x^4+1"
    assert p_xi(e) == 2
    rep = poly_report(e.f).to_dict()
    assert rep["witnesses"]["factorization"] == [["x+1", 2]]
    assert rep["flags"]["is_weak_plus"] and not rep["flags"]["is_fredholm"]
