import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from soclelab.barnes import (BarnesElement, ZeroElement, b_essential_socle_witness, b_fredholm_witness,
                             b_in_left_principal, b_is_fredholm, b_is_socle, b_random, b_rho_l, b_rho_r,
                             b_star, b_trim, b_xi_l, b_xi_r, b_zeta_l, b_zeta_r, barnes_report)
from soclelab.field import GF, QQ
from soclelab.fredholm import NotFredholm

import oracles

FIELDS = [QQ, GF(17), GF(19)]
E = BarnesElement.unit


def elements(lam_zero=None):
    return st.builds(lambda f, s: b_random(f, np.random.default_rng(s), lam_zero=lam_zero),
                     st.sampled_from(FIELDS), st.integers(0, 10**6))


def test_arithmetic_examples():
    f = QQ
    one = BarnesElement.scalar(f, 1)
    a = BarnesElement(f, 2, f.array([[1, 2], [0, 0]]))
    assert one * a == a == a * one
    assert E(f, 0, 0) * E(f, 0, 1) == E(f, 0, 1)
    assert b_star(E(f, 0, 1)) == E(f, 1, 0)


def test_trim_canonical():
    f = GF(17)
    padded = BarnesElement(f, 3, f.array([[1, 0, 0], [0, 0, 0], [0, 0, 0]]))
    assert padded.size == 1
    assert b_trim(padded) == padded
    assert BarnesElement(f, 0, f.array([[0, 0], [0, 0]])).is_zero()


@given(elements(), elements(), elements())
def test_ring_axioms(a, b, c):
    if not (a.field == b.field == c.field):
        return
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert b_star(a * b) == b_star(b) * b_star(a)


def test_predicates():
    f = QQ
    assert b_is_fredholm(BarnesElement.scalar(f, 1))
    assert b_is_socle(E(f, 0, 0)) and not b_is_fredholm(E(f, 0, 0))
    assert b_is_fredholm(BarnesElement.scalar(f, 1) - E(f, 0, 0))


def test_length_examples():
    f = QQ
    one = BarnesElement.scalar(f, 1)
    assert b_xi_l(one) == 0
    assert b_xi_l(one - E(f, 0, 0)) == 1
    assert b_xi_l(E(f, 0, 0)) == math.inf and b_zeta_l(E(f, 0, 0)) is None


@given(elements(lam_zero=False))
def test_lengths_are_nullity(a):
    block = a.block
    f = a.field
    shifted = f.reduce(block + f.scale(a.lam, f.eye(a.size))) if a.size else f.zeros((0, 0))
    k = oracles.nullity(f, shifted) if a.size else 0
    assert b_xi_l(a) == b_xi_r(a) == b_rho_l(a) == b_rho_r(a) == k
    assert b_zeta_l(a) == b_zeta_r(a) == 0


def test_witness_examples():
    f = QQ
    one = BarnesElement.scalar(f, 1)
    assert b_fredholm_witness(one).is_zero()
    assert b_fredholm_witness(one - E(f, 0, 0)) == E(f, 0, 0)
    n = f.zeros((3, 3))
    n[0, 1] = n[1, 2] = 1
    assert b_fredholm_witness(BarnesElement(f, 1, n)).is_zero()
    with pytest.raises(NotFredholm):
        b_fredholm_witness(E(f, 0, 0))


@given(elements(lam_zero=False), st.integers(0, 10**6))
def test_witness_generates_left_principal(a, seed):
    p = b_fredholm_witness(a)
    assert p * p == p and b_is_socle(p)
    # x in A a  <=>  x p = 0, probed with random socle elements
    rng = np.random.default_rng(seed)
    for _ in range(5):
        x = b_random(a.field, rng, lam_zero=True)
        assert b_in_left_principal(a, x) == (x * p).is_zero()
        # x (1 - p) always lies in A a
        one = BarnesElement.scalar(a.field, 1)
        assert b_in_left_principal(a, x * (one - p))


def test_essential_socle_examples():
    f = QQ
    assert not (BarnesElement.scalar(f, 1) * b_essential_socle_witness(BarnesElement.scalar(f, 1))).is_zero()
    assert b_essential_socle_witness(E(f, 0, 1)) == E(f, 1, 1)
    with pytest.raises(ZeroElement):
        b_essential_socle_witness(BarnesElement.scalar(f, 0))


@given(elements())
def test_essential_socle_property(a):
    if a.is_zero():
        return
    e = b_essential_socle_witness(a)
    assert b_is_socle(e) and not (a * e).is_zero()


@given(elements(lam_zero=False), elements(lam_zero=False))
def test_product_inequality(a, b):
    if a.field != b.field:
        return
    assert b_xi_l(a * b) <= b_xi_l(a) + b_xi_l(b)


def test_report():
    f = GF(17)
    rep = barnes_report(BarnesElement.scalar(f, 1) - E(f, 0, 0)).to_dict()
    assert rep["quantities"]["xi_l"] == 1 and rep["flags"]["is_fredholm"]
    assert rep["witnesses"]["p"] == {"lambda": "0", "block": [["1"]]}
    rep = barnes_report(E(f, 0, 0)).to_dict()
    assert rep["quantities"]["xi_l"] == "inf" and rep["quantities"]["zeta_l"] is None
