import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from soclelab import algebra as A
from soclelab.algebra import (AssociativityViolation, InvolutionViolation, NotAGroup, NotTwoSidedIdeal,
                              UnitViolation, build_algebra, direct_product, group_algebra, matrix_algebra,
                              quotient_algebra, star, upper_triangular_algebra)
from soclelab.field import GF
from soclelab.linalg import Subspace
from soclelab.suites import build_family

F = GF(17)


def _as_matrix(a, n):
    return np.array(a.coords, dtype=object).reshape(n, n)


@given(st.integers(1, 3), st.integers(0, 10_000))
def test_matrix_algebra_multiplies_like_matrices(n, seed):
    rng = np.random.default_rng(seed)
    alg = matrix_algebra(n, F)
    a, b = alg.random_element(rng), alg.random_element(rng)
    ref = (_as_matrix(a, n) @ _as_matrix(b, n)) % 17
    assert np.array_equal(_as_matrix(a * b, n), ref)
    assert np.array_equal(_as_matrix(star(a), n), _as_matrix(a, n).T)


@pytest.mark.parametrize("key", ["group:S3:GF(17)", "group:Q8:GF(19)", "product:M1xM2:GF(17)",
                                 "triangular:T3:GF(17)", "group:D4:GF(17)"])
def test_families_are_associative_unital(key, rng):
    alg = build_family(key)
    for _ in range(20):
        a, b, c = (alg.random_element(rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert alg.one * a == a == a * alg.one
    if alg.involution is not None:
        a, b = alg.random_element(rng), alg.random_element(rng)
        assert star(a * b) == star(b) * star(a)
        assert star(star(a)) == a


def test_group_algebra_product_is_group_law():
    table = A.symmetric_group(3)
    alg = group_algebra(table, F)
    for g, h in itertools.product(range(6), repeat=2):
        assert alg.basis_element(g) * alg.basis_element(h) == alg.basis_element(table[g][h])


def test_broken_associativity_has_witness():
    m2 = matrix_algebra(2, F)
    broken = [(i, j, k, 2 if (i, j, k) == (0, 0, 0) else c) for i, j, k, c in m2.mult]
    with pytest.raises(AssociativityViolation) as exc:
        build_algebra(F, 4, broken, m2.unit.tolist())
    i, j, k = exc.value.witness
    t = build_algebra(F, 4, broken, m2.unit.tolist(), check=False).table
    # the witness triple really breaks associativity
    lhs = np.tensordot(t[i, j], t[:, k], axes=(0, 0)) % 17
    rhs = np.tensordot(t[j, k], t[i, :], axes=(0, 0)) % 17
    assert not np.array_equal(lhs, rhs)


def test_wrong_unit_rejected():
    m2 = matrix_algebra(2, F)
    with pytest.raises(UnitViolation):
        build_algebra(F, 4, m2.mult, [1, 0, 0, 0])


def test_bad_involution_rejected():
    m2 = matrix_algebra(2, F)
    with pytest.raises(InvolutionViolation):
        build_algebra(F, 4, m2.mult, m2.unit.tolist(), involution=F.eye(4))  # identity is not anti-multiplicative


def test_not_a_group():
    with pytest.raises(NotAGroup):
        group_algebra([[0, 1], [1, 1]], F)


def test_groups_have_stated_orders():
    orders = {k: len(v()) for k, v in A.GROUPS.items()}
    assert orders["S3"] == 6 and orders["Q8"] == 8 and orders["D4"] == 8 and orders["C2xC2xC2"] == 8
    q8 = A.GROUPS["Q8"]()
    # Q8 has a unique element of order 2
    ident = next(g for g in range(8) if all(q8[g][h] == h for h in range(8)))
    assert sum(1 for g in range(8) if g != ident and q8[g][g] == ident) == 1


def test_direct_product_and_quotient():
    a = direct_product(matrix_algebra(1, F), matrix_algebra(2, F))
    assert a.dim == 5
    block = Subspace.span(F, 5, [F.eye(5)[1:]])
    q = quotient_algebra(a, block)
    assert q.dim == 1
    assert np.array_equal(F.matmul(q.projection, a.unit), q.unit)
    with pytest.raises(NotTwoSidedIdeal):
        quotient_algebra(matrix_algebra(2, F), Subspace.span(F, 4, [F.array([[1, 0, 0, 0]])]))
    assert quotient_algebra(a, a.full_space()).dim == 0


def test_opposite_reverses_products(rng):
    alg = build_family("group:S3:GF(17)")
    op = alg.opposite
    assert op.opposite is alg
    a, b = alg.random_element(rng), alg.random_element(rng)
    ab = (op.element(a.coords) * op.element(b.coords)).coords
    assert np.array_equal(ab, (b * a).coords)


def test_upper_triangular_shape():
    t = upper_triangular_algebra(3, F)
    assert t.dim == 6 and t.involution is None
