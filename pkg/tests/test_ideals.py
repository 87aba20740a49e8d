import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from soclelab.algebra import group_algebra, matrix_algebra, symmetric_group, upper_triangular_algebra
from soclelab.field import GF, QQ
from soclelab.ideals import (LEFT, RIGHT, CharacteristicTooSmall, NotAnIdeal, NotSemiprime, OneSidedIdeal,
                             idempotent_generator, is_semiprime, is_two_sided, lan, lan_of, left_ideal_generated,
                             principal_left, principal_right, radical, ran, ran_of, require_semiprime,
                             ring_socle, two_sided_ideal_generated)
from soclelab.linalg import Subspace
import oracles
from soclelab.suites import SEMIPRIME, build_family, random_ideal, random_left_ideal

F = GF(17)
FAMILY_KEYS = [k for k in SEMIPRIME if k.endswith("GF(17)")]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_radical_of_triangular_is_strict_upper(n):
    t = upper_triangular_algebra(n, F)
    rad = radical(t)
    assert rad.dim == n * (n - 1) // 2
    # every radical element is nilpotent: x^n = 0
    rng = np.random.default_rng(n)
    for _ in range(5):
        x = t.element(rad.random_element(rng))
        assert (x ** n).is_zero()
    assert not is_semiprime(t)
    with pytest.raises(NotSemiprime):
        require_semiprime(t)


@pytest.mark.parametrize("key", FAMILY_KEYS)
def test_semisimple_families_have_zero_radical(key):
    assert radical(build_family(key)).dim == 0
    assert ring_socle(build_family(key)).dim == build_family(key).dim


def test_radical_needs_large_characteristic():
    with pytest.raises(CharacteristicTooSmall):
        radical(group_algebra(symmetric_group(3), GF(5)))
    assert radical(group_algebra(symmetric_group(3), GF(7))).dim == 0
    assert radical(matrix_algebra(2, QQ)).dim == 0


@given(st.integers(0, 10_000), st.sampled_from(FAMILY_KEYS + ["triangular:T3:GF(17)"]))
def test_annihilators_brute_force(seed, key):
    alg = build_family(key)
    rng = np.random.default_rng(seed)
    ideal = random_left_ideal(alg, rng)
    r = ran_of(ideal)
    # definition check: l x = 0 for all basis l, x
    for l, x in itertools.product(ideal.elements(), r.elements()):
        assert (l * x).is_zero()
    # maximality: dim Ran(L) = nullity of stacked L_l
    stacked = np.vstack([alg.left_matrix(l.coords) for l in ideal.elements()]) if ideal.dim else F.zeros((0, alg.dim))
    assert r.dim == alg.dim - oracles.rank(F, stacked)
    assert r.side is RIGHT and r.check()
    ll = lan_of(r)
    assert ideal <= ll


@given(st.integers(0, 10_000), st.sampled_from(FAMILY_KEYS))
def test_double_annihilator_in_semisimple(seed, key):
    alg = build_family(key)
    ideal = random_left_ideal(alg, np.random.default_rng(seed))
    assert lan_of(ran_of(ideal)) == ideal


def test_annihilator_of_empty_set_is_everything():
    alg = matrix_algebra(2, F)
    assert lan([], alg).dim == 4 and ran([], alg).dim == 4


def test_principal_ideals_m2():
    alg = matrix_algebra(2, F)
    e11 = alg.basis_element(0)
    l = principal_left(e11)
    # A E11 = span{E11, E21}
    assert l.space == Subspace.span(F, 4, [F.array([[1, 0, 0, 0], [0, 0, 1, 0]])])
    r = principal_right(e11)
    assert r.space == Subspace.span(F, 4, [F.array([[1, 0, 0, 0], [0, 1, 0, 0]])])
    assert ran([e11]).space == Subspace.span(F, 4, [F.array([[0, 0, 1, 0], [0, 0, 0, 1]])])


@given(st.integers(0, 10_000), st.sampled_from(FAMILY_KEYS))
def test_idempotent_generator_semisimple(seed, key):
    alg = build_family(key)
    ideal = random_ideal(alg, np.random.default_rng(seed))
    e = idempotent_generator(ideal)
    assert e is not None and e * e == e
    gen = principal_left(e) if ideal.side is LEFT else principal_right(e)
    assert gen == ideal


def test_idempotent_generator_absent_for_nilpotent():
    t = upper_triangular_algebra(2, F)
    e12 = t.basis_element(1)
    assert idempotent_generator(principal_left(e12)) is None


def test_one_sided_ideal_check_rejects():
    alg = matrix_algebra(2, F)
    with pytest.raises(NotAnIdeal):
        OneSidedIdeal(alg, LEFT, Subspace.span(F, 4, [F.array([[1, 0, 0, 0]])])).check()


def test_two_sided_generation():
    alg = matrix_algebra(2, F)
    assert two_sided_ideal_generated(alg, Subspace.span(F, 4, [F.array([[0, 1, 0, 0]])])).dim == 4
    t = upper_triangular_algebra(2, F)
    assert is_two_sided(t, radical(t))
    assert left_ideal_generated(alg, [alg.basis_element(0)]) == principal_left(alg.basis_element(0))
