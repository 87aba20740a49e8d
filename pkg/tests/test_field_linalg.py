from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from soclelab.field import GF, QQ, FieldError, is_prime, parse_field
from soclelab.linalg import (DimensionMismatch, Subspace, inverse, nullspace, rank, rref, solve,
                             subspace_intersect, subspace_sum)

import oracles

FIELDS = [QQ, GF(2), GF(3), GF(17), GF(1_048_583)]


@st.composite
def matrices(draw, max_rows=6, max_cols=6):
    f = draw(st.sampled_from(FIELDS))
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(1, max_cols))
    k = draw(st.integers(0, min(r, c)))
    lo, hi = (-5, 5) if not f.p else (0, f.p - 1)
    ints = st.integers(lo, hi)
    # product of r x k and k x c gives controlled rank deficiency
    u = np.array(draw(st.lists(st.lists(ints, min_size=k, max_size=k), min_size=r, max_size=r)) or
                 [[]] * r, dtype=object).reshape(r, k)
    v = np.array(draw(st.lists(st.lists(ints, min_size=c, max_size=c), min_size=k, max_size=k)) or
                 [[]] * k, dtype=object).reshape(k, c)
    noise = draw(st.booleans())
    m = u @ v if k else np.zeros((r, c), dtype=object)
    if noise and r:
        m[0] = np.array(draw(st.lists(ints, min_size=c, max_size=c)), dtype=object)
    return f, f.array(m.tolist()) if r else f.zeros((0, c))


def test_parse_field_forms():
    assert parse_field("QQ") == QQ
    assert parse_field("Q") == QQ
    assert parse_field("GF(17)") == GF(17)
    assert parse_field("F17") == GF(17)
    assert parse_field({"prime": 19}) == GF(19)
    with pytest.raises(FieldError):
        parse_field("GF(15)")
    with pytest.raises(FieldError):
        parse_field("R")


def test_is_prime_small():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_scalars():
    f = GF(17)
    assert f.parse("3/2") == 10  # 3 * 9 = 27 = 10
    assert f.parse("-1") == 16
    assert QQ.parse("3/2") == Fraction(3, 2)
    assert f.inv(3) * 3 % 17 == 1
    with pytest.raises(ZeroDivisionError):
        f.inv(0)
    with pytest.raises(FieldError):
        f.parse(1.5)
    with pytest.raises(FieldError):
        f.parse("x")
    assert QQ.fmt(Fraction(-3, 4)) == "-3/4"


@given(matrices())
def test_rref_matches_sympy(fm):
    f, m = fm
    r, piv = rref(f, m)
    assert [list(map(f, row)) for row in r.tolist()] == oracles.rref_rows(f, m)
    assert len(piv) == rank(f, m) == oracles.rank(f, m)


@given(matrices())
def test_nullspace_is_kernel(fm):
    f, m = fm
    ns = nullspace(f, m)
    assert ns.shape[0] == oracles.nullity(f, m)
    if ns.shape[0] and m.shape[0]:
        assert f.is_zero(f.matmul(m, ns.T))
    assert rank(f, ns) == ns.shape[0]


@given(matrices(), st.integers(0, 10_000))
def test_solve_consistent_rhs(fm, seed):
    f, m = fm
    if m.shape[0] == 0:
        return
    rng = np.random.default_rng(seed)
    x0 = f.random(rng, m.shape[1])
    b = f.matmul(m, x0)
    x = solve(f, m, b)
    assert x is not None
    assert np.array_equal(f.matmul(m, x), b)


def test_solve_inconsistent():
    f = GF(5)
    m = f.array([[1, 1], [2, 2]])
    assert solve(f, m, f.array([1, 0])) is None


def test_inverse(any_field):
    f = any_field
    m = f.array([[2, 1], [1, 1]])
    inv = inverse(f, m)
    assert np.array_equal(f.matmul(m, inv), f.eye(2))
    assert inverse(f, f.array([[1, 1], [1, 1]])) is None


def test_dimension_mismatch():
    f = GF(7)
    with pytest.raises(DimensionMismatch):
        Subspace.full(f, 3) + Subspace.full(f, 4)


@given(matrices(max_cols=5), st.integers(0, 10_000))
def test_subspace_lattice_laws(fm, seed):
    f, m = fm
    n = m.shape[1]
    rng = np.random.default_rng(seed)
    u = Subspace.span(f, n, [m])
    w = Subspace.span(f, n, [f.random(rng, (int(rng.integers(0, n + 1)), n))])
    s, i = subspace_sum(u, w), subspace_intersect(u, w)
    assert s.dim + i.dim == u.dim + w.dim
    assert i <= u and i <= w and u <= s and w <= s
    # intersection against an oracle: dim(U & W) = dim U + dim W - rank [U; W]
    stacked = np.vstack([u.basis, w.basis]) if u.dim + w.dim else f.zeros((0, n))
    assert i.dim == u.dim + w.dim - oracles.rank(f, stacked)
    assert (u & u) == u and (u + u) == u
    assert (u & Subspace.full(f, n)) == u and (u + Subspace.zero(f, n)) == u


@given(matrices(max_cols=5), st.integers(0, 10_000))
def test_quotient_coordinates_roundtrip(fm, seed):
    f, m = fm
    n = m.shape[1]
    u = Subspace.span(f, n, [m])
    rng = np.random.default_rng(seed)
    v = f.random(rng, n)
    q = u.quotient_coords(v)
    assert len(q) == u.codim
    back = u.lift(q)
    assert u.contains(f.reduce(v - back))
    assert u.contains(u.random_element(rng))


def test_subspace_equality_is_canonical(F17):
    a = Subspace.span(F17, 3, [F17.array([[1, 2, 3], [0, 1, 1]])])
    b = Subspace.span(F17, 3, [F17.array([[1, 3, 4], [2, 5, 7]])])
    assert a == b and hash(a) == hash(b)
    assert a.free == (2,)


def test_kernel_and_column_space(F17):
    m = F17.array([[1, 2], [2, 4]])
    assert Subspace.kernel(F17, m).dim == 1
    assert Subspace.column_space(F17, m).dim == 1
    assert Subspace.kernel(F17, m).contains(F17.array([15, 1]))
