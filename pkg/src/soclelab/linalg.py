"""Exact elimination and the canonical subspace type.

Every ideal, kernel and image in the package is a :class:`Subspace` stored in
reduced row-echelon form, so equality of subspaces is equality of arrays.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from .field import Field


class DimensionMismatch(ValueError):
    pass


def _rref_modp(field: Field, m: np.ndarray):
    p = field.p
    a = (np.array(m, dtype=field.dtype) % p).copy()
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if len(nz) == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        col = a[:, c].copy()
        col[r] = 0
        if np.any(col):
            a = (a - np.outer(col, a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], tuple(pivots)


def _bareiss_echelon(rows: list[list[int]], ncols: int):
    """Fraction-free forward elimination; returns integer echelon rows and pivots."""
    m = len(rows)
    r = 0
    prev = 1
    pivots = []
    for c in range(ncols):
        if r == m:
            break
        i = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if i is None:
            continue
        rows[r], rows[i] = rows[i], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, m):
            ric = rows[i][c]
            row_i = rows[i]
            row_r = rows[r]
            rows[i] = [0] * c + [(piv * row_i[j] - ric * row_r[j]) // prev for j in range(c, ncols)]
        prev = piv
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def _rref_rational(m: np.ndarray):
    rows_in = [[Fraction(x) for x in row] for row in m]
    ncols = m.shape[1]
    int_rows = []
    for row in rows_in:
        d = lcm(*(x.denominator for x in row)) if row else 1
        int_rows.append([int(x * d) for x in row])
    ech, pivots = _bareiss_echelon(int_rows, ncols)
    # back substitution on the (few) echelon rows
    out = [[Fraction(x, row[c]) for x in row] for row, c in zip(ech, pivots)]
    for k in range(len(out) - 1, -1, -1):
        c = pivots[k]
        for i in range(k):
            f = out[i][c]
            if f:
                out[i] = [a - f * b for a, b in zip(out[i], out[k])]
    res = np.empty((len(out), ncols), dtype=object)
    for i, row in enumerate(out):
        res[i, :] = row
    return res, tuple(pivots)


def rref(field: Field, m) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row-echelon form with zero rows dropped, and the pivot columns."""
    m = np.asarray(m)
    if m.ndim != 2:
        raise DimensionMismatch(f"expected a matrix, got shape {m.shape}")
    if m.shape[0] == 0 or m.shape[1] == 0:
        return field.zeros((0, m.shape[1])), ()
    if field.p:
        return _rref_modp(field, m)
    return _rref_rational(m)


def rank(field: Field, m) -> int:
    return len(rref(field, m)[1])


def nullspace(field: Field, m) -> np.ndarray:
    """Rows spanning ``{x : m @ x == 0}``, in RREF."""
    m = np.asarray(m)
    n = m.shape[1]
    r, pivots = rref(field, m)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = field.zeros((len(free), n))
    for k, f in enumerate(free):
        basis[k, f] = field.one
        for i, c in enumerate(pivots):
            basis[k, c] = field.reduce(-r[i, f])
    return rref(field, basis)[0]


def solve(field: Field, m, b) -> np.ndarray | None:
    """One solution of ``m @ x == b``, or None when inconsistent."""
    m = np.asarray(m)
    b = np.asarray(b)
    if m.ndim != 2 or b.shape != (m.shape[0],):
        raise DimensionMismatch(f"matrix {m.shape} incompatible with rhs {b.shape}")
    n = m.shape[1]
    aug = np.concatenate([np.asarray(m, dtype=object), np.asarray(b, dtype=object).reshape(-1, 1)], axis=1)
    r, pivots = rref(field, field.array(aug))
    if n in pivots:
        return None
    x = field.zeros(n)
    for i, c in enumerate(pivots):
        x[c] = r[i, n]
    return x


def inverse(field: Field, m) -> np.ndarray | None:
    m = np.asarray(m)
    n = m.shape[0]
    aug = np.concatenate([m.astype(object), field.eye(n).astype(object)], axis=1)
    r, pivots = rref(field, field.array(aug))
    if pivots[:n] != tuple(range(n)):
        return None
    return r[:n, n:]


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of ``field**ambient`` held as canonical RREF rows."""

    field: Field
    ambient: int
    basis: np.ndarray
    pivots: tuple[int, ...]

    @classmethod
    def span(cls, field: Field, ambient: int, vectors=()) -> "Subspace":
        vecs = [np.asarray(v) for v in vectors]
        if not vecs:
            return cls.zero(field, ambient)
        m = np.vstack([v.reshape(-1, ambient) for v in vecs])
        if m.shape[1] != ambient:
            raise DimensionMismatch(f"vectors of length {m.shape[1]} in ambient {ambient}")
        r, piv = rref(field, field.array(m) if m.dtype != field.dtype else m)
        return cls(field, ambient, r, piv)

    @classmethod
    def from_rows(cls, field: Field, ambient: int, rows: np.ndarray) -> "Subspace":
        rows = np.asarray(rows)
        if rows.size == 0:
            return cls.zero(field, ambient)
        return cls.span(field, ambient, [rows])

    @classmethod
    def zero(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, field.zeros((0, ambient)), ())

    @classmethod
    def full(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, field.eye(ambient), tuple(range(ambient)))

    @classmethod
    def kernel(cls, field: Field, m) -> "Subspace":
        m = np.asarray(m)
        return cls(field, m.shape[1], *_canon(field, nullspace(field, m)))

    @classmethod
    def column_space(cls, field: Field, m) -> "Subspace":
        m = np.asarray(m)
        return cls.from_rows(field, m.shape[0], m.T)

    @property
    def dim(self) -> int:
        return len(self.pivots)

    @property
    def codim(self) -> int:
        return self.ambient - self.dim

    @property
    def free(self) -> tuple[int, ...]:
        """Non-pivot columns: the coordinates used for quotients by this space."""
        piv = set(self.pivots)
        return tuple(c for c in range(self.ambient) if c not in piv)

    def _check(self, other: "Subspace"):
        if self.ambient != other.ambient or self.field != other.field:
            raise DimensionMismatch(f"ambient {self.ambient}/{self.field} vs {other.ambient}/{other.field}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field == other.field
            and self.ambient == other.ambient
            and self.pivots == other.pivots
            and bool(np.all(self.basis == other.basis))
        )

    def __hash__(self) -> int:
        return hash((self.field, self.ambient, self.pivots, tuple(map(tuple, self.basis.tolist()))))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, field={self.field})"

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if other.dim == 0:
            return self
        if self.dim == 0:
            return other
        return Subspace.span(self.field, self.ambient, [self.basis, other.basis])

    def __and__(self, other: "Subspace") -> "Subspace":
        """Intersection by Zassenhaus stacking ``[[U, U], [V, 0]]``."""
        self._check(other)
        n = self.ambient
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, n)
        top = np.concatenate([self.basis, self.basis], axis=1)
        bottom = np.concatenate([other.basis, self.field.zeros(other.basis.shape)], axis=1)
        r, piv = rref(self.field, np.vstack([top, bottom]))
        rows = [r[i, n:] for i, c in enumerate(piv) if c >= n]
        return Subspace.span(self.field, n, rows)

    def __le__(self, other: "Subspace") -> bool:
        self._check(other)
        return all(other.contains(v) for v in self.basis)

    def __lt__(self, other: "Subspace") -> bool:
        return self <= other and self.dim < other.dim

    def reduce(self, v) -> np.ndarray:
        """Residue of ``v`` modulo this space; zero exactly at the pivot columns."""
        v = np.asarray(v)
        if self.dim == 0:
            return v.copy()
        return self.field.reduce(v - v[..., list(self.pivots)] @ self.basis)

    def contains(self, v) -> bool:
        v = np.asarray(v)
        if v.shape[-1] != self.ambient:
            raise DimensionMismatch(f"vector of length {v.shape[-1]} in ambient {self.ambient}")
        return self.field.is_zero(self.reduce(v))

    def coords(self, v) -> np.ndarray:
        """Coefficients of ``v`` (assumed inside) against the RREF basis."""
        return np.asarray(v)[..., list(self.pivots)]

    def quotient_coords(self, v) -> np.ndarray:
        return self.reduce(v)[..., list(self.free)]

    def lift(self, q) -> np.ndarray:
        """Embed quotient coordinates as a vector supported on the free columns."""
        q = np.asarray(q)
        out = self.field.zeros(q.shape[:-1] + (self.ambient,))
        out[..., list(self.free)] = q
        return out

    def map(self, m) -> "Subspace":
        """Image of this space under the linear map with matrix ``m``."""
        m = np.asarray(m)
        if self.dim == 0:
            return Subspace.zero(self.field, m.shape[0])
        return Subspace.from_rows(self.field, m.shape[0], self.field.matmul(self.basis, m.T))

    def random_element(self, rng: np.random.Generator) -> np.ndarray:
        if self.dim == 0:
            return self.field.zeros(self.ambient)
        c = self.field.random(rng, self.dim)
        return self.field.matmul(c, self.basis)


def _canon(field: Field, rows: np.ndarray):
    if rows.shape[0] == 0:
        return field.zeros((0, rows.shape[1])), ()
    return rref(field, rows)


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    return u + v


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    return u & v


def subspace_contains(u: Subspace, x) -> bool:
    return u.contains(x)


def codim(u: Subspace) -> int:
    return u.codim
