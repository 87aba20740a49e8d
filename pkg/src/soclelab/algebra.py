"""Finite-dimensional unital associative algebras given by structure constants.

``b_i * b_j = sum_k c[i][j][k] b_k``.  Tables are stored sparse as
``(i, j, k, c)`` entries; the dense tensor is built lazily on first use.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import cached_property

import numpy as np

from .field import Field
from .linalg import Subspace


class AlgebraError(ValueError):
    pass


class AssociativityViolation(AlgebraError):
    def __init__(self, i: int, j: int, k: int):
        super().__init__(f"(b{i} b{j}) b{k} != b{i} (b{j} b{k})")
        self.witness = (i, j, k)


class UnitViolation(AlgebraError):
    def __init__(self, i: int):
        super().__init__(f"unit does not act as identity on b{i}")
        self.witness = (i,)


class InvolutionViolation(AlgebraError):
    def __init__(self, reason: str, witness=()):
        super().__init__(f"involution check failed: {reason} at {witness}")
        self.witness = tuple(witness)


class MissingInvolution(AlgebraError):
    pass


class NotAGroup(AlgebraError):
    pass


class NotTwoSidedIdeal(AlgebraError):
    pass


class AlgebraMismatch(AlgebraError):
    pass


@dataclass(eq=False)
class AlgebraSC:
    field: Field
    dim: int
    mult: tuple  # sparse (i, j, k, c), c != 0
    unit: np.ndarray
    involution: np.ndarray | None = None
    name: str = ""
    # coordinate map from the parent algebra, set by quotient_algebra
    projection: np.ndarray | None = dc_field(default=None, repr=False)

    def __repr__(self) -> str:
        return f"AlgebraSC({self.name or '?'}, dim={self.dim}, field={self.field})"

    @cached_property
    def table(self) -> np.ndarray:
        """Dense tensor ``c[i, j, k]``."""
        c = self.field.zeros((self.dim, self.dim, self.dim))
        for i, j, k, v in self.mult:
            c[i, j, k] = self.field(c[i, j, k] + v)
        c.flags.writeable = False
        return c

    @cached_property
    def left_tensor(self) -> np.ndarray:
        """``left_tensor[i]`` is the matrix of ``x -> b_i x``."""
        t = np.ascontiguousarray(np.transpose(self.table, (0, 2, 1)))
        t.flags.writeable = False
        return t

    @cached_property
    def right_tensor(self) -> np.ndarray:
        """``right_tensor[j]`` is the matrix of ``x -> x b_j``."""
        t = np.ascontiguousarray(np.transpose(self.table, (1, 2, 0)))
        t.flags.writeable = False
        return t

    @cached_property
    def opposite(self) -> "AlgebraSC":
        inv = None if self.involution is None else self.involution
        op = AlgebraSC(self.field, self.dim, tuple((j, i, k, c) for i, j, k, c in self.mult),
                       self.unit, inv, name=f"{self.name}^op")
        op.__dict__["opposite"] = self
        return op

    @property
    def is_zero_algebra(self) -> bool:
        return self.dim == 0

    # -- elements --------------------------------------------------------

    def element(self, coords) -> "Element":
        return Element(self, self.field.array(coords))

    def basis_element(self, i: int) -> "Element":
        v = self.field.zeros(self.dim)
        v[i] = self.field.one
        return Element(self, v)

    @property
    def one(self) -> "Element":
        return Element(self, self.unit.copy())

    @property
    def zero(self) -> "Element":
        return Element(self, self.field.zeros(self.dim))

    def random_element(self, rng: np.random.Generator) -> "Element":
        return Element(self, self.field.random(rng, self.dim))

    def basis(self) -> list["Element"]:
        return [self.basis_element(i) for i in range(self.dim)]

    def full_space(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def zero_space(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    def _mul_coords(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        f = self.field
        la = f.reduce(np.tensordot(a, self.left_tensor, axes=(0, 0)))
        return f.matmul(la, b)

    def left_matrix(self, a: np.ndarray) -> np.ndarray:
        return self.field.reduce(np.tensordot(a, self.left_tensor, axes=(0, 0)))

    def right_matrix(self, a: np.ndarray) -> np.ndarray:
        return self.field.reduce(np.tensordot(a, self.right_tensor, axes=(0, 0)))

    def star_matrix(self) -> np.ndarray:
        if self.involution is None:
            raise MissingInvolution(f"{self!r} has no involution")
        return self.involution


@dataclass(frozen=True, eq=False)
class Element:
    algebra: AlgebraSC
    coords: np.ndarray

    def _same(self, other: "Element"):
        if not isinstance(other, Element) or other.algebra is not self.algebra:
            raise AlgebraMismatch("elements of different algebras")

    def __add__(self, other: "Element") -> "Element":
        self._same(other)
        return Element(self.algebra, self.algebra.field.reduce(self.coords + other.coords))

    def __sub__(self, other: "Element") -> "Element":
        self._same(other)
        return Element(self.algebra, self.algebra.field.reduce(self.coords - other.coords))

    def __neg__(self) -> "Element":
        return Element(self.algebra, self.algebra.field.reduce(-self.coords))

    def __mul__(self, other) -> "Element":
        if isinstance(other, Element):
            return mul(self, other)
        return Element(self.algebra, self.algebra.field.scale(other, self.coords))

    def __rmul__(self, c) -> "Element":
        return Element(self.algebra, self.algebra.field.scale(c, self.coords))

    def __pow__(self, n: int) -> "Element":
        out = self.algebra.one
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return other.algebra is self.algebra and bool(np.all(self.coords == other.coords))

    def __hash__(self) -> int:
        return hash((id(self.algebra), tuple(self.coords.tolist())))

    def is_zero(self) -> bool:
        return self.algebra.field.is_zero(self.coords)

    def __repr__(self) -> str:
        f = self.algebra.field
        return "Element([" + ", ".join(f.fmt(c) for c in self.coords) + "])"


def mul(a: Element, b: Element) -> Element:
    a._same(b)
    return Element(a.algebra, a.algebra._mul_coords(a.coords, b.coords))


def left_regular(a: Element) -> np.ndarray:
    """Matrix of ``x -> a x``."""
    return a.algebra.left_matrix(a.coords)


def right_regular(a: Element) -> np.ndarray:
    """Matrix of ``x -> x a``."""
    return a.algebra.right_matrix(a.coords)


def star(a: Element) -> Element:
    m = a.algebra.star_matrix()
    return Element(a.algebra, a.algebra.field.matmul(m, a.coords))


# -- construction and validation -----------------------------------------


def _check_algebra(alg: AlgebraSC) -> None:
    f, n = alg.field, alg.dim
    if n == 0:
        return
    lt = alg.left_tensor
    c = alg.table
    for i, j in itertools.product(range(n), repeat=2):
        # left multiplication by b_i b_j must equal L_i L_j
        lhs = f.reduce(np.tensordot(c[i, j], lt, axes=(0, 0)))
        rhs = f.matmul(lt[i], lt[j])
        diff = np.nonzero(np.any(lhs != rhs, axis=0))[0]
        if len(diff):
            raise AssociativityViolation(i, j, int(diff[0]))
    left_u = alg.left_matrix(alg.unit)
    right_u = alg.right_matrix(alg.unit)
    eye = f.eye(n)
    for m in (left_u, right_u):
        bad = np.nonzero(np.any(m != eye, axis=0))[0]
        if len(bad):
            raise UnitViolation(int(bad[0]))
    if alg.involution is not None:
        s = alg.involution
        if s.shape != (n, n):
            raise InvolutionViolation("shape", s.shape)
        if np.any(f.matmul(s, alg.unit) != alg.unit):
            raise InvolutionViolation("1* != 1")
        bad = np.nonzero(np.any(f.matmul(s, s) != eye, axis=0))[0]
        if len(bad):
            raise InvolutionViolation("(a*)* != a", (int(bad[0]),))
        for i, j in itertools.product(range(n), repeat=2):
            lhs = f.matmul(s, c[i, j])
            rhs = alg._mul_coords(s[:, j], s[:, i])
            if np.any(lhs != rhs):
                raise InvolutionViolation("(ab)* != b* a*", (i, j))


def build_algebra(field: Field, dim: int, mult, unit, involution=None, name: str = "",
                  check: bool = True) -> AlgebraSC:
    """Validate and build an algebra from sparse ``(i, j, k, c)`` entries."""
    if dim < 0:
        raise AlgebraError("negative dimension")
    entries = []
    for i, j, k, c in mult:
        if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
            raise AlgebraError(f"structure constant index out of range: {(i, j, k)}")
        c = field(c)
        if c:
            entries.append((int(i), int(j), int(k), c))
    unit = field.array(list(unit)) if dim else field.zeros(0)
    if unit.shape != (dim,):
        raise AlgebraError(f"unit has length {unit.shape[0]}, expected {dim}")
    inv = None if involution is None else field.array(involution).reshape(dim, dim)
    alg = AlgebraSC(field, dim, tuple(entries), unit, inv, name=name)
    if check:
        _check_algebra(alg)
    return alg


def zero_algebra(field: Field) -> AlgebraSC:
    return AlgebraSC(field, 0, (), field.zeros(0), field.zeros((0, 0)), name="0")


def matrix_algebra(n: int, field: Field, involution: bool = True) -> AlgebraSC:
    """M_n with matrix-unit basis, ``E_ij`` at index ``i*n + j``; involution = transpose."""
    idx = lambda i, j: i * n + j
    mult = [(idx(i, j), idx(j, l), idx(i, l), 1) for i in range(n) for j in range(n) for l in range(n)]
    unit = [1 if i == j else 0 for i in range(n) for j in range(n)]
    inv = None
    if involution:
        inv = field.zeros((n * n, n * n))
        for i, j in itertools.product(range(n), repeat=2):
            inv[idx(j, i), idx(i, j)] = field.one
    return build_algebra(field, n * n, mult, unit, inv, name=f"M{n}({field})", check=n <= 3)


def upper_triangular_algebra(n: int, field: Field) -> AlgebraSC:
    """Upper-triangular n x n matrices; basis ``E_ij`` (i <= j) in row-major order."""
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    pos = {pq: k for k, pq in enumerate(pairs)}
    mult = [(pos[(i, j)], pos[(j, l)], pos[(i, l)], 1) for (i, j) in pairs for l in range(j, n)]
    unit = [1 if i == j else 0 for i, j in pairs]
    return build_algebra(field, len(pairs), mult, unit, name=f"T{n}({field})")


def direct_product(a: AlgebraSC, b: AlgebraSC) -> AlgebraSC:
    if a.field != b.field:
        raise AlgebraMismatch("direct product over different fields")
    f = a.field
    d = a.dim
    mult = list(a.mult) + [(i + d, j + d, k + d, c) for i, j, k, c in b.mult]
    unit = np.concatenate([a.unit, b.unit]).tolist()
    inv = None
    if a.involution is not None and b.involution is not None:
        inv = f.zeros((d + b.dim, d + b.dim))
        inv[:d, :d] = a.involution
        inv[d:, d:] = b.involution
    return build_algebra(f, d + b.dim, mult, unit, inv, name=f"{a.name}x{b.name}")


def check_group_table(table) -> tuple[int, list[int]]:
    """Return the identity index and inverses, or raise NotAGroup."""
    t = [list(map(int, row)) for row in table]
    n = len(t)
    if n == 0 or any(len(r) != n for r in t):
        raise NotAGroup("table must be square and nonempty")
    if any(not 0 <= x < n for r in t for x in r):
        raise NotAGroup("entries out of range")
    ident = next((e for e in range(n) if all(t[e][g] == g and t[g][e] == g for g in range(n))), None)
    if ident is None:
        raise NotAGroup("no identity element")
    inverses = []
    for g in range(n):
        h = next((h for h in range(n) if t[g][h] == ident and t[h][g] == ident), None)
        if h is None:
            raise NotAGroup(f"element {g} has no inverse")
        inverses.append(h)
    for a, b, c in itertools.product(range(n), repeat=3):
        if t[t[a][b]][c] != t[a][t[b][c]]:
            raise NotAGroup(f"not associative at {(a, b, c)}")
    return ident, inverses


def group_algebra(table, field: Field, name: str = "") -> AlgebraSC:
    """Group algebra from a Cayley table; involution ``g -> g^-1``."""
    ident, inverses = check_group_table(table)
    n = len(table)
    mult = [(g, h, int(table[g][h]), 1) for g in range(n) for h in range(n)]
    unit = [1 if g == ident else 0 for g in range(n)]
    inv = field.zeros((n, n))
    for g in range(n):
        inv[inverses[g], g] = field.one
    return build_algebra(field, n, mult, unit, inv, name=name or f"F[G{n}]", check=False)


def quotient_algebra(alg: AlgebraSC, ideal: Subspace) -> AlgebraSC:
    """``alg / ideal`` in the free coordinates of the ideal's RREF; dim 0 gives the zero algebra."""
    f = alg.field
    if ideal.ambient != alg.dim:
        raise AlgebraMismatch("ideal lives in a different space")
    for v in ideal.basis:
        for i in range(alg.dim):
            if not ideal.contains(f.matmul(alg.left_tensor[i], v)) or not ideal.contains(
                    f.matmul(alg.right_tensor[i], v)):
                raise NotTwoSidedIdeal(f"b{i} moves the ideal outside itself")
    free = ideal.free
    n = len(free)
    proj = f.zeros((n, alg.dim))
    reduced = ideal.reduce(f.eye(alg.dim))  # row r = residue of b_r
    proj[:, :] = reduced[:, list(free)].T
    if n == 0:
        q = zero_algebra(f)
        q.projection = proj
        return q
    mult = []
    for a, i in enumerate(free):
        for b, j in enumerate(free):
            prod = ideal.quotient_coords(alg.table[i, j])
            for k, c in enumerate(prod):
                if c:
                    mult.append((a, b, k, c))
    unit = ideal.quotient_coords(alg.unit)
    inv = None
    if alg.involution is not None and _star_stable(alg, ideal):
        lifted = ideal.lift(f.eye(n))  # rows: lifts of quotient basis vectors
        inv = ideal.quotient_coords(f.matmul(lifted, alg.involution.T)).T
    q = build_algebra(f, n, mult, unit.tolist(), inv, name=f"{alg.name}/I")
    q.projection = proj
    return q


def _star_stable(alg: AlgebraSC, ideal: Subspace) -> bool:
    return ideal.map(alg.involution) == ideal


# -- small groups ----------------------------------------------------------


def cyclic_group(n: int) -> list[list[int]]:
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def _perm_group(perms: list[tuple[int, ...]]) -> list[list[int]]:
    index = {p: k for k, p in enumerate(perms)}
    compose = lambda p, q: tuple(p[q[i]] for i in range(len(q)))
    return [[index[compose(p, q)] for q in perms] for p in perms]


def symmetric_group(n: int) -> list[list[int]]:
    return _perm_group(sorted(itertools.permutations(range(n))))


def dihedral_group(n: int) -> list[list[int]]:
    """Symmetries of the n-gon, order 2n."""
    rots = [tuple((i + r) % n for i in range(n)) for r in range(n)]
    refl = [tuple((r - i) % n for i in range(n)) for r in range(n)]
    return _perm_group(sorted(rots + refl))


def product_group(t1, t2) -> list[list[int]]:
    n1, n2 = len(t1), len(t2)
    return [[t1[a // n2][b // n2] * n2 + t2[a % n2][b % n2] for b in range(n1 * n2)] for a in range(n1 * n2)]


def quaternion_group() -> list[list[int]]:
    # elements (sign, unit) with unit in 1, i, j, k; index = 4 * (sign < 0) + unit
    table_units = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }
    out = []
    for a in range(8):
        row = []
        for b in range(8):
            s, u = table_units[(a % 4, b % 4)]
            s *= (-1 if a >= 4 else 1) * (-1 if b >= 4 else 1)
            row.append(u + (4 if s < 0 else 0))
        out.append(row)
    return out


GROUPS = {
    "C1": lambda: cyclic_group(1),
    "C2": lambda: cyclic_group(2),
    "C3": lambda: cyclic_group(3),
    "C4": lambda: cyclic_group(4),
    "C2xC2": lambda: product_group(cyclic_group(2), cyclic_group(2)),
    "C5": lambda: cyclic_group(5),
    "C6": lambda: cyclic_group(6),
    "S3": lambda: symmetric_group(3),
    "C7": lambda: cyclic_group(7),
    "C8": lambda: cyclic_group(8),
    "C4xC2": lambda: product_group(cyclic_group(4), cyclic_group(2)),
    "C2xC2xC2": lambda: product_group(product_group(cyclic_group(2), cyclic_group(2)), cyclic_group(2)),
    "D4": lambda: dihedral_group(4),
    "Q8": quaternion_group,
}
