"""One-sided ideal calculus: principal ideals, annihilators, idempotent
generators, the Jacobson radical, semiprimeness and the socle.

Right-sided questions are answered in the opposite algebra, which has the
same coordinates: a right ideal of A is a left ideal of A^op.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .algebra import AlgebraSC, AlgebraMismatch, Element, left_regular, right_regular
from .linalg import Subspace, solve


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"

    def flip(self) -> "Side":
        return Side.RIGHT if self is Side.LEFT else Side.LEFT


LEFT, RIGHT = Side.LEFT, Side.RIGHT


class NotSemiprime(ValueError):
    def __init__(self, algebra: AlgebraSC, radical_dim: int):
        super().__init__(f"{algebra!r} is not semiprime (radical has dimension {radical_dim})")
        self.radical_dim = radical_dim


class CharacteristicTooSmall(ValueError):
    def __init__(self, p: int, dim: int):
        super().__init__(f"characteristic {p} must exceed the dimension {dim}")
        self.p, self.dim = p, dim


class NotAnIdeal(ValueError):
    pass


class CertificateError(AssertionError):
    """A constructed witness failed its re-verification: an internal bug."""


@dataclass(frozen=True, eq=False)
class OneSidedIdeal:
    algebra: AlgebraSC
    side: Side
    space: Subspace

    def __post_init__(self):
        if self.space.ambient != self.algebra.dim:
            raise AlgebraMismatch("ideal space has the wrong ambient dimension")

    def check(self) -> "OneSidedIdeal":
        """Raise NotAnIdeal unless the space is closed under the declared side."""
        tensor = self.algebra.left_tensor if self.side is LEFT else self.algebra.right_tensor
        f = self.algebra.field
        for i in range(self.algebra.dim):
            if self.space.dim and not self.space.contains(f.matmul(self.space.basis, tensor[i].T)):
                # a row fails; find it for the message
                raise NotAnIdeal(f"{self.side.value} multiplication by b{i} leaves the subspace")
        return self

    @property
    def dim(self) -> int:
        return self.space.dim

    def __eq__(self, other) -> bool:
        if not isinstance(other, OneSidedIdeal):
            return NotImplemented
        return self.algebra is other.algebra and self.side is other.side and self.space == other.space

    def __hash__(self) -> int:
        return hash((id(self.algebra), self.side, self.space))

    def __repr__(self) -> str:
        return f"OneSidedIdeal({self.side.value}, dim={self.dim}, in {self.algebra!r})"

    def __and__(self, other: "OneSidedIdeal") -> "OneSidedIdeal":
        _same(self, other)
        return OneSidedIdeal(self.algebra, self.side, self.space & other.space)

    def __add__(self, other: "OneSidedIdeal") -> "OneSidedIdeal":
        _same(self, other)
        return OneSidedIdeal(self.algebra, self.side, self.space + other.space)

    def __le__(self, other: "OneSidedIdeal") -> bool:
        _same(self, other)
        return self.space <= other.space

    def elements(self) -> list[Element]:
        return [Element(self.algebra, row.copy()) for row in self.space.basis]

    def contains(self, a: Element) -> bool:
        return self.space.contains(a.coords)

    def is_full(self) -> bool:
        return self.space.dim == self.algebra.dim

    def as_left(self) -> "OneSidedIdeal":
        """The same subspace as a left ideal of A (left) or of A^op (right)."""
        if self.side is LEFT:
            return self
        return OneSidedIdeal(self.algebra.opposite, LEFT, self.space)

    def random_element(self, rng: np.random.Generator) -> Element:
        return Element(self.algebra, self.space.random_element(rng))


def _same(a: OneSidedIdeal, b: OneSidedIdeal):
    if a.algebra is not b.algebra or a.side is not b.side:
        raise AlgebraMismatch("ideals of different algebras or sides")


def from_left_of_opposite(ideal: OneSidedIdeal) -> OneSidedIdeal:
    """Inverse of :meth:`OneSidedIdeal.as_left` for a left ideal of A^op."""
    return OneSidedIdeal(ideal.algebra.opposite, RIGHT, ideal.space)


def full_ideal(alg: AlgebraSC, side: Side = LEFT) -> OneSidedIdeal:
    return OneSidedIdeal(alg, side, alg.full_space())


def zero_ideal(alg: AlgebraSC, side: Side = LEFT) -> OneSidedIdeal:
    return OneSidedIdeal(alg, side, alg.zero_space())


def principal_left(a: Element) -> OneSidedIdeal:
    """``A a``: the column space of the right multiplication matrix of ``a``."""
    alg = a.algebra
    return OneSidedIdeal(alg, LEFT, Subspace.column_space(alg.field, right_regular(a)))


def principal_right(a: Element) -> OneSidedIdeal:
    """``a A``: the column space of the left multiplication matrix of ``a``."""
    alg = a.algebra
    return OneSidedIdeal(alg, RIGHT, Subspace.column_space(alg.field, left_regular(a)))


def left_ideal_generated(alg: AlgebraSC, gens) -> OneSidedIdeal:
    space = alg.zero_space()
    for g in gens:
        space = space + principal_left(g).space
    return OneSidedIdeal(alg, LEFT, space)


def right_ideal_generated(alg: AlgebraSC, gens) -> OneSidedIdeal:
    space = alg.zero_space()
    for g in gens:
        space = space + principal_right(g).space
    return OneSidedIdeal(alg, RIGHT, space)


def _annihilator(alg: AlgebraSC, elements, matrix_of) -> Subspace:
    elements = list(elements)
    if not elements:
        return alg.full_space()
    stacked = np.vstack([matrix_of(s) for s in elements])
    return Subspace.kernel(alg.field, stacked)


def lan(elements, algebra: AlgebraSC | None = None) -> OneSidedIdeal:
    """Left annihilator ``{x : x s = 0 for all s}``; the empty set gives A."""
    elements = list(elements)
    alg = elements[0].algebra if elements else algebra
    return OneSidedIdeal(alg, LEFT, _annihilator(alg, elements, right_regular))


def ran(elements, algebra: AlgebraSC | None = None) -> OneSidedIdeal:
    """Right annihilator ``{x : s x = 0 for all s}``; the empty set gives A."""
    elements = list(elements)
    alg = elements[0].algebra if elements else algebra
    return OneSidedIdeal(alg, RIGHT, _annihilator(alg, elements, left_regular))


def lan_of(ideal: OneSidedIdeal) -> OneSidedIdeal:
    return lan(ideal.elements(), ideal.algebra)


def ran_of(ideal: OneSidedIdeal) -> OneSidedIdeal:
    return ran(ideal.elements(), ideal.algebra)


def idempotent_generator(ideal: OneSidedIdeal) -> Element | None:
    """An idempotent ``e`` with ``A e = L`` (left) or ``e A = R`` (right), if one exists.

    Solves for a right identity of L inside L: ``e in L`` and ``l e = l`` for
    every basis vector ``l`` of L.  Any solution is idempotent and generates L.
    """
    alg = ideal.algebra
    f = alg.field
    if ideal.side is RIGHT:
        e = idempotent_generator(ideal.as_left())
        return None if e is None else Element(alg, e.coords)
    basis = ideal.space.basis
    k = basis.shape[0]
    if k == 0:
        return alg.zero
    # unknown c: e = c @ basis; equations sum_j c_j (l_i l_j) = l_i
    blocks = [f.matmul(alg.left_matrix(l), basis.T) for l in basis]
    system = np.vstack(blocks)
    rhs = np.concatenate(list(basis))
    c = solve(f, system, rhs)
    if c is None:
        return None
    e = Element(alg, f.matmul(c, basis))
    if e * e != e or principal_left(e).space != ideal.space:
        raise CertificateError("idempotent generator failed re-verification")
    return e


# -- radical, semiprimeness, socle -----------------------------------------


@lru_cache(maxsize=256)
def radical(alg: AlgebraSC) -> Subspace:
    """Jacobson radical as the kernel of the trace form ``(a, b) -> tr(L_ab)``.

    Valid in characteristic 0 and in characteristic p > dim(A).
    """
    f = alg.field
    if f.p and f.p <= alg.dim:
        raise CharacteristicTooSmall(f.p, alg.dim)
    if alg.dim == 0:
        return alg.zero_space()
    traces = np.array([sum(alg.left_tensor[k].diagonal().tolist(), f.zero) for k in range(alg.dim)], dtype=object)
    gram = f.array(np.tensordot(alg.table.astype(object), traces, axes=(2, 0)))
    return Subspace.kernel(f, gram)


def is_semiprime(alg: AlgebraSC) -> bool:
    return radical(alg).dim == 0


def require_semiprime(alg: AlgebraSC) -> None:
    rad = radical(alg)
    if rad.dim:
        raise NotSemiprime(alg, rad.dim)


def ring_socle(alg: AlgebraSC) -> Subspace:
    """soc(A) for a semiprime finite-dimensional algebra.

    Finite-dimensional and semiprime means semisimple, so the socle is all of A.
    """
    require_semiprime(alg)
    return alg.full_space()


def two_sided_ideal_generated(alg: AlgebraSC, space: Subspace) -> Subspace:
    """Smallest two-sided ideal containing ``space``."""
    f = alg.field
    cur = space
    while True:
        imgs = [cur.basis]
        for i in range(alg.dim):
            imgs.append(f.matmul(cur.basis, alg.left_tensor[i].T))
            imgs.append(f.matmul(cur.basis, alg.right_tensor[i].T))
        nxt = Subspace.span(f, alg.dim, imgs) if cur.dim else cur
        if nxt == cur:
            return cur
        cur = nxt


def is_two_sided(alg: AlgebraSC, space: Subspace) -> bool:
    return two_sided_ideal_generated(alg, space) == space
