"""Finite-dimensional left modules given by action matrices of basis elements.

Composition length is computed over GF(p) by a radical filtration whose
semisimple layers are chopped with a MeatAxe: a random algebra element
``theta``, an irreducible factor ``g`` of its characteristic polynomial, and a
kernel vector of ``g(theta)`` spun under the action.  A layer is accepted as
simple only with a Holt-Rees/Norton certificate (``dim ker g(theta) == deg g``
and both the kernel vector and a dual kernel vector spin to everything), so a
reported length is exact whenever it is returned at all.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .algebra import AlgebraSC, AlgebraMismatch, Element
from .field import Field
from .ideals import LEFT, OneSidedIdeal, radical, principal_left, CharacteristicTooSmall, CertificateError
from .linalg import Subspace, nullspace, solve
from .poly import charpoly, poly_factor

LengthValue = Union[int, float]  # a nonnegative int, or math.inf
INFINITE = math.inf

DEFAULT_TRIES = 32


class UnsupportedField(ValueError):
    pass


class ChopInconclusive(RuntimeError):
    pass


class NotEquivariant(ValueError):
    pass


class NotSemisimpleQuotient(ValueError):
    pass


class FullIdeal(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FDModule:
    algebra: AlgebraSC
    dim: int
    action: np.ndarray  # shape (algebra.dim, dim, dim)

    @property
    def field(self) -> Field:
        return self.algebra.field

    def __repr__(self) -> str:
        return f"FDModule(dim={self.dim}, over {self.algebra!r})"

    def check(self) -> "FDModule":
        """Verify the action respects structure constants and the unit."""
        f, alg = self.field, self.algebra
        if self.action.shape != (alg.dim, self.dim, self.dim):
            raise ValueError(f"action has shape {self.action.shape}")
        for i in range(alg.dim):
            for j in range(alg.dim):
                lhs = f.matmul(self.action[i], self.action[j])
                rhs = self.act(alg.table[i, j])
                if np.any(lhs != rhs):
                    raise ValueError(f"action violates b{i} b{j}")
        if np.any(self.act(alg.unit) != f.eye(self.dim)):
            raise ValueError("unit does not act as the identity")
        return self

    def act(self, coords) -> np.ndarray:
        """Matrix by which the algebra element with these coordinates acts."""
        if self.algebra.dim == 0:
            return self.field.zeros((self.dim, self.dim))
        return self.field.reduce(np.tensordot(np.asarray(coords), self.action, axes=(0, 0)))

    def full(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def submodule(self, sub: Subspace) -> "FDModule":
        """The module structure on ``sub`` in coordinates of its RREF basis."""
        f = self.field
        if sub.dim == 0:
            return FDModule(self.algebra, 0, f.zeros((self.algebra.dim, 0, 0)))
        images = np.stack([f.matmul(sub.basis, a.T) for a in self.action])  # rows are images
        act = np.stack([sub.coords(img).T for img in images])
        return FDModule(self.algebra, sub.dim, act)

    def quotient(self, sub: Subspace) -> "FDModule":
        """``self / sub`` in the free coordinates of ``sub``'s RREF."""
        f = self.field
        n = sub.codim
        lifts = sub.lift(f.eye(n)) if n else f.zeros((0, self.dim))
        act = f.zeros((self.algebra.dim, n, n))
        for i, a in enumerate(self.action):
            if n:
                act[i] = sub.quotient_coords(f.matmul(lifts, a.T)).T
        return FDModule(self.algebra, n, act)

    def dual(self) -> "FDModule":
        """Transposed action: a left module over the opposite algebra."""
        return FDModule(self.algebra.opposite, self.dim, np.ascontiguousarray(np.transpose(self.action, (0, 2, 1))))

    def radical_submodule(self) -> Subspace:
        """``J M`` for the Jacobson radical J of the algebra."""
        f = self.field
        rad = radical(self.algebra)
        if rad.dim == 0 or self.dim == 0:
            return Subspace.zero(f, self.dim)
        imgs = [self.act(j) for j in rad.basis]
        return Subspace.from_rows(f, self.dim, np.vstack([m.T for m in imgs]))


@dataclass(frozen=True, eq=False)
class ModuleMap:
    source: FDModule
    target: FDModule
    matrix: np.ndarray  # target.dim x source.dim

    def __post_init__(self):
        if self.source.algebra is not self.target.algebra:
            raise AlgebraMismatch("module map between modules over different algebras")
        if self.matrix.shape != (self.target.dim, self.source.dim):
            raise ValueError(f"matrix shape {self.matrix.shape} does not fit")

    def check(self) -> "ModuleMap":
        f = self.source.field
        for i in range(self.source.algebra.dim):
            lhs = f.matmul(self.matrix, self.source.action[i])
            rhs = f.matmul(self.target.action[i], self.matrix)
            if np.any(lhs != rhs):
                raise NotEquivariant(f"map does not commute with b{i}")
        return self

    def kernel(self) -> Subspace:
        f = self.source.field
        if self.target.dim == 0:
            return Subspace.full(f, self.source.dim)
        return Subspace.kernel(f, self.matrix)

    def image(self) -> Subspace:
        f = self.source.field
        if self.source.dim == 0:
            return Subspace.zero(f, self.target.dim)
        return Subspace.column_space(f, self.matrix)

    def then(self, other: "ModuleMap") -> "ModuleMap":
        """``other o self``."""
        if other.source is not self.target:
            raise ValueError("maps are not composable")
        return ModuleMap(self.source, other.target, self.source.field.matmul(other.matrix, self.matrix))


# -- constructors ----------------------------------------------------------


def regular_module(alg: AlgebraSC) -> FDModule:
    return FDModule(alg, alg.dim, alg.left_tensor)


def ideal_as_module(ideal: OneSidedIdeal) -> FDModule:
    """A left ideal as a left A-module; a right ideal as a left A^op-module."""
    lid = ideal.as_left()
    return regular_module(lid.algebra).submodule(lid.space)


def quotient_by_left_ideal(ideal: OneSidedIdeal) -> FDModule:
    """``A / L``; for a right ideal, ``A / R`` as a left A^op-module."""
    lid = ideal.as_left()
    return regular_module(lid.algebra).quotient(lid.space)


# -- spinning and chopping -------------------------------------------------


def spin(module: FDModule, vectors) -> Subspace:
    """Smallest submodule containing ``vectors``."""
    f = module.field
    cur = Subspace.span(f, module.dim, [np.asarray(v).reshape(-1, module.dim) for v in vectors]) \
        if len(vectors) else Subspace.zero(f, module.dim)
    frontier = cur.basis
    while frontier.shape[0]:
        imgs = np.vstack([f.matmul(frontier, a.T) for a in module.action])
        resid = cur.reduce(imgs)
        resid = resid[np.any(resid != 0, axis=1)]
        if resid.shape[0] == 0:
            break
        nxt = cur + Subspace.from_rows(f, module.dim, resid)
        if nxt.dim == cur.dim:
            break
        frontier = resid
        cur = nxt
    return cur


def _random_theta(module: FDModule, rng: np.random.Generator) -> np.ndarray:
    f = module.field
    alg = module.algebra
    c = f.random(rng, alg.dim)
    theta = module.act(c)
    if rng.random() < 0.5:
        # products widen the pool beyond the span of single basis actions
        theta = f.matmul(theta, module.act(f.random(rng, alg.dim)))
        theta = f.reduce(theta + module.act(f.random(rng, alg.dim)))
    return theta


def _check_field(module: FDModule):
    f = module.field
    if not f.is_prime_field:
        raise UnsupportedField("composition length is only implemented over GF(p)")
    if f.p <= module.algebra.dim:
        raise CharacteristicTooSmall(f.p, module.algebra.dim)


def find_submodule(module: FDModule, rng: np.random.Generator, tries: int = DEFAULT_TRIES) -> Subspace | None:
    """A proper nonzero submodule, or None when the module is certified simple."""
    _check_field(module)
    f = module.field
    n = module.dim
    if n == 0:
        raise ValueError("the zero module has no proper nonzero submodule and is not simple")
    if n == 1:
        return None
    dual = module.dual()
    for _ in range(tries):
        theta = _random_theta(module, rng)
        for g, _mult in poly_factor(charpoly(f, theta)):
            gt = g.eval_matrix(theta)
            ker = nullspace(f, gt)
            v = ker[0]
            s = spin(module, [v])
            if s.dim < n:
                return s
            if ker.shape[0] != g.degree:
                continue
            w = nullspace(f, gt.T)[0]
            sd = spin(dual, [w])
            if sd.dim < n:
                return Subspace.kernel(f, sd.basis)
            return None
    raise ChopInconclusive(f"no certificate after {tries} random elements on a module of dimension {n}")


def _embed(inner: Subspace, outer: Subspace) -> Subspace:
    """Map a subspace given in coordinates of ``outer``'s basis to ambient coordinates."""
    f = outer.field
    if inner.dim == 0:
        return Subspace.zero(f, outer.ambient)
    return Subspace.from_rows(f, outer.ambient, f.matmul(inner.basis, outer.basis))


def minimal_submodule(module: FDModule, rng: np.random.Generator, within: Subspace | None = None,
                      tries: int = DEFAULT_TRIES) -> Subspace:
    """A simple submodule of ``module`` (contained in ``within`` if given)."""
    cur = within if within is not None else module.full()
    if cur.dim == 0:
        raise ValueError("the zero module has no simple submodule")
    while True:
        sub = module.submodule(cur)
        s = find_submodule(sub, rng, tries)
        if s is None:
            _assert_simple(sub)
            return cur
        cur = _embed(s, cur)


def _assert_simple(module: FDModule) -> None:
    # cheap necessary condition: every basis vector regenerates the module
    f = module.field
    for k in range(module.dim):
        e = f.zeros(module.dim)
        e[k] = f.one
        if spin(module, [e]).dim != module.dim:
            raise CertificateError("certified simple module has a proper cyclic submodule")


def _chop_length(module: FDModule, rng: np.random.Generator, tries: int) -> int:
    if module.dim == 0:
        return 0
    s = find_submodule(module, rng, tries)
    if s is None:
        return 1
    return _chop_length(module.submodule(s), rng, tries) + _chop_length(module.quotient(s), rng, tries)


def radical_layers(module: FDModule) -> list[FDModule]:
    """Semisimple layers ``J^i M / J^{i+1} M`` of the radical filtration."""
    layers = []
    cur = module
    while cur.dim:
        rad = cur.radical_submodule()
        if rad.dim == cur.dim:
            raise CertificateError("radical filtration does not descend")
        layers.append(cur.quotient(rad))
        cur = cur.submodule(rad)
    return layers


def composition_length(module: FDModule, seed: int = 0, tries: int = DEFAULT_TRIES) -> int:
    """Length of a composition series; exact, raises ChopInconclusive rather than guess."""
    _check_field(module)
    rng = np.random.default_rng(seed)
    return sum(_chop_length(layer, rng, tries) for layer in radical_layers(module))


def length(module: FDModule, seed: int = 0) -> LengthValue:
    return composition_length(module, seed)


def is_semisimple_module(module: FDModule) -> bool:
    """True iff ``J M = 0``."""
    return module.radical_submodule().dim == 0


# -- homomorphisms and index -----------------------------------------------


def hom_space(m: FDModule, n: FDModule) -> list[ModuleMap]:
    """Basis of all A-linear maps ``m -> n``."""
    if m.algebra is not n.algebra:
        raise AlgebraMismatch("modules over different algebras")
    f = m.field
    a, b = m.dim, n.dim
    if a == 0 or b == 0:
        return []
    # X row-major: vec(X A_i) - vec(B_i X) = (I kron A_i^T - B_i kron I) vec(X)
    blocks = [f.reduce(np.kron(f.eye(b), ai.T) - np.kron(bi, f.eye(a)))
              for ai, bi in zip(m.action, n.action)]
    if not blocks:
        sol = f.eye(a * b)
    else:
        sol = nullspace(f, np.vstack(blocks))
    return [ModuleMap(m, n, row.reshape(b, a)) for row in sol]


def module_map_index(phi: ModuleMap, seed: int = 0) -> int | None:
    """``len(ker) - len(coker)``; None if either length is infinite."""
    ker = phi.source.submodule(phi.kernel())
    coker = phi.target.quotient(phi.image())
    lk = composition_length(ker, seed)
    lc = composition_length(coker, seed)
    if math.isinf(lk) or math.isinf(lc):
        return None
    return lk - lc


def complement(module: FDModule, sub: Subspace) -> Subspace | None:
    """A submodule C with ``module = sub (+) C``, via a splitting ``module -> sub``.

    Returns None when no A-linear retraction exists.
    """
    f = module.field
    if sub.dim == 0:
        return module.full()
    if sub.dim == module.dim:
        return Subspace.zero(f, module.dim)
    target = module.submodule(sub)
    homs = hom_space(module, target)
    if not homs:
        return None
    incl = sub.basis.T  # module.dim x sub.dim
    # sum_k c_k (phi_k incl) = I
    cols = np.stack([f.matmul(h.matrix, incl).reshape(-1) for h in homs], axis=1)
    c = solve(f, cols, f.eye(sub.dim).reshape(-1))
    if c is None:
        return None
    proj = f.reduce(sum((f.scale(ck, h.matrix) for ck, h in zip(c, homs)), f.zeros(homs[0].matrix.shape)))
    comp = Subspace.kernel(f, proj)
    if comp.dim + sub.dim != module.dim or (comp & sub).dim:
        raise CertificateError("complement is not a direct complement")
    return comp


# -- semisimple quotients ----------------------------------------------------


def semi_maximal_witness(ideal: OneSidedIdeal, seed: int = 0) -> list[OneSidedIdeal] | None:
    """Maximal left ideals intersecting to L, following the recursive choice.

    ``m_j`` is chosen maximal over L with ``L_{j-1}`` not inside it, until
    every maximal ideal over L contains ``L_{j-1}``; the list is returned iff
    the final intersection equals L, which happens iff ``A/L`` is semisimple.
    """
    if ideal.side is not LEFT:
        raise ValueError("semi_maximal_witness expects a left ideal")
    alg = ideal.algebra
    f = alg.field
    rng = np.random.default_rng(seed)
    quot = quotient_by_left_ideal(ideal)
    rad = quot.radical_submodule()
    top = quot.quotient(rad)
    x = quot.full()  # L_{j-1} / L in quotient coordinates
    maximals: list[OneSidedIdeal] = []
    while True:
        x_top = Subspace.from_rows(f, top.dim, rad.quotient_coords(x.basis)) if x.dim else Subspace.zero(f, top.dim)
        if x_top.dim == 0:
            break
        simple = minimal_submodule(top, rng, within=x_top)
        comp = complement(top, simple)
        if comp is None:
            raise CertificateError("semisimple layer without a complement")
        comp_q = _preimage(comp, rad)
        m_space = _preimage(comp_q, ideal.space)
        m = OneSidedIdeal(alg, LEFT, m_space)
        maximals.append(m)
        x = x & comp_q
    if x.dim:
        return None
    inter = alg.full_space()
    for m in maximals:
        inter = inter & m.space
    if inter != ideal.space:
        raise CertificateError("maximal ideals do not intersect to L")
    return maximals


def _preimage(sub_q: Subspace, kernel: Subspace) -> Subspace:
    """Preimage of a subspace of ``V / kernel`` (free coordinates) in ``V``."""
    lifted = kernel.lift(sub_q.basis) if sub_q.dim else kernel.field.zeros((0, kernel.ambient))
    return kernel + Subspace.from_rows(kernel.field, kernel.ambient, lifted)


def min_complement_q(ideal: OneSidedIdeal, seed: int = 0):
    """An element q outside L with ``L q`` inside L and ``L + A(1-q)`` maximal."""
    alg = ideal.algebra
    f = alg.field
    if ideal.is_full():
        raise FullIdeal("L = A has no simple quotient")
    quot = quotient_by_left_ideal(ideal)
    if not is_semisimple_module(quot):
        raise NotSemisimpleQuotient("A/L is not semisimple")
    rng = np.random.default_rng(seed)
    simple = minimal_submodule(quot, rng)
    comp = complement(quot, simple)
    if comp is None:
        raise CertificateError("semisimple module without a complement")
    one_q = ideal.space.quotient_coords(alg.unit)
    # split [1] along simple (+) comp
    basis = np.vstack([simple.basis, comp.basis]) if comp.dim else simple.basis
    coeffs = solve(f, basis.T, one_q)
    q_bar = f.matmul(coeffs[: simple.dim], simple.basis)
    q = Element(alg, ideal.space.lift(q_bar))
    _verify_q(ideal, q, seed)
    return q


def _verify_q(ideal: OneSidedIdeal, q, seed: int) -> None:
    alg = ideal.algebra
    if ideal.contains(q):
        raise CertificateError("q lies in L")
    for l in ideal.elements():
        if not ideal.contains(l * q):
            raise CertificateError("L q is not inside L")
    bigger = ideal + principal_left(alg.one - q)
    if composition_length(quotient_by_left_ideal(bigger), seed) != 1:
        raise CertificateError("L + A(1-q) is not maximal")


def verify_min_complement_q(ideal: OneSidedIdeal, q, seed: int = 0) -> bool:
    try:
        _verify_q(ideal, q, seed)
    except CertificateError:
        return False
    return True
