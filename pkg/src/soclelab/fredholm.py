"""Fredholm, semi- and weak-Fredholm predicates and the quantities xi, rho,
zeta and delta for finite-dimensional algebras.

Every predicate with a constructive characterization hands back its witness,
and witnesses are re-verified before they leave this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from .algebra import AlgebraSC, Element, quotient_algebra, MissingInvolution
from .decompose import order_decomposition
from .ideals import (LEFT, OneSidedIdeal, CertificateError, idempotent_generator, lan,
                     lan_of, principal_left, principal_right, ran, ran_of, require_semiprime,
                     ring_socle)
from .linalg import Subspace, solve
from .modules import (LengthValue, composition_length, ideal_as_module, quotient_by_left_ideal)


class NotFredholm(ValueError):
    pass


# -- invertibility modulo the socle ------------------------------------------


def socle_quotient(alg: AlgebraSC) -> AlgebraSC:
    """``A / soc(A)``; the zero algebra whenever A is finite-dimensional semiprime."""
    return quotient_algebra(alg, ring_socle(alg))


def _class_in_quotient(a: Element):
    q = socle_quotient(a.algebra)
    return q, q.field.matmul(q.projection, a.coords)


def is_semi_plus(a: Element) -> bool:
    """``[a]`` left invertible in ``A / soc(A)``."""
    q, x = _class_in_quotient(a)
    if q.dim == 0:
        return True
    # y [a] = 1  <=>  R_[a] y = 1
    return solve(q.field, q.right_matrix(x), q.unit) is not None


def is_semi_minus(a: Element) -> bool:
    """``[a]`` right invertible in ``A / soc(A)``."""
    q, x = _class_in_quotient(a)
    if q.dim == 0:
        return True
    return solve(q.field, q.left_matrix(x), q.unit) is not None


def is_fredholm(a: Element) -> bool:
    return is_semi_plus(a) and is_semi_minus(a)


# -- lengths -----------------------------------------------------------------


def xi(ideal: OneSidedIdeal, seed: int = 0) -> LengthValue:
    """``len(A / L)`` (as a right module for right ideals)."""
    return composition_length(quotient_by_left_ideal(ideal), seed)


def rho(ideal: OneSidedIdeal, seed: int = 0) -> LengthValue:
    """``len(Ran(L))`` for a left ideal, ``len(Lan(R))`` for a right ideal."""
    ann = ran_of(ideal) if ideal.side is LEFT else lan_of(ideal)
    return composition_length(ideal_as_module(ann), seed)


def xi_l(a: Element, seed: int = 0) -> LengthValue:
    return xi(principal_left(a), seed)


def xi_r(a: Element, seed: int = 0) -> LengthValue:
    return xi(principal_right(a), seed)


def rho_l(a: Element, seed: int = 0) -> LengthValue:
    return composition_length(ideal_as_module(ran([a])), seed)


def rho_r(a: Element, seed: int = 0) -> LengthValue:
    return composition_length(ideal_as_module(lan([a])), seed)


def _diff(x: LengthValue, y: LengthValue) -> int | None:
    if math.isinf(x) or math.isinf(y):
        return None
    return int(x - y)


def zeta_l(a: Element, seed: int = 0) -> int | None:
    return _diff(xi_l(a, seed), rho_l(a, seed))


def zeta_r(a: Element, seed: int = 0) -> int | None:
    return _diff(xi_r(a, seed), rho_r(a, seed))


def is_weak_plus(a: Element, seed: int = 0) -> bool:
    return not math.isinf(xi_l(a, seed))


def is_weak_minus(a: Element, seed: int = 0) -> bool:
    return not math.isinf(xi_r(a, seed))


# -- Fredholm left ideals ----------------------------------------------------


@dataclass
class FredholmIdealResult:
    fredholm: bool
    witness: Element | None = None  # p with L = A(1 - p)
    failed: str = ""

    def __bool__(self) -> bool:
        return self.fredholm


def _in_socle(p: Element) -> bool:
    return ring_socle(p.algebra).contains(p.coords)


def verify_fredholm_witness(ideal: OneSidedIdeal, p: Element) -> bool:
    """``p`` idempotent in the socle with ``L = A(1 - p)``."""
    alg = ideal.algebra
    return p * p == p and _in_socle(p) and principal_left(alg.one - p).space == ideal.space


def is_fredholm_left_ideal(ideal: OneSidedIdeal) -> FredholmIdealResult:
    """Decide Fredholmness through ``L = Lan(Ran(L))`` and an idempotent generator of ``Ran(L)``."""
    if ideal.side is not LEFT:
        raise ValueError("expected a left ideal")
    alg = ideal.algebra
    require_semiprime(alg)
    r = ran_of(ideal)
    p = idempotent_generator(r)
    if p is None:
        return FredholmIdealResult(False, failed="Ran(L) is not generated by an idempotent")
    if not _in_socle(p):
        return FredholmIdealResult(False, failed="idempotent generator of Ran(L) is not in the socle")
    if lan_of(r).space != ideal.space:
        return FredholmIdealResult(False, failed="L != Lan(Ran(L))")
    if not verify_fredholm_witness(ideal, p):
        raise CertificateError("Fredholm witness failed re-verification")
    return FredholmIdealResult(True, witness=p)


def contains_fredholm_element(ideal: OneSidedIdeal, seed: int = 0, samples: int = 16) -> bool:
    """Flag (i): some element of L is Fredholm.

    Exact when ``A / soc(A)`` is zero (always, for finite-dimensional
    semiprime algebras); otherwise a seeded search over basis vectors and
    random elements, which can only err towards False.
    """
    alg = ideal.algebra
    require_semiprime(alg)
    if socle_quotient(alg).dim == 0:
        return True
    rng = np.random.default_rng(seed)
    cands = ideal.elements() + [ideal.random_element(rng) for _ in range(samples)]
    return any(is_fredholm(c) for c in cands)


def intersect_fredholm(l1: OneSidedIdeal, l2: OneSidedIdeal) -> tuple[OneSidedIdeal, Element]:
    """``L1 & L2`` together with r such that ``L1 & L2 = A(1 - r)``."""
    w1, w2 = is_fredholm_left_ideal(l1), is_fredholm_left_ideal(l2)
    if not w1 or not w2:
        raise NotFredholm("both ideals must be Fredholm")
    p, q = w1.witness, w2.witness
    s = principal_right(p) + principal_right(q)
    r = idempotent_generator(s)
    if r is None:
        raise CertificateError("p A + q A has no idempotent generator")
    inter = l1 & l2
    if not verify_fredholm_witness(inter, r):
        raise CertificateError("A(1 - r) != L1 & L2")
    return inter, r


def maximal_intersection_form(ideal: OneSidedIdeal, seed: int = 0) -> list[Element] | None:
    """Idempotents ``p_j`` with every ``A p_j`` maximal and ``L = & A p_j``, or None.

    Built from a decomposition ``Ran(L) = sum q_j A`` into minimal right ideals,
    ``p_j = 1 - q_j``.
    """
    alg = ideal.algebra
    require_semiprime(alg)
    r = ran_of(ideal)
    qs = order_decomposition(r, seed)
    ps = [alg.one - q for q in qs]
    inter = alg.full_space()
    for p in ps:
        ap = principal_left(p)
        if composition_length(quotient_by_left_ideal(ap), seed) != 1:
            return None
        inter = inter & ap.space
    if inter != ideal.space:
        return None
    return ps


def verify_maximal_intersection(ideal: OneSidedIdeal, ps: list[Element], seed: int = 0) -> bool:
    alg = ideal.algebra
    inter = alg.full_space()
    for p in ps:
        if p * p != p:
            return False
        ap = principal_left(p)
        if composition_length(quotient_by_left_ideal(ap), seed) != 1:
            return False
        inter = inter & ap.space
    return inter == ideal.space


@dataclass
class TheoremFlags:
    contains_fredholm: bool
    double_annihilator: bool
    maximal_intersection: bool

    def agree(self) -> bool:
        return self.contains_fredholm == self.double_annihilator == self.maximal_intersection


def fredholm_theorem_flags(ideal: OneSidedIdeal, seed: int = 0) -> TheoremFlags:
    """The three equivalent conditions, each computed on its own route."""
    f1 = contains_fredholm_element(ideal, seed)
    rho_finite = not math.isinf(rho(ideal, seed))
    f2 = lan_of(ran_of(ideal)).space == ideal.space and rho_finite
    ps = maximal_intersection_form(ideal, seed)
    f3 = ps is not None and verify_maximal_intersection(ideal, ps, seed)
    return TheoremFlags(f1, f2, f3)


# -- delta -------------------------------------------------------------------


def star_space(alg: AlgebraSC, space: Subspace) -> Subspace:
    if alg.involution is None:
        raise MissingInvolution(f"{alg!r} has no involution")
    return space.map(alg.involution)


def delta(ideal: OneSidedIdeal) -> int:
    """``codim(L + L*)``."""
    alg = ideal.algebra
    return (ideal.space + star_space(alg, ideal.space)).codim


# -- reports -----------------------------------------------------------------


def _fmt_len(x: LengthValue) -> int | str:
    return "inf" if math.isinf(x) else int(x)


@dataclass
class FredholmReport:
    subject: str
    is_fredholm: bool
    is_semi_plus: bool
    is_semi_minus: bool
    is_weak_plus: bool
    is_weak_minus: bool
    xi_l: LengthValue
    xi_r: LengthValue
    rho_l: LengthValue
    rho_r: LengthValue
    witnesses: dict = dc_field(default_factory=dict)

    @property
    def zeta_l(self) -> int | None:
        return _diff(self.xi_l, self.rho_l)

    @property
    def zeta_r(self) -> int | None:
        return _diff(self.xi_r, self.rho_r)

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "flags": {
                "is_fredholm": self.is_fredholm,
                "is_semi_plus": self.is_semi_plus,
                "is_semi_minus": self.is_semi_minus,
                "is_weak_plus": self.is_weak_plus,
                "is_weak_minus": self.is_weak_minus,
            },
            "quantities": {
                "xi_l": _fmt_len(self.xi_l),
                "xi_r": _fmt_len(self.xi_r),
                "rho_l": _fmt_len(self.rho_l),
                "rho_r": _fmt_len(self.rho_r),
                "zeta_l": self.zeta_l,
                "zeta_r": self.zeta_r,
            },
            "witnesses": self.witnesses,
        }


def fredholm_report(a: Element, seed: int = 0) -> FredholmReport:
    f = a.algebra.field
    xl, xr = xi_l(a, seed), xi_r(a, seed)
    rep = FredholmReport(
        subject=repr(a),
        is_fredholm=is_fredholm(a),
        is_semi_plus=is_semi_plus(a),
        is_semi_minus=is_semi_minus(a),
        is_weak_plus=not math.isinf(xl),
        is_weak_minus=not math.isinf(xr),
        xi_l=xl, xi_r=xr, rho_l=rho_l(a, seed), rho_r=rho_r(a, seed),
    )
    res = is_fredholm_left_ideal(principal_left(a))
    if res:
        rep.witnesses["p"] = [f.fmt(c) for c in res.witness.coords]
    return rep
