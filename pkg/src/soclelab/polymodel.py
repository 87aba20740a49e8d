"""The ring F[x] over a prime field.

F[x] is a domain with zero socle: every nonzero ideal (g) strictly contains
(g x), so there are no minimal ideals.  Hence ``A / soc(A) = A`` and f is
Fredholm only when it is a nonzero constant.  A composition series of
``F[x] / (f)`` refines the factorization of f, so ``xi(f) = Omega(f)``, the
number of irreducible factors with multiplicity; annihilators of nonzero f
vanish, so ``rho(f) = 0``.  Note ``xi`` counts factors, not ``dim F[x]/(f) =
deg f``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .field import Field
from .fredholm import FredholmReport
from .modules import LengthValue
from .poly import Poly, omega, poly_factor


@dataclass(frozen=True)
class PolyElement:
    f: Poly

    @classmethod
    def parse(cls, field: Field, text: str) -> "PolyElement":
        return cls(Poly.parse(field, text))

    def __mul__(self, other: "PolyElement") -> "PolyElement":
        return PolyElement(self.f * other.f)

    def __pow__(self, n: int) -> "PolyElement":
        return PolyElement(self.f ** n)

    def __str__(self) -> str:
        return str(self.f)


def _poly(f) -> Poly:
    return f.f if isinstance(f, PolyElement) else f


def p_xi(f) -> LengthValue:
    f = _poly(f)
    if not f:
        return math.inf
    return omega(f)


def p_rho(f) -> LengthValue:
    f = _poly(f)
    return math.inf if not f else 0


def p_zeta(f) -> int | None:
    x, r = p_xi(f), p_rho(f)
    if math.isinf(x) or math.isinf(r):
        return None
    return int(x - r)


def p_is_fredholm(f) -> bool:
    f = _poly(f)
    return f.degree == 0


def p_is_weak_fredholm(f) -> bool:
    return not math.isinf(p_xi(f))


def p_verify_root_divisibility(s, n: int) -> bool:
    """For ``a = s**n``: ``n`` divides ``zeta_l(a) + zeta_r(a)``."""
    s = _poly(s)
    if not s or n < 1:
        raise ValueError("need s != 0 and n >= 1")
    z = p_zeta(s ** n)
    return (z + z) % n == 0


def p_random(field: Field, rng: np.random.Generator, max_degree: int = 12, nonzero: bool = True) -> Poly:
    while True:
        d = int(rng.integers(0, max_degree + 1))
        f = Poly(field, tuple(int(c) for c in rng.integers(0, field.p, d + 1)))
        if f or not nonzero:
            return f


def poly_report(f) -> FredholmReport:
    f = _poly(f)
    xi, rho = p_xi(f), p_rho(f)
    fred = p_is_fredholm(f)
    rep = FredholmReport(subject=str(f), is_fredholm=fred, is_semi_plus=fred, is_semi_minus=fred,
                         is_weak_plus=not math.isinf(xi), is_weak_minus=not math.isinf(xi),
                         xi_l=xi, xi_r=xi, rho_l=rho, rho_r=rho)
    if f:
        rep.witnesses["factorization"] = [[str(g), e] for g, e in poly_factor(f)]
    return rep
