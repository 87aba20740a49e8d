"""The algebra ``F 1 + M_fin(F)``: scalars plus finitely supported infinite matrices.

It is semiprime with socle ``{lambda = 0}``, the socle is essential, and
``A / soc(A) = F``, so ``a = lambda + F`` is Fredholm exactly when
``lambda != 0``.  For such ``a`` all four lengths equal the nullity of
``lambda I_n + F``: coordinates beyond the block are forced to zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .field import Field
from .fredholm import FredholmReport, NotFredholm
from .ideals import CertificateError
from .linalg import nullspace, rank, rref, solve
from .modules import LengthValue


class ZeroElement(ValueError):
    pass


def _trim(field: Field, block: np.ndarray) -> np.ndarray:
    n = block.shape[0]
    while n and not np.any(block[n - 1, :n]) and not np.any(block[:n, n - 1]):
        n -= 1
    return np.ascontiguousarray(block[:n, :n])


def _pad(field: Field, block: np.ndarray, n: int) -> np.ndarray:
    out = field.zeros((n, n))
    k = block.shape[0]
    out[:k, :k] = block
    return out


@dataclass(frozen=True, eq=False)
class BarnesElement:
    field: Field
    lam: object
    block: np.ndarray

    def __post_init__(self):
        b = np.asarray(self.block)
        if b.size == 0:
            b = self.field.zeros((0, 0))
        if b.ndim != 2 or b.shape[0] != b.shape[1]:
            raise ValueError(f"block must be square, got shape {b.shape}")
        object.__setattr__(self, "lam", self.field(self.lam))
        object.__setattr__(self, "block", _trim(self.field, self.field.array(b) if b.dtype != self.field.dtype else b))

    @classmethod
    def scalar(cls, field: Field, lam) -> "BarnesElement":
        return cls(field, lam, field.zeros((0, 0)))

    @classmethod
    def unit(cls, field: Field, i: int, j: int) -> "BarnesElement":
        """Matrix unit ``E_ij`` (0-based) with scalar part 0."""
        n = max(i, j) + 1
        b = field.zeros((n, n))
        b[i, j] = field.one
        return cls(field, 0, b)

    @property
    def size(self) -> int:
        return self.block.shape[0]

    def padded(self, n: int) -> np.ndarray:
        return _pad(self.field, self.block, n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BarnesElement):
            return NotImplemented
        return (self.field == other.field and self.lam == other.lam
                and self.block.shape == other.block.shape and bool(np.all(self.block == other.block)))

    def __hash__(self) -> int:
        return hash((self.field, self.lam, tuple(map(tuple, self.block.tolist()))))

    def __add__(self, other: "BarnesElement") -> "BarnesElement":
        return b_add(self, other)

    def __sub__(self, other: "BarnesElement") -> "BarnesElement":
        return b_add(self, other.scaled(-1))

    def __mul__(self, other: "BarnesElement") -> "BarnesElement":
        return b_mul(self, other)

    def scaled(self, c) -> "BarnesElement":
        f = self.field
        return BarnesElement(f, f(c) * self.lam, f.scale(c, self.block))

    def is_zero(self) -> bool:
        return self.lam == 0 and self.size == 0

    def to_json(self) -> dict:
        f = self.field
        return {"lambda": f.fmt(self.lam), "block": [[f.fmt(x) for x in row] for row in self.block]}

    def __repr__(self) -> str:
        return f"BarnesElement({self.to_json()})"


def b_trim(a: BarnesElement) -> BarnesElement:
    return BarnesElement(a.field, a.lam, _trim(a.field, a.block))


def b_add(a: BarnesElement, b: BarnesElement) -> BarnesElement:
    f = a.field
    n = max(a.size, b.size)
    return BarnesElement(f, f(a.lam + b.lam), f.reduce(a.padded(n) + b.padded(n)))


def b_mul(a: BarnesElement, b: BarnesElement) -> BarnesElement:
    """``(l + F)(m + G) = l m + (l G + m F + F G)``."""
    f = a.field
    n = max(a.size, b.size)
    fa, gb = a.padded(n), b.padded(n)
    block = f.reduce(f.scale(a.lam, gb) + f.scale(b.lam, fa) + f.matmul(fa, gb))
    return BarnesElement(f, f(a.lam * b.lam), block)


def b_star(a: BarnesElement) -> BarnesElement:
    return BarnesElement(a.field, a.lam, np.ascontiguousarray(a.block.T))


def b_is_socle(a: BarnesElement) -> bool:
    return a.lam == 0


def b_is_fredholm(a: BarnesElement) -> bool:
    return a.lam != 0


b_is_semi_plus = b_is_fredholm
b_is_semi_minus = b_is_fredholm


def _shifted(a: BarnesElement) -> np.ndarray:
    """``lambda I_n + F`` on the block."""
    f = a.field
    return f.reduce(a.block + f.scale(a.lam, f.eye(a.size)))


def _nullity(a: BarnesElement) -> LengthValue:
    if a.lam == 0:
        return math.inf
    if a.size == 0:
        return 0
    return a.size - rank(a.field, _shifted(a))


def b_xi_l(a: BarnesElement) -> LengthValue:
    return _nullity(a)


def b_xi_r(a: BarnesElement) -> LengthValue:
    return _nullity(a)


def b_rho_l(a: BarnesElement) -> LengthValue:
    return _nullity(a)


def b_rho_r(a: BarnesElement) -> LengthValue:
    return _nullity(a)


def b_zeta_l(a: BarnesElement) -> int | None:
    x, r = b_xi_l(a), b_rho_l(a)
    return None if math.isinf(x) or math.isinf(r) else int(x - r)


def b_zeta_r(a: BarnesElement) -> int | None:
    x, r = b_xi_r(a), b_rho_r(a)
    return None if math.isinf(x) or math.isinf(r) else int(x - r)


def b_in_left_principal(a: BarnesElement, x: BarnesElement) -> bool:
    """Whether ``x`` lies in ``A a``; decided by solving ``y a = x`` (needs lambda != 0)."""
    f = a.field
    if a.lam == 0:
        raise NotFredholm("membership test implemented for lambda != 0 only")
    n = max(a.size, x.size)
    nu = f(x.lam * f.inv(a.lam))
    shifted = f.reduce(a.padded(n) + f.scale(a.lam, f.eye(n)))
    rhs = f.reduce(x.padded(n) - f.scale(nu, a.padded(n)))
    # Y (lambda I + F) = rhs, row by row: (lambda I + F)^T y_i = rhs_i
    for row in rhs:
        if solve(f, shifted.T, row) is None:
            return False
    return True


def b_fredholm_witness(a: BarnesElement) -> BarnesElement:
    """Idempotent ``p = (0, P)`` in the socle with ``A a = A(1 - p)``.

    ``P`` is an idempotent whose column space is ``ker(lambda I + F)``.
    """
    f = a.field
    if a.lam == 0:
        raise NotFredholm("lambda = 0: a lies in the socle and is not Fredholm")
    n = a.size
    if n == 0:
        return BarnesElement.scalar(f, 0)
    kern = nullspace(f, _shifted(a))  # k x n rows
    k = kern.shape[0]
    if k == 0:
        return BarnesElement.scalar(f, 0)
    # W K = I with W selecting the pivot coordinates of the RREF kernel rows
    _, piv = rref(f, kern)
    w = f.zeros((k, n))
    for i, c in enumerate(piv):
        w[i, c] = f.one
    proj = f.matmul(kern.T, w)
    p = BarnesElement(f, 0, proj)
    _verify_witness(a, p)
    return p


def _probe_set(field: Field, n: int) -> list[BarnesElement]:
    probes = [BarnesElement.scalar(field, 1)]
    probes += [BarnesElement.unit(field, i, j) for i in range(n + 1) for j in range(n + 1)]
    return probes


def _verify_witness(a: BarnesElement, p: BarnesElement) -> None:
    if p * p != p or not b_is_socle(p):
        raise CertificateError("Barnes witness is not an idempotent in the socle")
    for x in _probe_set(a.field, a.size):
        if b_in_left_principal(a, x) != (x * p).is_zero():
            raise CertificateError(f"x in A a disagrees with x p = 0 at {x!r}")


def b_essential_socle_witness(a: BarnesElement) -> BarnesElement:
    """A diagonal matrix unit E with ``a E != 0``."""
    f = a.field
    if a.is_zero():
        raise ZeroElement("a = 0 has no socle witness")
    if a.lam != 0:
        j = a.size
    else:
        j = next(j for j in range(a.size) if np.any(a.block[:, j]))
    e = BarnesElement.unit(f, j, j)
    if (a * e).is_zero():
        raise CertificateError("socle witness annihilated")
    return e


def b_random(field: Field, rng: np.random.Generator, max_size: int = 8, lam_zero: bool | None = None,
             rank_deficient: bool = True) -> BarnesElement:
    """Random element; with ``rank_deficient`` the block is often built to give
    ``lambda I + F`` a nontrivial kernel."""
    n = int(rng.integers(0, max_size + 1))
    if lam_zero:
        lam = field.zero
    else:
        lam = _random_scalar(field, rng, nonzero=lam_zero is False)
    block = field.random(rng, (n, n))
    if n and rank_deficient and rng.random() < 0.7 and lam != 0:
        # force lambda I + F = U V with inner dimension r < n
        r = int(rng.integers(0, n))
        u = field.random(rng, (n, r))
        v = field.random(rng, (r, n))
        block = field.reduce(field.matmul(u, v) - field.scale(lam, field.eye(n)))
    return BarnesElement(field, lam, block)


def _random_scalar(field: Field, rng: np.random.Generator, nonzero: bool):
    lo, hi = (0, field.p) if field.p else (-4, 5)
    while True:
        c = field(int(rng.integers(lo, hi)))
        if c or not nonzero:
            return c


def barnes_report(a: BarnesElement) -> FredholmReport:
    fred = b_is_fredholm(a)
    rep = FredholmReport(
        subject=repr(a), is_fredholm=fred, is_semi_plus=fred, is_semi_minus=fred,
        is_weak_plus=not math.isinf(b_xi_l(a)), is_weak_minus=not math.isinf(b_xi_r(a)),
        xi_l=b_xi_l(a), xi_r=b_xi_r(a), rho_l=b_rho_l(a), rho_r=b_rho_r(a),
    )
    if fred:
        rep.witnesses["p"] = b_fredholm_witness(a).to_json()
    return rep
