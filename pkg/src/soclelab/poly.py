"""Univariate polynomials over an exact field, with factorization over GF(p).

Factorization is squarefree decomposition followed by Berlekamp's algorithm.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .field import Field
from .linalg import nullspace


class PolyError(ValueError):
    pass


@dataclass(frozen=True)
class Poly:
    """Coefficients lowest degree first; no trailing zeros (zero poly is empty)."""

    field: Field
    coeffs: tuple = ()

    def __post_init__(self):
        cs = [self.field(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def x(cls, field: Field) -> "Poly":
        return cls(field, (0, 1))

    @classmethod
    def const(cls, field: Field, c) -> "Poly":
        return cls(field, (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs == (self.field.one,)

    def monic(self) -> "Poly":
        if not self:
            raise PolyError("zero polynomial has no monic part")
        inv = self.field.inv(self.lead)
        return Poly(self.field, tuple(c * inv for c in self.coeffs))

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.field != self.field:
                raise PolyError(f"field mismatch {self.field} vs {other.field}")
            return other
        return Poly.const(self.field, other)

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Poly(self.field, tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        other = self._coerce(other)
        if not self or not other:
            return Poly(self.field)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(self.field, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        result = Poly.const(self.field, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other) -> tuple["Poly", "Poly"]:
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(f), self
        inv = f.inv(other.lead)
        quot = [0] * (dq + 1)
        db = len(other.coeffs) - 1
        for k in range(dq, -1, -1):
            c = f(rem[k + db] * inv)
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = f(rem[k + j] - c * b)
        return Poly(f, tuple(quot)), Poly(f, tuple(rem[:db]))

    def __floordiv__(self, other) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Poly":
        return divmod(self, other)[1]

    def __call__(self, x):
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = self.field(acc * x + c)
        return acc

    def eval_matrix(self, m: np.ndarray) -> np.ndarray:
        """Horner evaluation at a square matrix."""
        f = self.field
        n = m.shape[0]
        acc = f.zeros((n, n))
        eye = f.eye(n)
        for c in reversed(self.coeffs):
            acc = f.reduce(f.matmul(acc, m) + f(c) * eye)
        return acc

    def derivative(self) -> "Poly":
        return Poly(self.field, tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def powmod(self, n: int, mod: "Poly") -> "Poly":
        result = Poly.const(self.field, 1) % mod
        base = self % mod
        while n:
            if n & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            n >>= 1
        return result

    def __str__(self) -> str:
        if not self:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            cs = str(c)
            if i == 0:
                terms.append(cs)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                terms.append(mono if c == 1 else f"{cs}{mono}")
        return "+".join(terms).replace("+-", "-")

    @classmethod
    def parse(cls, field: Field, text: str) -> "Poly":
        """Parse e.g. ``"x^2+3x+1"`` or ``"2*x^3 - x"``; coefficients taken in ``field``."""
        s = text.replace(" ", "").replace("**", "^")
        if not s:
            raise PolyError("empty polynomial literal")
        if s[0] not in "+-":
            s = "+" + s
        pos = 0
        out = Poly(field)
        for m in _TERM_RE.finditer(s):
            if m.start() != pos:
                break
            pos = m.end()
            sign, coef, var, exp = m.groups()
            if not coef and not var:
                raise PolyError(f"bad term at position {m.start()} in {text!r}")
            c = field.parse(coef) if coef else field.one
            if sign == "-":
                c = field(-c)
            e = 0 if not var else (int(exp) if exp else 1)
            out = out + Poly(field, (0,) * e + (c,))
        if pos != len(s):
            raise PolyError(f"cannot parse polynomial {text!r} near position {pos}")
        return out


_TERM_RE = re.compile(r"([+-])(\d+(?:/\d+)?)?\*?(x)?(?:\^(\d+))?")


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, a % b
    return a.monic() if a else a


def _pth_root(f: Poly) -> Poly:
    p = f.field.p
    return Poly(f.field, f.coeffs[::p])


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Monic squarefree, pairwise coprime ``(g, e)`` with ``prod g**e == monic(f)``."""
    f = f.monic()
    if f.degree == 0:
        return []
    p = f.field.p
    out: list[tuple[Poly, int]] = []
    df = f.derivative()
    if not df:
        return [(g, e * p) for g, e in squarefree_decomposition(_pth_root(f))]
    c = poly_gcd(f, df)
    w = f // c
    i = 1
    while w.degree > 0:
        y = poly_gcd(w, c)
        z = w // y
        if z.degree > 0:
            out.append((z.monic(), i))
        i += 1
        w = y
        c = c // y
    if c.degree > 0:
        out.extend((g, e * p) for g, e in squarefree_decomposition(_pth_root(c.monic())))
    return out


def _berlekamp(f: Poly) -> list[Poly]:
    """Irreducible factors of a monic squarefree ``f`` over GF(p)."""
    fld = f.field
    n = f.degree
    if n <= 1:
        return [f]
    p = fld.p
    xp = Poly.x(fld).powmod(p, f)
    q = fld.zeros((n, n))
    row = Poly.const(fld, 1)
    for i in range(n):
        for j, c in enumerate(row.coeffs):
            q[i, j] = c
        row = (row * xp) % f
    kernel = nullspace(fld, fld.reduce((q - fld.eye(n)).T))
    k = kernel.shape[0]
    factors = [f]
    if k == 1:
        return factors
    for v in kernel:
        vp = Poly(fld, tuple(int(c) for c in v))
        if vp.degree <= 0:
            continue
        nxt = []
        for g in factors:
            if g.degree <= 1:
                nxt.append(g)
                continue
            # g is the product of gcd(g, v - s) over s in GF(p)
            nxt.extend(h for h in (poly_gcd(g, vp - s) for s in range(p)) if h.degree > 0)
        factors = nxt
        if len(factors) == k:
            break
    return factors


def poly_factor(f: Poly) -> list[tuple[Poly, int]]:
    """Irreducible monic factors with multiplicity, sorted by (degree, coefficients)."""
    if not f.field.is_prime_field:
        raise PolyError("factorization is only supported over prime fields")
    if not f:
        raise PolyError("cannot factor the zero polynomial")
    mult: dict[tuple, int] = {}
    for g, e in squarefree_decomposition(f):
        for h in _berlekamp(g):
            h = h.monic()
            mult[h.coeffs] = mult.get(h.coeffs, 0) + e
    return sorted(((Poly(f.field, c), e) for c, e in mult.items()), key=lambda t: (t[0].degree, t[0].coeffs))


def omega(f: Poly) -> int:
    """Number of irreducible factors counted with multiplicity."""
    return sum(e for _, e in poly_factor(f))


def charpoly(field: Field, m) -> Poly:
    """Characteristic polynomial ``det(x I - m)`` via Hessenberg reduction."""
    h = [[field(x) for x in row] for row in np.asarray(m)]
    n = len(h)
    for j in range(n - 2):
        piv = next((i for i in range(j + 1, n) if h[i][j] != 0), None)
        if piv is None:
            continue
        if piv != j + 1:
            h[piv], h[j + 1] = h[j + 1], h[piv]
            for row in h:
                row[piv], row[j + 1] = row[j + 1], row[piv]
        inv = field.inv(h[j + 1][j])
        for i in range(j + 2, n):
            u = field(h[i][j] * inv)
            if not u:
                continue
            h[i] = [field(a - u * b) for a, b in zip(h[i], h[j + 1])]
            for row in h:
                row[j + 1] = field(row[j + 1] + u * row[i])
    x = Poly.x(field)
    polys = [Poly.const(field, 1)]
    for k in range(n):
        pk = (x - h[k][k]) * polys[k]
        prod = field.one
        for i in range(k - 1, -1, -1):
            prod = field(prod * h[i + 1][i])
            pk = pk - Poly.const(field, field(prod * h[i][k])) * polys[i]
        polys.append(pk)
    return polys[n]
