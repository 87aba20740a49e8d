"""Exact base fields: the rationals and prime fields GF(p).

Scalars are plain Python values in canonical form: ``Fraction`` for the
rationals and an ``int`` in ``range(p)`` for GF(p).  Vectors and matrices are
numpy arrays, ``int64`` for small primes and ``object`` otherwise.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

# int64 matmul stays exact while n * p**2 < 2**63
_SMALL_PRIME = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class FieldError(ValueError):
    pass


@dataclass(frozen=True)
class Field:
    """An exact field; ``p == 0`` means the rationals."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0 and not is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def is_prime_field(self) -> bool:
        return self.p != 0

    @property
    def dtype(self):
        if self.p and self.p < _SMALL_PRIME:
            return np.int64
        return object

    def __str__(self) -> str:
        return f"GF({self.p})" if self.p else "QQ"

    def __repr__(self) -> str:
        return str(self)

    # -- scalars ---------------------------------------------------------

    def __call__(self, x):
        if self.p:
            if isinstance(x, Fraction):
                return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
            return int(x) % self.p
        return Fraction(x)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p:
            return pow(int(x), -1, self.p)
        return 1 / Fraction(x)

    def parse(self, s) -> object:
        """Parse a scalar string such as ``"3/2"`` or ``"-5"``."""
        if isinstance(s, bool):
            raise FieldError(f"not a scalar: {s!r}")
        if isinstance(s, int):
            return self(s)
        if not isinstance(s, str):
            raise FieldError(f"scalar must be a string, got {type(s).__name__}")
        try:
            return self(Fraction(s.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"bad scalar {s!r}") from exc

    def fmt(self, x) -> str:
        return str(self(x))

    # -- arrays ----------------------------------------------------------

    def array(self, data) -> np.ndarray:
        a = np.array(data, dtype=object)
        if a.size == 0:
            return np.zeros(a.shape, dtype=self.dtype)
        out = np.empty(a.shape, dtype=object)
        flat_in, flat_out = a.reshape(-1), out.reshape(-1)
        for i, x in enumerate(flat_in):
            flat_out[i] = self(x)
        return out.astype(self.dtype) if self.dtype is not object else out

    def zeros(self, shape) -> np.ndarray:
        if self.dtype is object:
            out = np.empty(shape, dtype=object)
            out.fill(self.zero)
            return out
        return np.zeros(shape, dtype=np.int64)

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = self.one
        return out

    def reduce(self, a: np.ndarray) -> np.ndarray:
        """Bring an array computed with raw integer ops back to canonical form."""
        if self.p:
            return a % self.p
        return a

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.reduce(a @ b)

    def scale(self, c, a: np.ndarray) -> np.ndarray:
        return self.reduce(self(c) * a)

    def random(self, rng: np.random.Generator, shape, spread: int = 3) -> np.ndarray:
        """Uniform over GF(p); small integers in [-spread, spread] over QQ."""
        if self.p:
            return rng.integers(0, self.p, size=shape).astype(np.int64)
        vals = rng.integers(-spread, spread + 1, size=shape)
        return self.array(vals.tolist() if vals.ndim else int(vals))

    def is_zero(self, a: np.ndarray) -> bool:
        return not np.any(a != 0)


QQ = Field(0)


def GF(p: int) -> Field:
    if p == 0:
        raise FieldError("use QQ for characteristic 0")
    return Field(p)


_FIELD_RE = re.compile(r"^\s*(?:GF|F)\s*\(?\s*(\d+)\s*\)?\s*$", re.IGNORECASE)


def parse_field(desc) -> Field:
    """Accept ``"QQ"``, ``"Q"``, ``"GF(17)"``, ``"F17"`` or ``{"prime": 17}``."""
    if isinstance(desc, dict):
        if "prime" in desc:
            return GF(int(desc["prime"]))
        if desc.get("kind") in ("rationals", "QQ"):
            return QQ
        raise FieldError(f"bad field descriptor {desc!r}")
    if not isinstance(desc, str):
        raise FieldError(f"bad field descriptor {desc!r}")
    if desc.strip().upper() in ("Q", "QQ", "RATIONALS"):
        return QQ
    m = _FIELD_RE.match(desc)
    if not m:
        raise FieldError(f"bad field descriptor {desc!r}")
    return GF(int(m.group(1)))
