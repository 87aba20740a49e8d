"""Reference computations used as test oracles.

None of these touch soclelab's elimination, factorization or chop code:
linear algebra goes through sympy's DomainMatrix, and lengths of modules over
semisimple algebras come from the Wedderburn block structure, found with
central idempotents of a generic central element.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import numpy as np
import sympy
from sympy.polys.domains import GF as SGF, QQ as SQQ
from sympy.polys.matrices import DomainMatrix

from soclelab.algebra import AlgebraSC


def _domain(field):
    return SGF(field.p) if field.p else SQQ


def _conv(field, x):
    if field.p:
        return SGF(field.p)(int(x) % field.p)
    x = Fraction(x)
    return SQQ(x.numerator, x.denominator)


def dm(field, m) -> DomainMatrix:
    m = np.asarray(m, dtype=object)
    if m.ndim == 1:
        m = m.reshape(1, -1)
    rows = [[_conv(field, x) for x in row] for row in m]
    return DomainMatrix(rows, m.shape, _domain(field))


def rank(field, m) -> int:
    m = np.asarray(m)
    if m.size == 0:
        return 0
    return dm(field, m).rank()


def nullity(field, m) -> int:
    m = np.asarray(m)
    return m.shape[1] - rank(field, m)


def rref_rows(field, m) -> list[list]:
    """Nonzero rows of the reduced echelon form, as python scalars."""
    m = np.asarray(m)
    if m.size == 0:
        return []
    r, _ = dm(field, m).rref()
    out = []
    for row in r.to_Matrix().tolist():
        vals = [int(x) % field.p if field.p else Fraction(int(sympy.numer(x)), int(sympy.denom(x))) for x in row]
        if any(vals):
            out.append(vals)
    return out


def omega_sympy(coeffs_low_first, p: int) -> int:
    """Number of irreducible factors with multiplicity, via sympy."""
    x = sympy.Symbol("x")
    f = sum(int(c) * x**i for i, c in enumerate(coeffs_low_first))
    _, factors = sympy.factor_list(f, modulus=p)
    return int(sum(e for _, e in factors))


# -- Wedderburn blocks of a semisimple algebra over GF(p) ----------------------


def _center_basis(alg: AlgebraSC) -> np.ndarray:
    f = alg.field
    # z central iff L_z - R_z = 0; linear in z via the tensors
    lt = alg.left_tensor.astype(object)   # lt[i] = L_{b_i}
    rt = alg.right_tensor.astype(object)
    cols = [(lt[i] - rt[i]).reshape(-1) for i in range(alg.dim)]
    system = np.stack(cols, axis=1)
    ns = dm(f, system).nullspace().to_Matrix()
    return np.array([[int(x) % f.p for x in row] for row in ns.tolist()], dtype=object).reshape(-1, alg.dim)


def _mul(alg, a, b):
    p = alg.field.p
    t = alg.table.astype(object)
    return np.array([int(v) % p for v in np.einsum("i,j,ijk->k", a, b, t)], dtype=object)


def _poly_eval(alg, coeffs, z):
    p = alg.field.p
    acc = np.zeros(alg.dim, dtype=object)
    power = np.array([int(c) for c in alg.unit], dtype=object)
    for c in coeffs:
        acc = (acc + int(c) * power) % p
        power = _mul(alg, power, z)
    return acc


@lru_cache(maxsize=None)
def central_idempotents(alg: AlgebraSC, seed: int = 0) -> list[tuple[np.ndarray, int]]:
    """Primitive central idempotents with the degree of each block's center."""
    p = alg.field.p
    zb = _center_basis(alg)
    k = zb.shape[0]
    rng = np.random.default_rng(seed)
    x = sympy.Symbol("x")
    for _ in range(200):
        c = rng.integers(0, p, k)
        z = np.array([int(v) % p for v in c @ zb], dtype=object)
        # minimal polynomial of z from powers inside Z
        powers = [np.array([int(u) for u in alg.unit], dtype=object)]
        while True:
            nxt = _mul(alg, powers[-1], z)
            mat = np.stack(powers, axis=1)
            aug = np.stack(powers + [nxt], axis=1)
            if rank(alg.field, aug) == rank(alg.field, mat):
                sol = dm(alg.field, mat).lu_solve(dm(alg.field, nxt.reshape(-1, 1)))
                tail = [int(v) % p for v in sol.to_Matrix()]
                break
            powers.append(nxt)
        mp = sympy.Poly([1] + [(-t) % p for t in reversed(tail)], x, modulus=p)
        facs = [g for g, _ in mp.factor_list()[1]]
        if sum(g.degree() for g in facs) != k:
            continue  # z does not generate Z
        out = []
        for g in facs:
            rest = sympy.Poly(1, x, modulus=p)
            for h in facs:
                if h != g:
                    rest = rest * h
            # u = rest * (rest^-1 mod g)  is 1 mod g and 0 mod the others
            inv = sympy.invert(rest.as_expr(), g.as_expr(), modulus=p)
            u = sympy.Poly(rest.as_expr() * inv, x, modulus=p).rem(mp)
            coeffs = [int(v) % p for v in reversed(u.all_coeffs())]
            out.append((_poly_eval(alg, coeffs, z), g.degree()))
        return out
    raise RuntimeError("no generic central element found")


def wedderburn_length(alg: AlgebraSC, basis) -> int:
    """Composition length of the left ideal spanned by ``basis`` (rows)."""
    f = alg.field
    basis = np.asarray(basis, dtype=object).reshape(-1, alg.dim)
    total = 0
    for e, kdeg in central_idempotents(alg):
        block_dim = rank(f, np.stack([_mul(alg, e, np.eye(alg.dim, dtype=object)[i]) for i in range(alg.dim)]))
        n = int(round((block_dim // kdeg) ** 0.5))
        assert kdeg * n * n == block_dim
        if basis.shape[0] == 0:
            continue
        part = np.stack([_mul(alg, e, row) for row in basis])
        total += rank(f, part) // (kdeg * n)
    return total
