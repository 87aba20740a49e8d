"""Invariant suites run over generated algebra families.

Each suite is a plan of ``(family, count)`` pairs and a case function
``case(family, rng, seed) -> (status, input, observed)``.  Every case gets
its own seed derived from the master seed, the suite id and the case index,
so reports are identical whatever the thread count.  A case can be replayed
from ``(suite, family, case_seed)`` alone, see :func:`replay_case`.
"""

from __future__ import annotations

import json
import math
import os
import zlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Callable

import numpy as np

from . import algebra as alg_mod
from .algebra import AlgebraSC, Element
from .barnes import (BarnesElement, b_essential_socle_witness, b_fredholm_witness, b_is_fredholm, b_random,
                     b_rho_l, b_rho_r, b_star, b_xi_l, b_xi_r, b_zeta_l, b_zeta_r)
from .decompose import minimal_left_ideal_in, order
from .field import Field, parse_field
from .fredholm import (delta, fredholm_theorem_flags, intersect_fredholm, is_fredholm_left_ideal,
                       is_semi_minus, is_semi_plus, rho, xi, xi_l, zeta_l, zeta_r)
from .ideals import (LEFT, RIGHT, CertificateError, NotSemiprime, OneSidedIdeal, from_left_of_opposite,
                     full_ideal, principal_left, zero_ideal)
from .linalg import nullspace
from .modules import (ChopInconclusive, FDModule, ModuleMap, NotSemisimpleQuotient, composition_length,
                      hom_space, ideal_as_module, is_semisimple_module, min_complement_q, module_map_index,
                      quotient_by_left_ideal, regular_module, semi_maximal_witness, verify_min_complement_q)
from .poly import omega
from .polymodel import p_is_fredholm, p_random, p_xi, p_zeta, p_verify_root_divisibility

PASS, VIOLATION, SKIP = "pass", "violation", "skip"


# -- families ----------------------------------------------------------------

MATRIX = ("M1", "M2", "M3")
PRODUCTS = ("M1xM1", "M1xM2", "M1xM1xM2", "M2xM2", "M1xM3", "M2xM3")
GROUPS = ("C2", "C3", "C4", "C2xC2", "C5", "C6", "S3", "C7", "C8", "C4xC2", "C2xC2xC2", "D4", "Q8")
TRIANGULAR = ("T2", "T3")


def family_keys(kind: str, names, fields) -> list[str]:
    return [f"{kind}:{n}:{f}" for f in fields for n in names]


@lru_cache(maxsize=None)
def build_family(key: str) -> AlgebraSC:
    """Algebra for a key like ``matrix:M2:GF(17)``, ``group:S3:GF(19)``, ``triangular:T2:GF(17)``."""
    kind, name, fdesc = key.split(":")
    f = parse_field(fdesc)
    if kind in ("matrix", "product"):
        sizes = [int(part[1:]) for part in name.split("x")]
        a = alg_mod.matrix_algebra(sizes[0], f)
        for n in sizes[1:]:
            a = alg_mod.direct_product(a, alg_mod.matrix_algebra(n, f))
    elif kind == "group":
        a = alg_mod.group_algebra(alg_mod.GROUPS[name](), f)
    elif kind == "triangular":
        a = alg_mod.upper_triangular_algebra(int(name[1:]), f)
    else:
        raise ValueError(f"unknown family kind {kind!r}")
    a.name = f"{name}({f})"
    return a


def _is_chop_field(f: Field) -> bool:
    return f.is_prime_field


def random_left_ideal(alg: AlgebraSC, rng: np.random.Generator) -> OneSidedIdeal:
    """Zero, full, sums of random minimal left ideals, or principal ideals inside them."""
    r = rng.random()
    if r < 0.06:
        return zero_ideal(alg)
    if r < 0.12:
        return full_ideal(alg)
    if _is_chop_field(alg.field) and r < 0.8:
        full = full_ideal(alg)
        ideal = zero_ideal(alg)
        for _ in range(int(rng.integers(1, 4))):
            ideal = ideal + minimal_left_ideal_in(full, rng)
        if r < 0.6 or ideal.dim == 0:
            return ideal
        return principal_left(ideal.random_element(rng))
    x = alg.random_element(rng) * alg.basis_element(int(rng.integers(alg.dim)))
    if rng.random() < 0.5:
        x = x + alg.random_element(rng) * alg.basis_element(int(rng.integers(alg.dim)))
    return principal_left(x)


def random_ideal(alg: AlgebraSC, rng: np.random.Generator, side=None) -> OneSidedIdeal:
    if side is None:
        side = LEFT if rng.random() < 0.5 else RIGHT
    if side is LEFT:
        return random_left_ideal(alg, rng)
    return from_left_of_opposite(random_left_ideal(alg.opposite, rng))


def _vec(f: Field, v) -> list[str]:
    return [f.fmt(c) for c in v]


def dump_ideal(key: str, ideal: OneSidedIdeal) -> dict:
    f = ideal.algebra.field
    return {"algebra": key, "side": ideal.side.name.lower(),
            "basis": [_vec(f, row) for row in ideal.space.basis]}


def dump_element(a) -> object:
    if isinstance(a, Element):
        return _vec(a.algebra.field, a.coords)
    if isinstance(a, BarnesElement):
        return a.to_json()
    return str(a)


def _len(x) -> int | str:
    return "inf" if isinstance(x, float) and math.isinf(x) else int(x)


# -- case functions ----------------------------------------------------------
# Each returns (status, input, observed); status is PASS or VIOLATION.


def _ok(cond: bool) -> str:
    return PASS if cond else VIOLATION


def case_order_length(key, rng, seed):
    alg = build_family(key)
    ideal = random_ideal(alg, rng)
    o = order(ideal, seed)
    n = composition_length(ideal_as_module(ideal), seed)
    return _ok(o == n), dump_ideal(key, ideal), {"order": o, "length": n}


def case_fred_idempotent(key, rng, seed):
    alg = build_family(key)
    ideal = random_ideal(alg, rng)
    lid = ideal.as_left()
    res = is_fredholm_left_ideal(lid)
    obs = {"fredholm": res.fredholm, "failed": res.failed}
    if not res:
        # semisimple: every left ideal is Fredholm
        return VIOLATION, dump_ideal(key, ideal), obs
    p = res.witness
    one = lid.algebra.one
    ok = p * p == p and principal_left(one - p).space == lid.space
    obs["p"] = dump_element(p)
    return _ok(ok), dump_ideal(key, ideal), obs


def case_fred_len_findim(key, rng, seed):
    alg = build_family(key)
    ideal = random_ideal(alg, rng)
    res = is_fredholm_left_ideal(ideal.as_left())
    x, r = xi(ideal, seed), rho(ideal, seed)
    ok = (not res) or x == r
    return _ok(ok), dump_ideal(key, ideal), {"fredholm": res.fredholm, "xi": x, "rho": r}


def _barnes_field(key: str) -> Field:
    return parse_field(key.split(":")[1])


def _nullity(a: BarnesElement) -> int:
    f = a.field
    if a.size == 0:
        return 0
    shifted = f.reduce(a.block + f.scale(a.lam, f.eye(a.size)))
    return nullspace(f, shifted).shape[0]


def case_fred_len_barnes(key, rng, seed):
    a = b_random(_barnes_field(key), rng, lam_zero=False)
    k = _nullity(a)
    vals = [b_xi_l(a), b_xi_r(a), b_rho_l(a), b_rho_r(a)]
    p = b_fredholm_witness(a)
    ok = all(v == k for v in vals) and b_zeta_l(a) == 0 and b_zeta_r(a) == 0 and (p * p) == p
    return _ok(ok), {"element": a.to_json()}, {"nullity": k, "xi_l, xi_r, rho_l, rho_r": [_len(v) for v in vals]}


def case_fred_th_equiv(key, rng, seed):
    alg = build_family(key)
    ideal = random_left_ideal(alg, rng)
    flags = fredholm_theorem_flags(ideal, seed)
    obs = {"i": flags.contains_fredholm, "ii": flags.double_annihilator, "iii": flags.maximal_intersection}
    return _ok(flags.agree()), dump_ideal(key, ideal), obs


def case_inter_fred(key, rng, seed):
    alg = build_family(key)
    l1, l2 = random_left_ideal(alg, rng), random_left_ideal(alg, rng)
    inter, r = intersect_fredholm(l1, l2)
    ok = r * r == r and principal_left(alg.one - r).space == (l1.space & l2.space)
    inp = {"L1": dump_ideal(key, l1), "L2": dump_ideal(key, l2)}
    return _ok(ok), inp, {"r": dump_element(r), "dim_intersection": inter.dim}


def case_semisimple_equiv(key, rng, seed):
    alg = build_family(key)
    ideal = random_left_ideal(alg, rng)
    ss = is_semisimple_module(quotient_by_left_ideal(ideal))
    ms = semi_maximal_witness(ideal, seed)
    obs = {"quotient_semisimple": ss, "witness": None if ms is None else len(ms)}
    if (ms is not None) != ss:
        return VIOLATION, dump_ideal(key, ideal), obs
    if ms is None:
        return PASS, dump_ideal(key, ideal), obs
    inter = alg.full_space()
    for m in ms:
        inter = inter & m.space
        if xi(m, seed) != 1:
            obs["non_maximal"] = dump_ideal(key, m)
            return VIOLATION, dump_ideal(key, ideal), obs
    x = xi(ideal, seed)
    obs["xi"] = x
    return _ok(inter == ideal.space and len(ms) <= x), dump_ideal(key, ideal), obs


def case_semi_min_q(key, rng, seed):
    alg = build_family(key)
    ideal = random_left_ideal(alg, rng)
    while ideal.is_full():
        ideal = random_left_ideal(alg, rng)
    ss = is_semisimple_module(quotient_by_left_ideal(ideal))
    try:
        q = min_complement_q(ideal, seed)
    except NotSemisimpleQuotient:
        return _ok(not ss), dump_ideal(key, ideal), {"quotient_semisimple": ss, "q": None}
    ok = ss and verify_min_complement_q(ideal, q, seed)
    return _ok(ok), dump_ideal(key, ideal), {"quotient_semisimple": ss, "q": dump_element(q)}


def case_ess_socle_barnes(key, rng, seed):
    f = _barnes_field(key)
    a = b_random(f, rng)
    while a.is_zero():
        a = b_random(f, rng)
    e = b_essential_socle_witness(a)
    # the mirrored statement through the involution: soc(A) a != 0
    e2 = b_essential_socle_witness(b_star(a))
    ok = not (a * e).is_zero() and not (b_star(e2) * a).is_zero()
    return _ok(ok), {"element": a.to_json()}, {"E": e.to_json(), "E_star_side": b_star(e2).to_json()}


def case_rho_le_xi_barnes(key, rng, seed):
    a = b_random(_barnes_field(key), rng, lam_zero=False)
    x, r = b_xi_l(a), b_rho_l(a)
    return _ok(r <= x < math.inf and r == x), {"element": a.to_json()}, {"xi": _len(x), "rho": _len(r)}


def case_rho_le_xi_findim(key, rng, seed):
    alg = build_family(key)
    ideal = random_ideal(alg, rng)
    x, r = xi(ideal, seed), rho(ideal, seed)
    return _ok(r <= x), dump_ideal(key, ideal), {"xi": x, "rho": r}


def case_zeta_nonneg_findim(key, rng, seed):
    alg = build_family(key)
    a = random_ideal(alg, rng, LEFT).random_element(rng)
    zl, zr = zeta_l(a, seed), zeta_r(a, seed)
    ok = zl is not None and zr is not None and zl >= 0 and zr >= 0
    ok = ok and (zl == 0) == is_semi_plus(a) and (zr == 0) == is_semi_minus(a)
    return _ok(ok), {"algebra": key, "a": dump_element(a)}, {"zeta_l": zl, "zeta_r": zr}


def case_zeta_nonneg_barnes(key, rng, seed):
    a = b_random(_barnes_field(key), rng)
    zl, zr = b_zeta_l(a), b_zeta_r(a)
    if not b_is_fredholm(a):
        ok = zl is None and zr is None
    else:
        ok = zl is not None and zl >= 0 and zr >= 0
    return _ok(ok), {"element": a.to_json()}, {"zeta_l": zl, "zeta_r": zr}


def _poly_field(key: str) -> Field:
    return parse_field(key.split(":")[1])


def case_zeta_nonneg_poly(key, rng, seed):
    f = p_random(_poly_field(key), rng)
    z = p_zeta(f)
    ok = z is not None and z >= 0 and (z == 0) == p_is_fredholm(f)
    if f.degree >= 1:
        ok = ok and p_xi(f) == omega(f) and z == omega(f) and not p_is_fredholm(f)
    return _ok(ok), {"f": str(f)}, {"zeta": z, "xi": _len(p_xi(f))}


def _random_module(alg: AlgebraSC, rng: np.random.Generator) -> tuple[FDModule, dict]:
    r = rng.random()
    if r < 0.3:
        return regular_module(alg), {"kind": "regular"}
    ideal = random_left_ideal(alg, rng)
    info = {"basis": [_vec(alg.field, row) for row in ideal.space.basis]}
    if r < 0.65:
        return ideal_as_module(ideal), {"kind": "ideal", **info}
    return quotient_by_left_ideal(ideal), {"kind": "quotient", **info}


def _random_map(m: FDModule, n: FDModule, rng: np.random.Generator) -> ModuleMap:
    f = m.field
    homs = hom_space(m, n)
    mat = f.zeros((n.dim, m.dim))
    for h in homs:
        mat = f.reduce(mat + f.scale(int(rng.integers(f.p)), h.matrix))
    return ModuleMap(m, n, mat).check()


def case_ind_additivity(key, rng, seed):
    alg = build_family(key)
    (m, mi), (n, ni), (p, pi) = (_random_module(alg, rng) for _ in range(3))
    phi = _random_map(m, n, rng)
    psi = _random_map(n, p, rng)
    i1, i2 = module_map_index(phi, seed), module_map_index(psi, seed)
    i12 = module_map_index(phi.then(psi), seed)
    f = alg.field
    inp = {"algebra": key, "modules": [mi, ni, pi],
           "phi": [_vec(f, r) for r in phi.matrix], "psi": [_vec(f, r) for r in psi.matrix]}
    return _ok(i12 == i1 + i2), inp, {"ind_phi": i1, "ind_psi": i2, "ind_composite": i12}


def _zsum(a, zl, zr):
    return zl(a) + zr(a)


def case_zeta_add_poly(key, rng, seed):
    field = _poly_field(key)
    f, g = p_random(field, rng), p_random(field, rng)
    ok = p_zeta(f * g) == p_zeta(f) + p_zeta(g)
    ok = ok and 2 * p_zeta(f * g) == 2 * p_zeta(f) + 2 * p_zeta(g)
    return _ok(ok), {"f": str(f), "g": str(g)}, {"zeta_f": p_zeta(f), "zeta_g": p_zeta(g), "zeta_fg": p_zeta(f * g)}


def case_zeta_add_findim(key, rng, seed):
    alg = build_family(key)
    a, b = alg.random_element(rng), random_ideal(alg, rng, LEFT).random_element(rng)
    za, zb, zab = (_zsum(x, lambda y: zeta_l(y, seed), lambda y: zeta_r(y, seed)) for x in (a, b, a * b))
    ok = zab == za + zb == 0
    return _ok(ok), {"algebra": key, "a": dump_element(a), "b": dump_element(b)}, \
        {"zeta_a": za, "zeta_b": zb, "zeta_ab": zab}


def case_zeta_add_barnes(key, rng, seed):
    f = _barnes_field(key)
    a, b = b_random(f, rng, lam_zero=False), b_random(f, rng, lam_zero=False)
    za, zb, zab = (_zsum(x, b_zeta_l, b_zeta_r) for x in (a, b, a * b))
    return _ok(zab == za + zb == 0), {"a": a.to_json(), "b": b.to_json()}, \
        {"zeta_a": za, "zeta_b": zb, "zeta_ab": zab}


def case_product_findim(key, rng, seed):
    alg = build_family(key)
    a = random_ideal(alg, rng, LEFT).random_element(rng)
    b = random_ideal(alg, rng, LEFT).random_element(rng)
    xa, xb, xab = xi_l(a, seed), xi_l(b, seed), xi_l(a * b, seed)
    return _ok(xab <= xa + xb), {"algebra": key, "a": dump_element(a), "b": dump_element(b)}, \
        {"xi_a": xa, "xi_b": xb, "xi_ab": xab}


def case_product_poly(key, rng, seed):
    field = _poly_field(key)
    f, g = p_random(field, rng), p_random(field, rng)
    ok = p_xi(f * g) == p_xi(f) + p_xi(g)
    return _ok(ok), {"f": str(f), "g": str(g)}, {"xi_f": p_xi(f), "xi_g": p_xi(g), "xi_fg": p_xi(f * g)}


def case_product_barnes(key, rng, seed):
    f = _barnes_field(key)
    a, b = b_random(f, rng, lam_zero=False), b_random(f, rng, lam_zero=False)
    xa, xb, xab = b_xi_l(a), b_xi_l(b), b_xi_l(a * b)
    return _ok(xab <= xa + xb), {"a": a.to_json(), "b": b.to_json()}, {"xi_a": xa, "xi_b": xb, "xi_ab": xab}


def case_root_div(key, rng, seed):
    field = _poly_field(key)
    s = p_random(field, rng, max_degree=6)
    n = int(rng.integers(1, 6))
    ok = p_verify_root_divisibility(s, n) and p_zeta(s ** n) == n * p_zeta(s)
    return _ok(ok), {"s": str(s), "n": n}, {"zeta_s": p_zeta(s), "zeta_sn": p_zeta(s ** n)}


def _nested_pair(alg: AlgebraSC, rng: np.random.Generator) -> tuple[OneSidedIdeal, OneSidedIdeal]:
    # prefer a strict inclusion; fall back to L1 = L2 after a few draws
    l1 = random_left_ideal(alg, rng)
    l2 = l1
    for _ in range(6):
        l2 = l1 + random_left_ideal(alg, rng)
        if l2.dim > l1.dim:
            break
    return l1, l2


def case_delta_antitone(key, rng, seed):
    alg = build_family(key)
    l1, l2 = _nested_pair(alg, rng)
    d1, d2 = delta(l1), delta(l2)
    return _ok(d2 <= d1), {"L1": dump_ideal(key, l1), "L2": dump_ideal(key, l2)}, {"delta_L1": d1, "delta_L2": d2}


def case_delta_equality(key, rng, seed):
    """Observation: nested L1 <= L2 with equal delta; is L1 = L2?"""
    alg = build_family(key)
    l1, l2 = _nested_pair(alg, rng)
    d1, d2 = delta(l1), delta(l2)
    obs = {"delta_L1": d1, "delta_L2": d2, "equal_delta": d1 == d2, "equal_ideals": l1.space == l2.space}
    return _ok(d1 != d2 or l1.space == l2.space), {"L1": dump_ideal(key, l1), "L2": dump_ideal(key, l2)}, obs


# -- suite definitions -------------------------------------------------------

CaseFn = Callable[[str, np.random.Generator, int], tuple]

LENGTH_FIELDS = ("GF(17)", "GF(19)")
SEMIPRIME = (family_keys("matrix", MATRIX, LENGTH_FIELDS) + family_keys("product", PRODUCTS, LENGTH_FIELDS)
             + family_keys("group", GROUPS, LENGTH_FIELDS))
CONTROLS = family_keys("triangular", TRIANGULAR, LENGTH_FIELDS)
BARNES = ("barnes:GF(17)", "barnes:GF(19)", "barnes:QQ")
POLYS = ("poly:GF(2)", "poly:GF(3)", "poly:GF(5)", "poly:GF(7)")
INVOLUTIVE = (family_keys("matrix", MATRIX, ("GF(17)", "GF(19)")) + family_keys("matrix", ("M2", "M3"), ("QQ",))
              + family_keys("product", ("M1xM2", "M2xM2"), ("GF(17)",))
              + family_keys("group", ("C3", "C4", "S3", "D4", "Q8"), ("GF(17)",)))


@dataclass(frozen=True)
class Part:
    """``count`` cases of ``fn`` spread round-robin over ``families``."""
    fn: CaseFn
    families: tuple
    count: int


@dataclass(frozen=True)
class Suite:
    id: str
    statement: str
    parts: tuple
    experimental: bool = False

    def plan(self) -> list[tuple[CaseFn, str]]:
        out = []
        for part in self.parts:
            fams = tuple(part.families)
            out += [(part.fn, fams[i % len(fams)]) for i in range(part.count)]
        return out


def _gf17(keys) -> tuple:
    return tuple(k for k in keys if k.endswith("GF(17)"))


_FIN17 = _gf17(SEMIPRIME)
_BY_KIND = {kind: tuple(k for k in SEMIPRIME if k.startswith(kind)) for kind in ("matrix", "product", "group")}

SUITES: dict[str, Suite] = {s.id: s for s in [
    Suite("order-length", "order(L) equals the composition length of L",
          (Part(case_order_length, _FIN17, 240),)),
    Suite("fred-idempotent", "L Fredholm iff L = A(1 - p) for an idempotent p in the socle",
          (Part(case_fred_idempotent, SEMIPRIME, 120), Part(case_fred_idempotent, CONTROLS, 10))),
    Suite("fred-len-eq", "xi(L) = rho(L) for Fredholm L",
          (Part(case_fred_len_findim, SEMIPRIME, 120), Part(case_fred_len_barnes, BARNES, 102))),
    Suite("fred-th-equiv", "contains a Fredholm element <=> L = Lan(Ran(L)), rho finite <=> finite intersection "
                           "of maximal A p_j",
          tuple(Part(case_fred_th_equiv, keys, 100) for keys in _BY_KIND.values())
          + (Part(case_fred_th_equiv, CONTROLS, 20),)),
    Suite("inter-fred", "finite intersections of Fredholm left ideals are Fredholm",
          (Part(case_inter_fred, SEMIPRIME, 100),)),
    Suite("semisimple-equiv", "A/L semisimple <=> L semi-maximal with xi(L) finite",
          (Part(case_semisimple_equiv, SEMIPRIME, 60), Part(case_semisimple_equiv, CONTROLS, 60))),
    Suite("semi-min-q", "A/L semisimple gives q outside L with L q in L and L + A(1 - q) maximal",
          (Part(case_semi_min_q, SEMIPRIME, 60), Part(case_semi_min_q, CONTROLS, 40))),
    Suite("ess-socle", "essential socle: a soc(A) = 0 forces a = 0",
          (Part(case_ess_socle_barnes, BARNES, 201),)),
    Suite("rho-le-xi", "rho(L) <= xi(L) < inf under an essential socle",
          (Part(case_rho_le_xi_barnes, BARNES, 102), Part(case_rho_le_xi_findim, SEMIPRIME, 80))),
    Suite("zeta-nonneg", "zeta_l(a) >= 0, with equality iff a is semi+-Fredholm",
          (Part(case_zeta_nonneg_findim, SEMIPRIME, 60), Part(case_zeta_nonneg_barnes, BARNES, 99),
           Part(case_zeta_nonneg_poly, POLYS, 100))),
    Suite("ind-additivity", "ind(psi o phi) = ind(psi) + ind(phi)",
          (Part(case_ind_additivity, _FIN17 + _gf17(CONTROLS), 200),)),
    Suite("zeta-additivity", "zeta_l(ab) + zeta_r(ab) = zeta_l(a) + zeta_r(a) + zeta_l(b) + zeta_r(b)",
          (Part(case_zeta_add_poly, POLYS, 500), Part(case_zeta_add_findim, SEMIPRIME, 40),
           Part(case_zeta_add_barnes, BARNES, 102))),
    Suite("product-ineq", "xi_l(ab) <= xi_l(a) + xi_l(b)",
          (Part(case_product_findim, SEMIPRIME, 60), Part(case_product_poly, POLYS, 100),
           Part(case_product_barnes, BARNES, 60))),
    Suite("root-div", "a = s^n gives n | zeta_l(a) + zeta_r(a)",
          (Part(case_root_div, POLYS, 100),)),
    Suite("delta-antitone", "L1 <= L2 gives delta(L2) <= delta(L1)",
          (Part(case_delta_antitone, INVOLUTIVE, 100),)),
    Suite("delta-equality", "L1 <= L2 with delta(L1) = delta(L2) gives L1 = L2",
          (Part(case_delta_equality, INVOLUTIVE, 100),), experimental=True),
]}


# -- running -----------------------------------------------------------------


def case_seed(master: int, suite_id: str, index: int) -> int:
    ss = np.random.SeedSequence([int(master), zlib.crc32(suite_id.encode()), int(index)])
    return int(ss.generate_state(1, dtype=np.uint32)[0])


def _jsonable(x):
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.bool_,)):
        return bool(x)
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def run_case(fn: CaseFn, family: str, seed: int) -> dict:
    rng = np.random.default_rng(seed)
    try:
        status, inp, obs = fn(family, rng, seed)
        reason = ""
    except NotSemiprime as exc:
        status, inp, obs, reason = SKIP, {"algebra": family}, {}, f"NotSemiprime: {exc}"
    except (CertificateError, ChopInconclusive) as exc:
        status, inp, obs, reason = VIOLATION, {"algebra": family}, {}, f"{type(exc).__name__}: {exc}"
    case = {"family": family, "case_seed": seed, "status": status, "input": inp, "observed": obs}
    if reason:
        case["reason"] = reason
    return _jsonable(case)


def replay_case(suite_id: str, family: str, seed: int, part: int | None = None) -> dict:
    """Re-run one case from its report entry."""
    suite = SUITES[suite_id]
    fns = [p.fn for p in suite.parts if family in p.families]
    if not fns:
        raise KeyError(f"family {family!r} is not part of suite {suite_id!r}")
    return run_case(fns[0 if part is None else part], family, seed)


@dataclass
class SuiteReport:
    suite: str
    statement: str
    experimental: bool
    seed: int
    cases: list = dc_field(default_factory=list)

    @property
    def violations(self) -> list:
        return [c for c in self.cases if c["status"] == VIOLATION]

    @property
    def skipped(self) -> list:
        return [c for c in self.cases if c["status"] == SKIP]

    @property
    def cases_run(self) -> int:
        return len(self.cases) - len(self.skipped)

    @property
    def verdict(self) -> str:
        if self.experimental:
            return "experimental-observation"
        return "fail" if self.violations else "pass"

    def to_dict(self) -> dict:
        skip_reasons: dict[str, int] = {}
        for c in self.skipped:
            kind = c["reason"].split(":")[0]
            skip_reasons[kind] = skip_reasons.get(kind, 0) + 1
        return {
            "suite": self.suite,
            "statement": self.statement,
            "experimental": self.experimental,
            "seed": self.seed,
            "verdict": self.verdict,
            "cases_run": self.cases_run,
            "skipped": len(self.skipped),
            "skip_reasons": skip_reasons,
            "violation_count": len(self.violations),
            "violations": [c["id"] for c in self.violations],
            "cases": self.cases,
        }


def thread_count() -> int:
    env = os.environ.get("SOCLELAB_THREADS")
    default = min(8, os.cpu_count() or 1)
    if env is None or env == "":
        return default
    n = int(env)
    if n < 1:
        raise ValueError("SOCLELAB_THREADS must be a positive integer")
    return n


def run_suite(suite_id: str, seed: int, threads: int | None = None) -> SuiteReport:
    suite = SUITES[suite_id]
    plan = suite.plan()
    seeds = [case_seed(seed, suite_id, i) for i in range(len(plan))]
    # build every algebra up front so worker threads only read caches
    for _, fam in plan:
        if ":" in fam and fam.split(":")[0] in ("matrix", "product", "group", "triangular"):
            build_family(fam)
    threads = thread_count() if threads is None else min(threads, thread_count())
    jobs = [(fn, fam, s) for (fn, fam), s in zip(plan, seeds)]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda j: run_case(*j), jobs))
    else:
        results = [run_case(*j) for j in jobs]
    width = len(str(len(results)))
    for i, c in enumerate(results):
        c["id"] = f"{suite_id}/{i:0{width}d}"
    results.sort(key=lambda c: c["id"])
    cases = [{"id": c.pop("id"), **c} for c in results]
    return SuiteReport(suite_id, suite.statement, suite.experimental, seed, cases)


def run_suites(name: str, seed: int, threads: int | None = None) -> list[SuiteReport]:
    ids = list(SUITES) if name == "all" else [name]
    for i in ids:
        if i not in SUITES:
            raise KeyError(f"unknown suite {i!r}; known: all, {', '.join(SUITES)}")
    return [run_suite(i, seed, threads) for i in ids]


def reports_to_json(reports: list[SuiteReport], seed: int) -> str:
    doc = {
        "seed": seed,
        "passed": all(r.verdict != "fail" for r in reports),
        "summary": [{k: v for k, v in r.to_dict().items() if k != "cases"} for r in reports],
        "suites": [r.to_dict() for r in reports],
    }
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def reports_to_markdown(reports: list[SuiteReport], seed: int) -> str:
    lines = [f"# Suite report (seed {seed})", "",
             "| suite | statement | cases | skipped | violations | verdict |",
             "|---|---|---:|---:|---:|---|"]
    for r in reports:
        statement = r.statement.replace("|", "\\|")
        lines.append(f"| {r.suite} | {statement} | {r.cases_run} | {len(r.skipped)} | "
                     f"{len(r.violations)} | {r.verdict} |")
    for r in reports:
        if r.violations:
            lines += ["", f"## {r.suite}: violations", ""]
            lines += [f"- `{c['id']}` family `{c['family']}` case_seed {c['case_seed']}" for c in r.violations]
    return "\n".join(lines) + "\n"
