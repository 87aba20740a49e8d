"""Algebra spec files: a small JSON dialect with scalars written as strings.

Finite-dimensional algebra::

    {"model": "findim", "field": "GF(17)", "dim": 4,
     "unit": ["1", "0", "0", "1"],
     "mult": [[0, 0, 0, "1"], ...],            # (i, j, k, c): b_i b_j += c b_k
     "involution": [["1", "0", ...], ...],     # optional; column j = (b_j)*
     "elements": {"E11": ["1", "0", "0", "0"]}}

Barnes model: ``{"model": "barnes", "field": "QQ", "elements": {"a": {"lambda": "3/2", "block": [["1"]]}}}``.
Polynomial model: ``{"model": "poly", "field": "GF(2)", "elements": {"f": "x^2+1"}}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from pathlib import Path

import numpy as np

from . import algebra as alg_mod
from .algebra import AlgebraError, AlgebraSC, Element, build_algebra
from .barnes import BarnesElement
from .field import Field, FieldError, parse_field
from .poly import Poly, PolyError
from .polymodel import PolyElement

MODELS = ("findim", "barnes", "poly")


class SpecError(ValueError):
    def __init__(self, message: str, position: str = "$"):
        super().__init__(f"{position}: {message}")
        self.position = position


@dataclass
class ModelContext:
    model: str
    field: Field
    algebra: AlgebraSC | None = None
    elements: dict = dc_field(default_factory=dict)
    name: str = ""


def _scalar(field: Field, s, pos: str):
    try:
        return field.parse(s)
    except FieldError as exc:
        raise SpecError(str(exc), pos) from None


def _vector(field: Field, data, n: int, pos: str) -> np.ndarray:
    if not isinstance(data, list) or len(data) != n:
        raise SpecError(f"expected a list of {n} scalar strings", pos)
    return field.array([_scalar(field, s, f"{pos}[{i}]") for i, s in enumerate(data)])


def parse_spec(doc: dict) -> ModelContext:
    if not isinstance(doc, dict):
        raise SpecError("spec must be a JSON object")
    model = doc.get("model", "findim")
    if model not in MODELS:
        raise SpecError(f"unknown model {model!r}; expected one of {MODELS}", "$.model")
    if "field" not in doc:
        raise SpecError("missing field descriptor", "$.field")
    try:
        field = parse_field(doc["field"])
    except FieldError as exc:
        raise SpecError(str(exc), "$.field") from None
    ctx = ModelContext(model, field, name=str(doc.get("name", "")))
    elements = doc.get("elements", {})
    if not isinstance(elements, dict):
        raise SpecError("elements must be an object", "$.elements")
    if model == "findim":
        ctx.algebra = _parse_findim(doc, field)
    elif model == "poly" and not field.is_prime_field:
        raise SpecError("the polynomial model needs a prime field", "$.field")
    for name, lit in elements.items():
        ctx.elements[name] = parse_element(ctx, lit, f"$.elements.{name}")
    return ctx


def _parse_findim(doc: dict, field: Field) -> AlgebraSC:
    dim = doc.get("dim")
    if not isinstance(dim, int) or dim < 1:
        raise SpecError("dim must be a positive integer", "$.dim")
    unit = _vector(field, doc.get("unit"), dim, "$.unit")
    mult = doc.get("mult")
    if not isinstance(mult, list):
        raise SpecError("mult must be a list of [i, j, k, c] entries", "$.mult")
    entries = []
    for n, e in enumerate(mult):
        pos = f"$.mult[{n}]"
        if not (isinstance(e, list) and len(e) == 4 and all(isinstance(x, int) for x in e[:3])):
            raise SpecError("entry must be [i, j, k, scalar-string]", pos)
        if not all(0 <= x < dim for x in e[:3]):
            raise SpecError(f"index out of range for dim {dim}", pos)
        entries.append((e[0], e[1], e[2], _scalar(field, e[3], f"{pos}[3]")))
    inv = None
    if doc.get("involution") is not None:
        rows = doc["involution"]
        if not isinstance(rows, list) or len(rows) != dim:
            raise SpecError(f"involution must be a {dim}x{dim} matrix", "$.involution")
        inv = np.stack([_vector(field, r, dim, f"$.involution[{i}]") for i, r in enumerate(rows)])
    try:
        return build_algebra(field, dim, entries, unit.tolist(), inv, name=str(doc.get("name", "")))
    except alg_mod.AssociativityViolation as exc:
        raise SpecError(f"associativity fails: witness triple {exc.witness}", "$.mult") from None
    except alg_mod.UnitViolation as exc:
        raise SpecError(f"unit fails on basis element {exc.witness[0]}", "$.unit") from None
    except alg_mod.InvolutionViolation as exc:
        raise SpecError(str(exc), "$.involution") from None
    except AlgebraError as exc:
        raise SpecError(str(exc)) from None


def parse_element(ctx: ModelContext, lit, pos: str = "$"):
    f = ctx.field
    if ctx.model == "findim":
        return Element(ctx.algebra, _vector(f, lit, ctx.algebra.dim, pos))
    if ctx.model == "barnes":
        if not isinstance(lit, dict) or "lambda" not in lit:
            raise SpecError('Barnes element must look like {"lambda": "1", "block": [[...]]}', pos)
        block = lit.get("block", [])
        if not isinstance(block, list) or any(not isinstance(r, list) or len(r) != len(block) for r in block):
            raise SpecError("block must be a square matrix", f"{pos}.block")
        arr = np.stack([_vector(f, r, len(block), f"{pos}.block[{i}]") for i, r in enumerate(block)]) \
            if block else f.zeros((0, 0))
        return BarnesElement(f, _scalar(f, lit["lambda"], f"{pos}.lambda"), arr)
    if not isinstance(lit, str):
        raise SpecError("polynomial literal must be a string like \"x^2+3x+1\"", pos)
    try:
        return PolyElement(Poly.parse(f, lit))
    except (PolyError, FieldError) as exc:
        raise SpecError(str(exc), pos) from None


def resolve_element(ctx: ModelContext, ref: str):
    """A named element of the spec, or a literal (JSON for findim/barnes, text for poly)."""
    if ref in ctx.elements:
        return ctx.elements[ref]
    if ctx.model == "poly":
        return parse_element(ctx, ref, "--element")
    try:
        lit = json.loads(ref)
    except json.JSONDecodeError:
        raise SpecError(f"unknown element name {ref!r}", "--element") from None
    return parse_element(ctx, lit, "--element")


def load_spec(path) -> ModelContext:
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    return parse_spec(doc)


# -- writing -----------------------------------------------------------------


def algebra_to_spec(alg: AlgebraSC, elements: dict | None = None, name: str = "") -> dict:
    f = alg.field
    doc = {
        "model": "findim",
        "name": name or alg.name,
        "field": str(f),
        "dim": alg.dim,
        "unit": [f.fmt(c) for c in alg.unit],
        "mult": [[i, j, k, f.fmt(c)] for i, j, k, c in sorted(alg.mult)],
    }
    if alg.involution is not None:
        doc["involution"] = [[f.fmt(c) for c in row] for row in alg.involution]
    doc["elements"] = {k: [f.fmt(c) for c in v.coords] for k, v in (elements or {}).items()}
    return doc


def dump_spec(doc: dict) -> str:
    """One top-level key per line; lists of scalars and mult entries stay on one line."""
    def dense(v):
        return json.dumps(v, separators=(", ", ": "))

    lines = []
    for key, val in doc.items():
        if isinstance(val, list) and val and isinstance(val[0], list):
            body = ",\n    ".join(dense(r) for r in val)
            lines.append(f'  "{key}": [\n    {body}\n  ]')
        elif isinstance(val, dict) and val:
            body = ",\n    ".join(f"{json.dumps(k)}: {dense(v)}" for k, v in val.items())
            lines.append(f'  "{key}": {{\n    {body}\n  }}')
        else:
            lines.append(f'  "{key}": {dense(val)}')
    return "{\n" + ",\n".join(lines) + "\n}\n"


def generate_family(family: str, n: int | None = None, p: int = 17, group: str | None = None,
                    factors: list[int] | None = None) -> dict:
    """Deterministic spec documents for the standard test families."""
    from .field import GF

    field = GF(p)
    if family == "matrix":
        n = n or 2
        a = alg_mod.matrix_algebra(n, field)
        els = {f"E{i + 1}{j + 1}": a.basis_element(i * n + j) for i in range(n) for j in range(n)}
        els["one"] = a.one
        return algebra_to_spec(a, els, name=f"M{n}(GF({p}))")
    if family == "triangular":
        n = n or 2
        a = alg_mod.upper_triangular_algebra(n, field)
        pairs = [(i, j) for i in range(n) for j in range(i, n)]
        els = {f"E{i + 1}{j + 1}": a.basis_element(k) for k, (i, j) in enumerate(pairs)}
        els["one"] = a.one
        return algebra_to_spec(a, els, name=f"T{n}(GF({p}))")
    if family == "group":
        group = group or "C2"
        if group not in alg_mod.GROUPS:
            raise ValueError(f"unknown group {group!r}; known: {sorted(alg_mod.GROUPS)}")
        a = alg_mod.group_algebra(alg_mod.GROUPS[group](), field, name=f"GF({p})[{group}]")
        els = {f"g{i}": a.basis_element(i) for i in range(a.dim)}
        els["one"] = a.one
        return algebra_to_spec(a, els)
    if family == "product":
        factors = factors or [2, 2]
        a = alg_mod.matrix_algebra(factors[0], field)
        for k in factors[1:]:
            a = alg_mod.direct_product(a, alg_mod.matrix_algebra(k, field))
        a.name = "x".join(f"M{k}" for k in factors) + f"(GF({p}))"
        return algebra_to_spec(a, {"one": a.one})
    raise ValueError(f"unknown family {family!r}")
