"""Order of one-sided ideals by splitting off minimal left ideals.

For a left ideal L of a semiprime algebra: find a minimal left ideal
``A p`` inside L with p a minimal idempotent, then continue with
``L & A(1 - p)``.  Since ``L = A p (+) (L & A(1 - p))`` the number of steps is
the order of L.
"""

from __future__ import annotations

import numpy as np

from .algebra import Element
from .ideals import (LEFT, OneSidedIdeal, CertificateError, idempotent_generator,
                     principal_left, principal_right, require_semiprime)
from .modules import DEFAULT_TRIES, find_submodule, ideal_as_module, minimal_submodule, regular_module


def minimal_left_ideal_in(ideal: OneSidedIdeal, rng: np.random.Generator,
                          tries: int = DEFAULT_TRIES) -> OneSidedIdeal:
    """A minimal left ideal contained in the nonzero left ideal ``ideal``."""
    lid = ideal.as_left()
    space = minimal_submodule(regular_module(lid.algebra), rng, within=lid.space, tries=tries)
    return OneSidedIdeal(ideal.algebra, ideal.side, space)


def order_decomposition(ideal: OneSidedIdeal, seed: int = 0,
                        tries: int = DEFAULT_TRIES) -> list[Element]:
    """Minimal idempotents ``p_j`` with ``L = sum A p_j`` (``sum p_j A`` for right ideals)."""
    alg = ideal.algebra
    require_semiprime(alg)
    lid = ideal.as_left()
    op = lid.algebra  # A for left ideals, A^op for right ideals
    rng = np.random.default_rng(seed)
    cur = lid
    idems: list[Element] = []
    while cur.dim:
        m = minimal_left_ideal_in(cur, rng, tries)
        p = idempotent_generator(m)
        if p is None:
            raise CertificateError("minimal left ideal without idempotent generator in a semiprime algebra")
        rest = cur & principal_left(op.one - p)
        if rest.dim + m.dim != cur.dim:
            raise CertificateError("A p (+) (L & A(1-p)) does not recover L")
        idems.append(Element(alg, p.coords))
        cur = rest
    return idems


def order(ideal: OneSidedIdeal, seed: int = 0) -> int:
    """Minimal number of minimal one-sided ideals summing to ``ideal``."""
    return len(order_decomposition(ideal, seed))


def is_minimal_idempotent(p: Element, side=LEFT, seed: int = 0) -> bool:
    """``p`` nonzero idempotent with ``A p`` (or ``p A``) a minimal one-sided ideal."""
    if p * p != p or p.is_zero():
        return False
    ideal = principal_left(p) if side is LEFT else principal_right(p)
    return find_submodule(ideal_as_module(ideal), np.random.default_rng(seed)) is None
