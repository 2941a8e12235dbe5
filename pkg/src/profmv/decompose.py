"""Splitting a finite MV-algebra into a product of chains, and simplicity."""

from __future__ import annotations

import numpy as np

from .algebra import FiniteMV, ProductAlgebra, TableAlgebra, require_mv
from .errors import InvariantViolation
from .homs import MAX_BRUTE_FORCE, ElementHom
from .ideal import enumerate_ideals, maximal_ideals, quotient


def chain_ranks(Q: TableAlgebra) -> list[int]:
    """Position of each element of a finite MV-chain, checking that it is one.

    The rank of q is the number of elements strictly below it; the map
    q -> rank/(|Q|-1) must then be an isomorphism onto Ł_|Q|.
    """
    n = Q.size
    ranks = (Q.leq_matrix.sum(axis=0) - 1).tolist()
    if sorted(ranks) != list(range(n)):
        raise InvariantViolation("quotient by a maximal ideal is not a chain")
    r = np.array(ranks)
    top = n - 1
    ok = (np.array_equal(r[Q.oplus_table], np.minimum(r[:, None] + r[None, :], top))
          and np.array_equal(r[Q.neg_table], top - r))
    if not ok:
        raise InvariantViolation("quotient chain is not isomorphic to a Łukasiewicz chain")
    return ranks


def decompose(T: FiniteMV, max_carrier: int = MAX_BRUTE_FORCE) -> tuple[ProductAlgebra, ElementHom]:
    """Isomorphism T -> ∏_M T/M over the maximal ideals M of T.

    Coordinates are sorted by chain order, largest first; ties go to the
    quotient whose sorted class representatives are lexicographically least.
    """
    require_mv(T)
    parts = []
    for M in maximal_ideals(T, max_carrier=max_carrier):
        Q, proj = quotient(T, M)
        ranks = chain_ranks(Q)
        first = {}
        for a in T.elements:
            first.setdefault(proj(a), T.index(a))
        reps = sorted(first.values())
        parts.append((Q.size, reps, proj, ranks))
    parts.sort(key=lambda p: (-p[0], p[1]))
    width = len(str(len(parts)))
    P = ProductAlgebra((f"q{i + 1:0{width}d}", p[0]) for i, p in enumerate(parts))
    iso = ElementHom(T, P, {a: tuple(ranks[proj(a)] for _, _, proj, ranks in parts)
                            for a in T.elements})
    if not iso.is_bijective():
        raise InvariantViolation("decomposition map is not bijective")
    bad = iso.check()
    if bad:
        raise InvariantViolation(f"decomposition map fails {bad.law} at {bad.witness}")
    return P, iso


def is_simple(T: FiniteMV, max_carrier: int = MAX_BRUTE_FORCE) -> bool:
    """True iff the only ideals are {0} and T; the one-element algebra is not simple."""
    require_mv(T)
    if T.is_trivial:
        return False
    return len(enumerate_ideals(T, max_carrier=max_carrier)) == 2
