"""Independent reference computations used to freeze and cross-check expected values.

Nothing here calls the code under test except to read an algebra's ⊕ and ¬
tables; each oracle takes the slow, literal route.
"""

import itertools
from fractions import Fraction


def frac_chain(n):
    return [Fraction(k, n - 1) for k in range(n)]


def frac_oplus(x, y):
    return min(x + y, Fraction(1))


def frac_neg(x):
    return 1 - x


def tables(A):
    """Plain-dict ⊕ and ¬ over A's elements."""
    els = list(A.elements)
    op = {(a, b): A.oplus(a, b) for a in els for b in els}
    ng = {a: A.neg(a) for a in els}
    return els, op, ng


def all_homs_literal(A, B):
    """Filter every one of the |B|^|A| maps A -> B."""
    ea, opa, nga = tables(A)
    eb, opb, ngb = tables(B)
    out = []
    for images in itertools.product(eb, repeat=len(ea)):
        h = dict(zip(ea, images))
        if h[A.zero] != B.zero:
            continue
        if any(h[nga[a]] != ngb[h[a]] for a in ea):
            continue
        if any(h[opa[a, b]] != opb[h[a], h[b]] for a in ea for b in ea):
            continue
        out.append(h)
    return out


def leq_literal(A, a, b):
    return A.oplus(A.neg(a), b) == A.neg(A.zero)


def is_ideal_literal(A, S):
    S = set(S)
    if A.zero not in S:
        return False
    if any(A.oplus(x, y) not in S for x in S for y in S):
        return False
    return all(x in S for y in S for x in A.elements if leq_literal(A, x, y))


def ideals_literal(A):
    els = list(A.elements)
    out = []
    for r in range(len(els) + 1):
        for S in itertools.combinations(els, r):
            if is_ideal_literal(A, S):
                out.append(frozenset(S))
    return out


def generated_ideal_literal(A, gens):
    """Smallest set containing 0 and ``gens`` closed under ⊕ and downward."""
    S = {A.zero, *gens}
    while True:
        new = {A.oplus(x, y) for x in S for y in S}
        new |= {x for y in S for x in A.elements if leq_literal(A, x, y)}
        if new <= S:
            return frozenset(S)
        S |= new
