"""Ideals of finite MV-algebras: generation, enumeration, classification,
quotients, and the maximal ideals of a product of chains."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .algebra import FiniteMV, ProductAlgebra, TableAlgebra
from .errors import InvariantViolation, NotMaximal, SizeLimit
from .homs import MAX_BRUTE_FORCE, ElementHom


@dataclass(frozen=True)
class Ideal:
    parent: FiniteMV
    members: frozenset

    def __contains__(self, a) -> bool:
        return a in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.sorted())

    @property
    def is_proper(self) -> bool:
        return len(self.members) < self.parent.size

    def sorted(self) -> list:
        return sorted(self.members, key=self.parent.index)

    def describe(self) -> str:
        return "{" + ", ".join(self.parent.format_element(a) for a in self.sorted()) + "}"


class IdealKind(enum.Enum):
    NOT_PROPER = "not-proper"
    MAXIMAL = "maximal"
    PRIME = "prime"
    PROPER_NOT_PRIME = "proper-not-prime"


class PrincipalAt(NamedTuple):
    label: str


class ContainsDirectSum(NamedTuple):
    pass


def ideal_violation(A: FiniteMV, members) -> tuple[str, tuple] | None:
    """Why ``members`` is not an ideal of ``A``, or None if it is.

    Down-closure is checked along lower covers; ⊕-closure only needs the
    maximal members, since ⊕ is monotone and the set is down-closed.
    """
    S = frozenset(members)
    if A.zero not in S:
        return ("contains-zero", ())
    for s in S:
        if s not in A:
            return ("subset", (s,))
    for s in S:
        for c in A.lower_covers(s):
            if c not in S:
                return ("down-closed", (c, s))
    tops = [s for s in S if not any(u in S for u in A.upper_covers(s))]
    for i, a in enumerate(tops):
        for b in tops[i:]:
            if A.oplus(a, b) not in S:
                return ("oplus-closed", (a, b))
    return None


def is_ideal(A: FiniteMV, members) -> bool:
    return ideal_violation(A, members) is None


def make_ideal(A: FiniteMV, members) -> Ideal:
    bad = ideal_violation(A, members)
    if bad:
        law, wit = bad
        shown = tuple(A.format_element(w) for w in wit)
        raise InvariantViolation(f"not an ideal: {law} fails at {shown}")
    return Ideal(A, frozenset(members))


def principal_ideal(A: FiniteMV, a) -> Ideal:
    """⟨a⟩ = {x : x <= r·a for some r >= 1}."""
    return Ideal(A, A.downset(A.idempotent_multiple(a)))


def enumerate_ideals(A: FiniteMV, method: str = "auto",
                     max_carrier: int = MAX_BRUTE_FORCE) -> list[Ideal]:
    """Every ideal of ``A``, each verified, ordered by size then members.

    Methods:
      ``"subsets"``  brute force over subsets (``|A| <= max_carrier``);
      ``"principal"`` all ⟨a⟩ (every ideal of a finite algebra is principal,
                      generated by the ⊕-sum of its members);
      ``"product"``  ideals of ∏ Ł_{n_x} as products of chain ideals,
                      i.e. one ideal per subset of free coordinates;
      ``"auto"``     product for products, else subsets up to the cap,
                      else principal.
    """
    if method == "auto":
        if isinstance(A, ProductAlgebra):
            method = "product"
        else:
            method = "subsets" if A.size <= max_carrier else "principal"
    if method == "subsets":
        found = _subset_ideals(A, max_carrier)
    elif method == "principal":
        tops = {A.idempotent_multiple(a) for a in A.elements}
        found = {A.downset(u) for u in tops}
    elif method == "product":
        if not isinstance(A, ProductAlgebra):
            raise TypeError("product method needs a ProductAlgebra")
        found = set()
        for free in itertools.product((False, True), repeat=len(A.orders)):
            u = tuple(t if f else 0 for t, f in zip(A.tops, free))
            found.add(A.downset(u))
    else:
        raise ValueError(f"unknown method {method!r}")
    ideals = [make_ideal(A, m) for m in found]
    ideals.sort(key=lambda I: (len(I), sorted(A.index(a) for a in I.members)))
    return ideals


def _subset_ideals(A: FiniteMV, max_carrier: int) -> set:
    n = A.size
    if n > max_carrier:
        raise SizeLimit(f"subset enumeration of ideals capped at |A| <= {max_carrier}, got {n}")
    els = A.elements
    z = A.index(A.zero)
    rest = [i for i in range(n) if i != z]
    found = set()
    for bits in range(1 << len(rest)):
        S = {els[z]} | {els[rest[k]] for k in range(len(rest)) if bits >> k & 1}
        if is_ideal(A, S):
            found.add(frozenset(S))
    return found


def classify_ideal(A: FiniteMV, I: Ideal, ideals: list[Ideal] | None = None) -> IdealKind:
    """Strongest applicable tag: maximal, else prime, else proper-not-prime."""
    make_ideal(A, I.members)
    if not I.is_proper:
        return IdealKind.NOT_PROPER
    if ideals is None:
        ideals = enumerate_ideals(A)
    if not any(I.members < J.members and J.is_proper for J in ideals):
        return IdealKind.MAXIMAL
    outside = [a for a in A.elements if a not in I.members]
    for i, x in enumerate(outside):
        for y in outside[i:]:
            if A.meet(x, y) in I.members:
                return IdealKind.PROPER_NOT_PRIME
    return IdealKind.PRIME


def maximal_ideals(A: FiniteMV, method: str = "auto", max_carrier: int = MAX_BRUTE_FORCE) -> list[Ideal]:
    proper = [I for I in enumerate_ideals(A, method, max_carrier) if I.is_proper]
    return [I for I in proper if not any(I.members < J.members for J in proper)]


def quotient(A: FiniteMV, I: Ideal) -> tuple[TableAlgebra, ElementHom]:
    """A/I via a ~ b iff d(a, b) ∈ I, with classes represented by their least element."""
    make_ideal(A, I.members)
    t = A.to_table()
    op, ng, n = t.oplus_table, t.neg_table, t.size
    in_I = np.zeros(n, dtype=bool)
    in_I[[A.index(a) for a in I.members]] = True
    # a ⊖ b = ¬(¬a ⊕ b)
    x = np.arange(n)
    om = ng[op[ng[:, None], x[None, :]]]
    related = in_I[op[om, om.T]]
    rep = related.argmax(axis=1)
    reps = sorted(set(rep.tolist()))
    cls_of_rep = {r: k for k, r in enumerate(reps)}
    cls = np.array([cls_of_rep[r] for r in rep])
    r = np.array(reps)
    q_op = cls[op[np.ix_(r, r)]]
    q_ng = cls[ng[r]]
    if not (np.array_equal(q_op[cls[:, None], cls[None, :]], cls[op])
            and np.array_equal(q_ng[cls], cls[ng])):
        raise InvariantViolation("quotient operations are not well defined")
    names = ["[" + t.names[i] + "]" for i in reps]
    Q = TableAlgebra(q_op, q_ng, int(cls[t.zero]), names=names)
    proj = ElementHom(A, Q, {a: int(cls[A.index(a)]) for a in A.elements})
    return Q, proj


def coordinate_kernel(P: ProductAlgebra, label: str) -> Ideal:
    """ker p_x = {f : f(x) = 0}."""
    i = P.label_index(label)
    return Ideal(P, frozenset(f for f in P.elements if f[i] == 0))


def direct_sum_ideal(P: ProductAlgebra) -> Ideal:
    """Elements of finite support; over finitely many coordinates that is everything."""
    return Ideal(P, frozenset(P.elements))


def classify_maximal(P: ProductAlgebra, M: Ideal,
                     ideals: list[Ideal] | None = None) -> PrincipalAt | ContainsDirectSum:
    if classify_ideal(P, M, ideals) is not IdealKind.MAXIMAL:
        raise NotMaximal(f"{M.describe()} is not a maximal ideal")
    hits = [x for x in P.labels if coordinate_kernel(P, x).members == M.members]
    if len(hits) == 1:
        return PrincipalAt(hits[0])
    if len(hits) > 1:
        raise InvariantViolation(f"maximal ideal is the kernel of several coordinates {hits}")
    # only reachable with infinitely many coordinates
    if direct_sum_ideal(P).members <= M.members:
        return ContainsDirectSum()
    raise InvariantViolation("maximal ideal is neither a coordinate kernel nor above the direct sum")
