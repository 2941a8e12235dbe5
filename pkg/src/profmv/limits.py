"""Finite inverse systems of MV-algebras, their limits, and profinite completions."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Hashable, Mapping, NamedTuple

from .algebra import FiniteMV, require_mv
from .errors import MultipleMediators, NoMediator, SizeLimit, SystemInvalid
from .homs import MAX_BRUTE_FORCE, ElementHom, MVHom, enumerate_homs, identity_hom
from .ideal import enumerate_ideals, quotient

# Cap on the size of a materialised limit.
MAX_LIMIT = 5000
# Cap on |A| for profinite completion (congruence enumeration).
MAX_COMPLETION = 12


class DirectedPoset:
    """A finite poset given by its full ``leq`` relation as (lower, upper) pairs."""

    def __init__(self, nodes, leq):
        self.nodes = tuple(nodes)
        if len(set(self.nodes)) != len(self.nodes):
            raise SystemInvalid("duplicate poset nodes")
        self.leq = frozenset((i, j) for i, j in leq)

    @classmethod
    def generated(cls, nodes, pairs) -> DirectedPoset:
        """Reflexive-transitive closure of ``pairs``."""
        nodes = tuple(nodes)
        rel = {(i, i) for i in nodes} | set(pairs)
        changed = True
        while changed:
            extra = {(i, k) for i, j in rel for j2, k in rel if j == j2} - rel
            changed = bool(extra)
            rel |= extra
        return cls(nodes, rel)

    def __eq__(self, other):
        return isinstance(other, DirectedPoset) and self.nodes == other.nodes and self.leq == other.leq

    def __hash__(self):
        return hash((self.nodes, self.leq))

    def le(self, i, j) -> bool:
        return (i, j) in self.leq

    def pairs(self) -> list[tuple]:
        """All (i, j) with i <= j, in node order."""
        pos = {n: k for k, n in enumerate(self.nodes)}
        return sorted(self.leq, key=lambda p: (pos.get(p[0], len(pos)), pos.get(p[1], len(pos)), str(p)))

    def strict_pairs(self) -> list[tuple]:
        return [(i, j) for i, j in self.pairs() if i != j]

    def violations(self) -> list[Violation]:
        out = []
        nodes = set(self.nodes)
        for i, j in self.pairs():
            if i not in nodes or j not in nodes:
                out.append(Violation("unknown-node", (i, j)))
        for i in self.nodes:
            if (i, i) not in self.leq:
                out.append(Violation("reflexive", (i,)))
        for i, j in itertools.permutations(self.nodes, 2):
            if (i, j) in self.leq and (j, i) in self.leq and self.nodes.index(i) < self.nodes.index(j):
                out.append(Violation("antisymmetric", (i, j)))
        for i, j, k in itertools.product(self.nodes, repeat=3):
            if (i, j) in self.leq and (j, k) in self.leq and (i, k) not in self.leq:
                out.append(Violation("transitive", (i, j, k)))
        for i, j in itertools.combinations(self.nodes, 2):
            if not any(self.le(i, k) and self.le(j, k) for k in self.nodes):
                out.append(Violation("directed", (i, j)))
        return out


class Violation(NamedTuple):
    law: str
    witness: tuple


@dataclass
class InverseSystem:
    """Algebras A_i over a directed poset with transitions φ_ij: A_j -> A_i for i <= j.

    Missing identity transitions φ_ii are filled in.
    """

    poset: DirectedPoset
    algebras: Mapping[Hashable, FiniteMV]
    transitions: dict = field(default_factory=dict)

    def __post_init__(self):
        self.algebras = dict(self.algebras)
        self.transitions = dict(self.transitions)
        for i in self.poset.nodes:
            if (i, i) not in self.transitions and i in self.algebras:
                self.transitions[(i, i)] = identity_hom(self.algebras[i])

    def __eq__(self, other):
        return (isinstance(other, InverseSystem) and self.poset == other.poset
                and self.algebras == other.algebras and self.transitions.keys() == other.transitions.keys()
                and all(self.transitions[k] == other.transitions[k] for k in self.transitions))

    def transition(self, i, j) -> MVHom:
        return self.transitions[(i, j)]


def validate_system(S: InverseSystem) -> list[Violation]:
    """Empty iff the poset is directed and φ_ii = id, φ_kj = φ_ki ∘ φ_ij hold."""
    out = S.poset.violations()
    nodes = S.poset.nodes
    for i in nodes:
        if i not in S.algebras:
            out.append(Violation("missing-algebra", (i,)))
    if out:
        return out
    for (i, j) in S.poset.pairs():
        if (i, j) not in S.transitions:
            out.append(Violation("missing-transition", (i, j)))
            continue
        h = S.transitions[(i, j)]
        if h.source != S.algebras[j] or h.target != S.algebras[i]:
            out.append(Violation("transition-type", (i, j)))
        elif h.check() is not None:
            out.append(Violation("not-a-homomorphism", (i, j)))
    for key in S.transitions:
        if key not in S.poset.leq:
            out.append(Violation("transition-outside-order", key))
    if out:
        return out
    for i in nodes:
        h = S.transitions[(i, i)]
        if any(h(a) != a for a in S.algebras[i].elements):
            out.append(Violation("identity", (i,)))
    for k, i, j in itertools.product(nodes, repeat=3):
        if S.poset.le(k, i) and S.poset.le(i, j):
            f_kj, f_ki, f_ij = S.transitions[(k, j)], S.transitions[(k, i)], S.transitions[(i, j)]
            if any(f_kj(a) != f_ki(f_ij(a)) for a in S.algebras[j].elements):
                out.append(Violation("coherence", (k, i, j)))
    return out


class LimitAlgebra(FiniteMV):
    """Compatible tuples (a_i) in ∏ A_i, one component per node, operations pointwise."""

    def __init__(self, nodes, components, elements):
        self.nodes = tuple(nodes)
        self.components = tuple(components)
        self.elements = tuple(elements)
        self.zero = tuple(A.zero for A in self.components)

    def __repr__(self):
        return f"LimitAlgebra(size={self.size}, nodes={list(self.nodes)})"

    def __eq__(self, other):
        return (isinstance(other, LimitAlgebra) and self.nodes == other.nodes
                and self.components == other.components and self.elements == other.elements)

    def __hash__(self):
        return hash((self.nodes, self.elements))

    def oplus(self, a, b):
        return tuple(A.oplus(x, y) for A, x, y in zip(self.components, a, b))

    def neg(self, a):
        return tuple(A.neg(x) for A, x in zip(self.components, a))

    def format_element(self, a) -> str:
        return "<" + "|".join(A.format_element(x) for A, x in zip(self.components, a)) + ">"


class Limit(NamedTuple):
    algebra: LimitAlgebra
    projections: dict


def inverse_limit(S: InverseSystem, max_carrier: int = MAX_LIMIT) -> Limit:
    """The subalgebra of compatible tuples, with its projections.

    Components are chosen node by node, upper nodes first; a node below an
    already chosen one has its component forced by the transition, so the
    search never visits incompatible partial tuples beyond one step.
    """
    bad = validate_system(S)
    if bad:
        raise SystemInvalid(f"invalid inverse system: {bad[0].law} at {bad[0].witness}")
    nodes = S.poset.nodes
    le = S.poset.le
    # upper nodes first: sort by number of nodes above, ascending
    order = sorted(range(len(nodes)), key=lambda k: sum(le(nodes[k], m) for m in nodes))
    found = []

    def extend(pos: int, chosen: dict):
        if pos == len(order):
            found.append(tuple(chosen[k] for k in range(len(nodes))))
            if len(found) > max_carrier:
                raise SizeLimit(f"inverse limit has more than {max_carrier} elements")
            return
        k = order[pos]
        i = nodes[k]
        forced = next((S.transition(i, nodes[m])(chosen[m]) for m in chosen if le(i, nodes[m])), None)
        options = [forced] if forced is not None else S.algebras[i].elements
        for a in options:
            ok = all(
                (not le(i, nodes[m]) or S.transition(i, nodes[m])(chosen[m]) == a)
                and (not le(nodes[m], i) or S.transition(nodes[m], i)(a) == chosen[m])
                for m in chosen)
            if ok:
                chosen[k] = a
                extend(pos + 1, chosen)
                del chosen[k]

    extend(0, {})
    comps = [S.algebras[i] for i in nodes]
    found.sort(key=lambda t: [A.index(x) for A, x in zip(comps, t)])
    L = LimitAlgebra(nodes, comps, found)
    projections = {i: ElementHom(L, S.algebras[i], {t: t[k] for t in L.elements})
                   for k, i in enumerate(nodes)}
    return Limit(L, projections)


def compatible_tuples_bruteforce(S: InverseSystem, max_product: int = MAX_LIMIT) -> list[tuple]:
    """Filter all of ∏ A_i for compatibility (independent check of :func:`inverse_limit`)."""
    nodes = S.poset.nodes
    comps = [S.algebras[i] for i in nodes]
    total = 1
    for A in comps:
        total *= A.size
    if total > max_product:
        raise SizeLimit(f"product of {total} tuples exceeds {max_product}")
    pairs = [(a, b) for a, i in enumerate(nodes) for b, j in enumerate(nodes) if S.poset.le(i, j) and a != b]
    return [t for t in itertools.product(*(A.elements for A in comps))
            if all(S.transition(nodes[a], nodes[b])(t[b]) == t[a] for a, b in pairs)]


@dataclass
class Cone:
    apex: FiniteMV
    legs: dict

    def violations(self, S: InverseSystem) -> list[Violation]:
        out = []
        for i in S.poset.nodes:
            leg = self.legs.get(i)
            if leg is None or leg.source != self.apex or leg.target != S.algebras[i]:
                out.append(Violation("leg-type", (i,)))
            elif leg.check() is not None:
                out.append(Violation("not-a-homomorphism", (i,)))
        if out:
            return out
        for i, j in S.poset.pairs():
            f = S.transition(i, j)
            if any(f(self.legs[j](b)) != self.legs[i](b) for b in self.apex.elements):
                out.append(Violation("cone-compatibility", (i, j)))
        return out


def check_universal_property(S: InverseSystem, limit: Limit, cone: Cone,
                             max_carrier: int = MAX_BRUTE_FORCE) -> MVHom:
    """The unique ψ: apex -> L with proj_i ∘ ψ = leg_i, found by searching every hom."""
    bad = cone.violations(S)
    if bad:
        raise SystemInvalid(f"invalid cone: {bad[0].law} at {bad[0].witness}")
    L, proj = limit
    hits = [psi for psi in enumerate_homs(cone.apex, L, method="brute", max_carrier=max_carrier)
            if all(proj[i](psi(b)) == cone.legs[i](b) for i in S.poset.nodes for b in cone.apex.elements)]
    if not hits:
        raise NoMediator("no mediating homomorphism")
    if len(hits) > 1:
        raise MultipleMediators(f"{len(hits)} mediating homomorphisms")
    return hits[0]


class Completion(NamedTuple):
    algebra: LimitAlgebra
    e: ElementHom
    system: InverseSystem
    projections: dict


def profinite_completion(A: FiniteMV, max_carrier: int = MAX_COMPLETION) -> Completion:
    """The limit of all finite quotients A/θ and the canonical map e(a) = ([a]_θ)_θ.

    Congruences are represented by their ideals. Node θ lies below φ when
    φ ⊆ θ, and the transition A/φ -> A/θ sends [a]_φ to [a]_θ.
    """
    if A.size > max_carrier:
        raise SizeLimit(f"profinite completion capped at |A| <= {max_carrier}, got {A.size}")
    require_mv(A)
    ideals = enumerate_ideals(A, max_carrier=max(max_carrier, MAX_BRUTE_FORCE))
    width = len(str(len(ideals)))
    nodes = [f"c{k:0{width}d}" for k in range(len(ideals))]
    quots = [quotient(A, I) for I in ideals]
    pairs = [(nodes[a], nodes[b]) for a, Ia in enumerate(ideals) for b, Ib in enumerate(ideals)
             if Ib.members <= Ia.members]
    poset = DirectedPoset(nodes, pairs)
    algebras = {n: q for n, (q, _) in zip(nodes, quots)}
    transitions = {}
    for lo, hi in pairs:
        (Qlo, plo), (Qhi, phi) = quots[nodes.index(lo)], quots[nodes.index(hi)]
        transitions[(lo, hi)] = ElementHom(Qhi, Qlo, {phi(a): plo(a) for a in A.elements})
    S = InverseSystem(poset, algebras, transitions)
    limit = inverse_limit(S)
    L = limit.algebra
    e = ElementHom(A, L, {a: tuple(p(a) for _, p in quots) for a in A.elements})
    return Completion(L, e, S, limit.projections)


def finitely_approximable_probe(A: FiniteMV, max_carrier: int = MAX_COMPLETION) -> bool:
    """Whether e: A -> Â is injective."""
    return profinite_completion(A, max_carrier).e.is_injective()
