"""MV-algebra homomorphisms between finite algebras.

Two representations:

* :class:`ElementHom`, an explicit element map between any two algebras;
* :class:`ProductHom`, a homomorphism between products of chains given by a
  dual coordinate map ``g`` (target label -> source label): the image of ``f``
  at coordinate ``y`` is ``f(g(y))`` pushed along the chain embedding
  Ł_{n_g(y)} -> Ł_{m_y}.

Every homomorphism between finite products of chains has the second form,
which is what lets :func:`enumerate_homs` skip brute force for products.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Mapping, NamedTuple

import numpy as np

from .algebra import MAX_TABLE, FiniteMV, ProductAlgebra
from .chain import chain_embedding
from .errors import CompositionMismatch, InvalidMorphism, SizeLimit

# Carrier cap for element-map brute force.
MAX_BRUTE_FORCE = 16
# Above this many (a, b) pairs ⊕-preservation of a ProductHom is checked per coordinate.
MAX_PAIR_CHECK = 4_000_000
# Up to this many elements ¬-preservation of a ProductHom is also checked element by element.
MAX_ELEMENT_CHECK = 1_000_000


class HomViolation(NamedTuple):
    law: str
    witness: tuple


class MVHom:
    """Common behaviour; subclasses implement ``__call__``."""

    source: FiniteMV
    target: FiniteMV

    def __call__(self, a):
        raise NotImplementedError

    def mapping(self) -> dict:
        return {a: self(a) for a in self.source.elements}

    def image(self) -> frozenset:
        return frozenset(self(a) for a in self.source.elements)

    def preimage(self, subset) -> frozenset:
        subset = frozenset(subset)
        return frozenset(a for a in self.source.elements if self(a) in subset)

    def is_injective(self) -> bool:
        return len(self.image()) == self.source.size

    def is_surjective(self) -> bool:
        return len(self.image()) == self.target.size

    def is_bijective(self) -> bool:
        return self.source.size == self.target.size and self.is_injective()

    def compose(self, first: MVHom) -> MVHom:
        """``self ∘ first`` (apply ``first``, then ``self``)."""
        if first.target != self.source:
            raise CompositionMismatch(f"cannot compose {first.target!r} -> with {self.source!r} ->")
        return ElementHom(first.source, self.target, {a: self(first(a)) for a in first.source.elements})

    def check(self) -> HomViolation | None:
        """First failure of h(0)=0, h(¬a)=¬h(a), h(a⊕b)=h(a)⊕h(b), checked on every element and pair."""
        return _check_generic(self)

    def is_hom(self) -> bool:
        return self.check() is None

    def same_as(self, other: MVHom) -> bool:
        """Pointwise equality on the whole source carrier."""
        return (self.source == other.source and self.target == other.target
                and all(self(a) == other(a) for a in self.source.elements))

    def describe(self) -> str:
        fmt_s, fmt_t = self.source.format_element, self.target.format_element
        return ", ".join(f"{fmt_s(a)}->{fmt_t(self(a))}" for a in self.source.elements)


def _check_generic(h: MVHom) -> HomViolation | None:
    S, T = h.source, h.target
    m = h.mapping()
    for a, b in m.items():
        if b not in T:
            return HomViolation("closure", (a,))
    if m[S.zero] != T.zero:
        return HomViolation("zero", (S.zero,))
    if max(S.size, T.size) <= MAX_TABLE:
        return _check_tables(h, m)
    for a in S.elements:
        if m[S.neg(a)] != T.neg(m[a]):
            return HomViolation("neg", (a,))
    els = S.elements
    for i, a in enumerate(els):
        for b in els[i:]:
            if m[S.oplus(a, b)] != T.oplus(m[a], m[b]):
                return HomViolation("oplus", (a, b))
    return None


def _check_tables(h: MVHom, m: dict) -> HomViolation | None:
    S, T = h.source, h.target
    ts, tt = S.to_table(), T.to_table()
    els = S.elements
    img = np.array([T.index(m[a]) for a in els])
    bad = np.flatnonzero(img[ts.neg_table] != tt.neg_table[img])
    if bad.size:
        return HomViolation("neg", (els[bad[0]],))
    bad = np.argwhere(img[ts.oplus_table] != tt.oplus_table[img[:, None], img[None, :]])
    if bad.size:
        i, j = sorted(bad[0].tolist())
        return HomViolation("oplus", (els[i], els[j]))
    return None


class ElementHom(MVHom):
    def __init__(self, source: FiniteMV, target: FiniteMV, mapping: Mapping):
        self.source = source
        self.target = target
        self._map = dict(mapping)
        missing = [a for a in source.elements if a not in self._map]
        if missing:
            raise InvalidMorphism(f"element map undefined at {source.format_element(missing[0])}")

    def __call__(self, a):
        return self._map[a]

    def mapping(self) -> dict:
        return dict(self._map)

    def __eq__(self, other):
        return isinstance(other, MVHom) and self.same_as(other)

    def __hash__(self):
        return hash((self.source, self.target, tuple(self._map[a] for a in self.source.elements)))

    def __repr__(self):
        return f"ElementHom({self.source!r} -> {self.target!r})"


def identity_hom(algebra: FiniteMV) -> MVHom:
    if isinstance(algebra, ProductAlgebra):
        return ProductHom(algebra, algebra, {lbl: lbl for lbl in algebra.labels})
    return ElementHom(algebra, algebra, {a: a for a in algebra.elements})


class ProductHom(MVHom):
    """Homomorphism ∏_X Ł_{n_x} -> ∏_Y Ł_{m_y} given by ``dual: Y -> X``."""

    def __init__(self, source: ProductAlgebra, target: ProductAlgebra, dual: Mapping[str, str]):
        self.source = source
        self.target = target
        dual = dict(dual)
        if set(dual) != set(target.labels):
            raise InvalidMorphism(
                f"dual map must be defined exactly on the target labels {list(target.labels)}")
        src_idx, factors = [], []
        for y, m in target.coords:
            x = dual[y]
            i = source.label_index(x)
            emb = chain_embedding(source.orders[i], m)
            if emb is None:
                raise InvalidMorphism(
                    f"Ł{source.orders[i]} (coordinate {x!r}) does not embed in Ł{m} (coordinate {y!r})")
            src_idx.append(i)
            factors.append(emb.factor)
        self.dual = {y: dual[y] for y in target.labels}
        self._src_idx = tuple(src_idx)
        self._factors = tuple(factors)

    def __call__(self, a):
        return tuple(a[i] * f for i, f in zip(self._src_idx, self._factors))

    def apply_array(self, arr: np.ndarray) -> np.ndarray:
        """Vectorised evaluation on an ``(N, k_source)`` array of elements."""
        if not self._src_idx:
            return np.zeros((arr.shape[0], 0), dtype=arr.dtype)
        return arr[:, list(self._src_idx)] * np.asarray(self._factors)

    def __eq__(self, other):
        if isinstance(other, ProductHom):
            return (self.source == other.source and self.target == other.target
                    and self.dual == other.dual)
        return isinstance(other, MVHom) and self.same_as(other)

    def __hash__(self):
        return hash((self.source, self.target, tuple(sorted(self.dual.items()))))

    def __repr__(self):
        pairs = ", ".join(f"{y}<-{x}" for y, x in self.dual.items())
        return f"ProductHom({pairs})"

    def describe(self) -> str:
        return " ".join(f"{y}<-{x}" for y, x in self.dual.items())

    def compose(self, first: MVHom) -> MVHom:
        if isinstance(first, ProductHom):
            if first.target != self.source:
                raise CompositionMismatch(f"cannot compose {first.target!r} -> with {self.source!r} ->")
            return ProductHom(first.source, self.target,
                              {z: first.dual[y] for z, y in self.dual.items()})
        return super().compose(first)

    def image(self) -> frozenset:
        return frozenset(map(tuple, np.unique(self.apply_array(self.source.carrier_array()), axis=0).tolist()))

    def is_injective(self) -> bool:
        return len(self.image()) == self.source.size

    def preimage_of_kernel(self, label: str) -> str:
        """Label y of the source with h^{-1}(ker p_label) = ker p_y.

        The embedding on each coordinate sends only 0 to 0, so
        h(f)(label) = 0 exactly when f(dual[label]) = 0.
        """
        self.target.label_index(label)
        return self.dual[label]

    def check(self) -> HomViolation | None:
        """Exact check of the homomorphism laws.

        Each output coordinate depends on one input coordinate through a map
        Ł_n -> Ł_m, so the laws hold iff they hold for every coordinate map on
        all of Ł_n (checked exhaustively). When the carrier is small enough ¬
        is additionally checked on every element, and ⊕ on every pair.
        """
        S, T = self.source, self.target
        for (y, m), i, f in zip(T.coords, self._src_idx, self._factors):
            n = S.orders[i]
            img = [k * f for k in range(n)]
            if img[0] != 0:
                return HomViolation("zero", (y,))
            for a in range(n):
                if img[n - 1 - a] != m - 1 - img[a]:
                    return HomViolation("neg", (y, a))
                for b in range(n):
                    if img[min(a + b, n - 1)] != min(img[a] + img[b], m - 1):
                        return HomViolation("oplus", (y, a, b))
        N = S.size
        if N <= MAX_ELEMENT_CHECK:
            arr = S.carrier_array()
            h = self.apply_array(arr)
            bad = np.flatnonzero((self.apply_array(S.neg_array(arr)) != T.neg_array(h)).any(axis=1))
            if bad.size:
                return HomViolation("neg", (tuple(arr[bad[0]].tolist()),))
        if N * N <= MAX_PAIR_CHECK:
            ii, jj = np.triu_indices(N)
            lhs = self.apply_array(S.oplus_array(arr[ii], arr[jj]))
            rhs = T.oplus_array(h[ii], h[jj])
            bad = np.flatnonzero((lhs != rhs).any(axis=1))
            if bad.size:
                k = bad[0]
                return HomViolation("oplus", (tuple(arr[ii[k]].tolist()), tuple(arr[jj[k]].tolist())))
        return None


def dual_maps(A: ProductAlgebra, B: ProductAlgebra) -> Iterator[dict]:
    """Every g: labels(B) -> labels(A) with (n_{g(y)} - 1) | (m_y - 1)."""
    options = [[x for x, n in A.coords if chain_embedding(n, m) is not None] for _, m in B.coords]
    for choice in itertools.product(*options):
        yield dict(zip(B.labels, choice))


def enumerate_homs(A: FiniteMV, B: FiniteMV, method: str = "auto",
                   max_carrier: int = MAX_BRUTE_FORCE) -> list[MVHom]:
    """All homomorphisms A -> B, duplicate-free and in a deterministic order.

    ``method`` is ``"dual"`` (products only), ``"brute"`` (element maps,
    requires ``|A| <= max_carrier``) or ``"auto"`` (dual when both are products).
    """
    if method == "auto":
        method = "dual" if isinstance(A, ProductAlgebra) and isinstance(B, ProductAlgebra) else "brute"
    if method == "dual":
        if not (isinstance(A, ProductAlgebra) and isinstance(B, ProductAlgebra)):
            raise TypeError("dual-map enumeration needs two product algebras")
        return [ProductHom(A, B, g) for g in dual_maps(A, B)]
    if method != "brute":
        raise ValueError(f"unknown method {method!r}")
    return [ElementHom(A, B, m) for m in _brute_force(A, B, max_carrier)]


def _brute_force(A: FiniteMV, B: FiniteMV, max_carrier: int) -> list[dict]:
    """Exhaustive search over element maps A -> B.

    Backtracking: pick an unassigned element, try every element of B, and
    propagate the values forced by ¬ and ⊕; a branch dies on the first
    contradiction. Equivalent to filtering all |B|^|A| maps, only faster.
    """
    if A.size > max_carrier:
        raise SizeLimit(f"brute-force hom search capped at |A| <= {max_carrier}, got {A.size}")
    ta = A.to_table()
    op, ng, n = ta.oplus_table, ta.neg_table, ta.size
    cand = list(B.elements)
    results = []

    def propagate(assign: dict) -> bool:
        todo = list(assign)
        while todo:
            x = todo.pop()
            hx = assign[x]
            forced = [(int(ng[x]), B.neg(hx))]
            for y in list(assign):
                v = B.oplus(hx, assign[y])
                forced += [(int(op[x, y]), v), (int(op[y, x]), v)]
            for z, v in forced:
                if z in assign:
                    if assign[z] != v:
                        return False
                else:
                    assign[z] = v
                    todo.append(z)
        return True

    def search(assign: dict):
        free = next((x for x in range(n) if x not in assign), None)
        if free is None:
            results.append(assign)
            return
        for v in cand:
            trial = dict(assign)
            trial[free] = v
            if propagate(trial):
                search(trial)

    start = {ta.zero: B.zero}
    if propagate(start):
        search(start)
    els = A.elements
    maps = [{els[i]: h[i] for i in range(n)} for h in results]
    maps.sort(key=lambda m: [B.index(m[a]) for a in els])
    return maps


def find_isomorphisms(A: FiniteMV, B: FiniteMV, max_carrier: int = MAX_BRUTE_FORCE) -> list[MVHom]:
    if A.size != B.size:
        return []
    return [h for h in enumerate_homs(A, B, max_carrier=max_carrier) if h.is_bijective()]


def is_isomorphic(A: FiniteMV, B: FiniteMV, max_carrier: int = MAX_BRUTE_FORCE) -> bool:
    return bool(find_isomorphisms(A, B, max_carrier))
