"""Finite MV-algebras, either as explicit operation tables or as labeled
products of Łukasiewicz chains.

Both representations share :class:`FiniteMV`, which supplies the derived
operations (⊗, ⊖, the order, ∨, ∧) from ⊕ and ¬ alone. Generic algorithms
elsewhere in the package only use this interface, so they run unchanged on
tables, products and materialised inverse limits.
"""

from __future__ import annotations

import itertools
from functools import cached_property
from math import prod
from typing import Hashable, Iterable, NamedTuple, Sequence

import numpy as np

from .chain import ChainElem, chain_elements, neg as chain_neg, oplus as chain_oplus
from .errors import AxiomViolation, FormatError, SizeLimit, UnknownLabel

# Largest carrier for which a full N x N operation table is materialised.
MAX_TABLE = 4096


class FiniteMV:
    """Interface shared by every finite MV-algebra representation.

    Subclasses provide ``elements``, ``zero``, ``oplus`` and ``neg``.
    Elements are plain hashable values (ints for tables, tuples of
    numerators for products).
    """

    elements: Sequence[Hashable]
    zero: Hashable

    def oplus(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def one(self):
        return self.neg(self.zero)

    @property
    def is_trivial(self) -> bool:
        return self.size == 1

    @cached_property
    def _index(self) -> dict:
        return {a: i for i, a in enumerate(self.elements)}

    def index(self, a) -> int:
        return self._index[a]

    def __contains__(self, a) -> bool:
        try:
            return a in self._index
        except TypeError:
            return False

    def format_element(self, a) -> str:
        return str(a)

    def otimes(self, a, b):
        return self.neg(self.oplus(self.neg(a), self.neg(b)))

    def ominus(self, a, b):
        return self.otimes(a, self.neg(b))

    def dist(self, a, b):
        """The distance (a ⊖ b) ⊕ (b ⊖ a); zero exactly when a = b."""
        return self.oplus(self.ominus(a, b), self.ominus(b, a))

    def leq(self, a, b) -> bool:
        return self.oplus(self.neg(a), b) == self.one

    def join(self, a, b):
        return self.oplus(self.neg(self.oplus(self.neg(a), b)), b)

    def meet(self, a, b):
        return self.neg(self.join(self.neg(a), self.neg(b)))

    def nat_scale(self, a, r: int):
        acc = self.zero
        for _ in range(r):
            acc = self.oplus(acc, a)
        return acc

    def idempotent_multiple(self, a):
        """The eventually constant value of r·a, i.e. the top of ⟨a⟩."""
        u = a
        while (v := self.oplus(u, a)) != u:
            u = v
        return u

    def downset(self, a) -> frozenset:
        return frozenset(x for x in self.elements if self.leq(x, a))

    @cached_property
    def _covers(self) -> tuple[dict, dict]:
        t = self.to_table()
        strict = t.leq_matrix & ~np.eye(t.size, dtype=bool)
        s = strict.astype(np.float32)
        between = (s @ s) > 0.5
        cover = strict & ~between
        lower = {a: [self.elements[i] for i in np.flatnonzero(cover[:, j])]
                 for j, a in enumerate(self.elements)}
        upper = {a: [self.elements[j] for j in np.flatnonzero(cover[i, :])]
                 for i, a in enumerate(self.elements)}
        return lower, upper

    def lower_covers(self, a) -> list:
        return self._covers[0][a]

    def upper_covers(self, a) -> list:
        return self._covers[1][a]

    def to_table(self) -> TableAlgebra:
        """Materialise the operation tables (elements keep their enumeration order)."""
        n = self.size
        if n > MAX_TABLE:
            raise SizeLimit(f"refusing to build a {n}x{n} operation table (limit {MAX_TABLE})")
        idx = self._index
        els = self.elements
        op = np.empty((n, n), dtype=np.int32)
        for i, a in enumerate(els):
            for j in range(i, n):
                op[i, j] = op[j, i] = idx[self.oplus(a, els[j])]
        ng = np.array([idx[self.neg(a)] for a in els], dtype=np.int32)
        return TableAlgebra(op, ng, idx[self.zero], names=[self.format_element(a) for a in els])


class TableAlgebra(FiniteMV):
    """A finite algebra given by explicit ⊕ and ¬ tables over ids ``0..N-1``.

    ``names`` are display names only; they take part in equality so that
    documents round-trip exactly.
    """

    def __init__(self, oplus_table, neg_table, zero: int, names: Iterable[str] | None = None):
        try:
            op = np.asarray(oplus_table)
            ng = np.asarray(neg_table)
        except ValueError:
            raise FormatError("tables must be rectangular") from None
        if ng.ndim != 1:
            raise FormatError("neg table must be a flat list")
        n = len(ng)
        if n == 0:
            raise FormatError("empty carrier")
        if op.shape != (n, n):
            raise FormatError(f"oplus table has shape {op.shape}, expected {(n, n)}")
        if not np.issubdtype(op.dtype, np.integer) or not np.issubdtype(ng.dtype, np.integer):
            raise FormatError("tables must contain element ids")
        if op.min() < 0 or op.max() >= n or ng.min() < 0 or ng.max() >= n:
            raise FormatError("table entry outside the carrier")
        if not 0 <= zero < n:
            raise FormatError(f"zero {zero} outside the carrier")
        self.oplus_table = op.astype(np.int32)
        self.neg_table = ng.astype(np.int32)
        self.oplus_table.flags.writeable = False
        self.neg_table.flags.writeable = False
        self.zero = int(zero)
        self.elements = tuple(range(n))
        self.names = tuple(names) if names is not None else tuple(str(i) for i in range(n))
        if len(self.names) != n or len(set(self.names)) != n:
            raise FormatError("element names must be distinct, one per element")

    def __repr__(self):
        return f"TableAlgebra(size={self.size})"

    def __eq__(self, other):
        return (isinstance(other, TableAlgebra) and self.zero == other.zero
                and self.names == other.names
                and np.array_equal(self.oplus_table, other.oplus_table)
                and np.array_equal(self.neg_table, other.neg_table))

    def __hash__(self):
        return hash((self.zero, self.names, self.oplus_table.tobytes(), self.neg_table.tobytes()))

    def index(self, a) -> int:
        return a

    def __contains__(self, a) -> bool:
        return isinstance(a, (int, np.integer)) and 0 <= a < len(self.elements)

    def format_element(self, a) -> str:
        return self.names[a]

    def element_named(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownLabel(f"no element named {name!r}") from None

    def oplus(self, a, b):
        return int(self.oplus_table[a, b])

    def neg(self, a):
        return int(self.neg_table[a])

    @cached_property
    def leq_matrix(self) -> np.ndarray:
        """``leq_matrix[x, y]`` is True iff ¬x ⊕ y = 1."""
        one = self.neg_table[self.zero]
        return self.oplus_table[self.neg_table] == one

    def leq(self, a, b) -> bool:
        return bool(self.leq_matrix[a, b])

    def downset(self, a) -> frozenset:
        return frozenset(int(i) for i in np.flatnonzero(self.leq_matrix[:, a]))

    def to_table(self) -> TableAlgebra:
        return self

    def relabel(self, perm: Sequence[int]) -> TableAlgebra:
        """The isomorphic copy in which old element ``i`` gets id ``perm[i]``."""
        p = np.asarray(perm)
        n = self.size
        inv = np.empty(n, dtype=np.int64)
        inv[p] = np.arange(n)
        op = p[self.oplus_table[np.ix_(inv, inv)]]
        ng = p[self.neg_table[inv]]
        names = [self.names[i] for i in inv]
        return TableAlgebra(op, ng, int(p[self.zero]), names=names)


def chain_algebra(n: int) -> TableAlgebra:
    """Ł_n as a table, element id k standing for k/(n-1)."""
    els = chain_elements(n)
    op = [[chain_oplus(a, b).num for b in els] for a in els]
    ng = [chain_neg(a).num for a in els]
    return TableAlgebra(op, ng, 0, names=[str(a) for a in els])


def trivial_algebra() -> TableAlgebra:
    return TableAlgebra([[0]], [0], 0, names=["0"])


class ProductAlgebra(FiniteMV):
    """The product of chains ∏ Ł_{n_x} over an ordered list of labeled coordinates.

    Elements are tuples of numerators, one per coordinate. The carrier is only
    enumerated on demand, so large products can be handled symbolically.
    """

    def __init__(self, coords: Iterable[tuple[str, int]]):
        coords = tuple((str(lbl), int(n)) for lbl, n in coords)
        labels = [lbl for lbl, _ in coords]
        if len(set(labels)) != len(labels):
            raise FormatError(f"duplicate coordinate labels in {labels}")
        for lbl, n in coords:
            if n < 2:
                raise FormatError(f"coordinate {lbl!r} has order {n}; orders must be >= 2")
        self.coords = coords
        self.labels = tuple(labels)
        self.orders = tuple(n for _, n in coords)
        self.tops = tuple(n - 1 for n in self.orders)
        self.zero = tuple(0 for _ in coords)

    def __repr__(self):
        inner = " x ".join(f"Ł{n}[{lbl}]" for lbl, n in self.coords) or "1"
        return f"ProductAlgebra({inner})"

    def __eq__(self, other):
        return isinstance(other, ProductAlgebra) and self.coords == other.coords

    def __hash__(self):
        return hash(("product", self.coords))

    @property
    def size(self) -> int:
        return prod(self.orders)

    @cached_property
    def elements(self) -> tuple:
        return tuple(itertools.product(*(range(n) for n in self.orders)))

    @cached_property
    def _radix(self) -> tuple:
        w, out = 1, []
        for n in reversed(self.orders):
            out.append(w)
            w *= n
        return tuple(reversed(out))

    def index(self, a) -> int:
        return sum(k * w for k, w in zip(a, self._radix))

    def __contains__(self, a) -> bool:
        return (isinstance(a, tuple) and len(a) == len(self.orders)
                and all(isinstance(k, int) and 0 <= k < n for k, n in zip(a, self.orders)))

    def label_index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownLabel(f"no coordinate labeled {label!r}") from None

    def order_of(self, label: str) -> int:
        return self.orders[self.label_index(label)]

    def oplus(self, a, b):
        return tuple(min(x + y, t) for x, y, t in zip(a, b, self.tops))

    def neg(self, a):
        return tuple(t - x for x, t in zip(a, self.tops))

    def leq(self, a, b) -> bool:
        return all(x <= y for x, y in zip(a, b))

    def join(self, a, b):
        return tuple(map(max, a, b))

    def meet(self, a, b):
        return tuple(map(min, a, b))

    def downset(self, a) -> frozenset:
        return frozenset(itertools.product(*(range(k + 1) for k in a)))

    def lower_covers(self, a) -> list:
        return [a[:i] + (k - 1,) + a[i + 1:] for i, k in enumerate(a) if k > 0]

    def upper_covers(self, a) -> list:
        return [a[:i] + (k + 1,) + a[i + 1:] for i, (k, t) in enumerate(zip(a, self.tops)) if k < t]

    def coordinate(self, a, label: str) -> ChainElem:
        i = self.label_index(label)
        return ChainElem(a[i], self.orders[i])

    def element(self, values: dict) -> tuple:
        """Build an element from ``{label: ChainElem or numerator}``; missing labels are 0."""
        out = [0] * len(self.orders)
        for lbl, v in values.items():
            i = self.label_index(lbl)
            if isinstance(v, ChainElem):
                if v.order != self.orders[i]:
                    raise FormatError(f"coordinate {lbl!r} lives in Ł{self.orders[i]}, got Ł{v.order}")
                v = v.num
            out[i] = v
        a = tuple(out)
        if a not in self:
            raise FormatError(f"{values} is not an element of {self!r}")
        return a

    def separator(self, label: str) -> tuple:
        """The element that is 0 at ``label`` and 1 elsewhere."""
        i = self.label_index(label)
        return tuple(0 if j == i else t for j, t in enumerate(self.tops))

    def format_element(self, a) -> str:
        return "(" + ",".join(f"{k}/{t}" for k, t in zip(a, self.tops)) + ")"

    def parse_element(self, text: str) -> tuple:
        body = text.strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise FormatError(f"bad product element {text!r}")
        parts = [p for p in body[1:-1].split(",") if p.strip()]
        if len(parts) != len(self.orders):
            raise FormatError(f"{text!r} has {len(parts)} coordinates, expected {len(self.orders)}")
        out = []
        for p, t in zip(parts, self.tops):
            try:
                k, d = (int(s) for s in p.split("/"))
            except ValueError:
                raise FormatError(f"bad coordinate {p!r} in {text!r}") from None
            if d != t or not 0 <= k <= t:
                raise FormatError(f"coordinate {p!r} of {text!r} is not in Ł{t + 1}")
            out.append(k)
        return tuple(out)

    def carrier_array(self) -> np.ndarray:
        """All elements as an ``(N, k)`` integer array, in enumeration order."""
        k = len(self.orders)
        if k == 0:
            return np.zeros((1, 0), dtype=np.int64)
        grids = np.meshgrid(*(np.arange(n) for n in self.orders), indexing="ij")
        return np.stack([g.reshape(-1) for g in grids], axis=1)

    def to_table(self) -> TableAlgebra:
        n = self.size
        if n > MAX_TABLE:
            raise SizeLimit(f"refusing to build a {n}x{n} operation table (limit {MAX_TABLE})")
        arr = self.carrier_array()
        radix = np.asarray(self._radix, dtype=np.int64)
        op = np.empty((n, n), dtype=np.int64)
        for lo in range(0, n, 256):
            op[lo:lo + 256] = self.oplus_array(arr[lo:lo + 256, None, :], arr[None, :, :]) @ radix
        ng = self.neg_array(arr) @ radix
        return TableAlgebra(op, ng, 0, names=[self.format_element(a) for a in self.elements])

    def oplus_array(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return np.minimum(a + b, np.asarray(self.tops))

    def neg_array(self, a: np.ndarray) -> np.ndarray:
        return np.asarray(self.tops) - a


class AxiomFailure(NamedTuple):
    law: str
    witness: tuple


def check_mv_axioms(algebra: FiniteMV) -> list[AxiomFailure]:
    """Check the MV-algebra axioms exhaustively.

    Returns one failure (with the first witness found) per violated law; an
    empty list means the tables define an MV-algebra.
    """
    t = algebra.to_table()
    op, ng, z = t.oplus_table, t.neg_table, t.zero
    n = t.size
    one = ng[z]
    fails = []

    def first(mask):
        hits = np.argwhere(mask)
        return tuple(int(i) for i in hits[0])

    x = np.arange(n)
    checks = [
        ("oplus-commutative", op != op.T),
        ("zero-identity", op[z, :] != x),
        ("involution", ng[ng] != x),
        ("one-absorbing", op[one, :] != one),
    ]
    for law, bad in checks:
        if bad.any():
            fails.append(AxiomFailure(law, first(bad)))
    # (x ⊕ y) ⊕ w versus x ⊕ (y ⊕ w), checked one x-slice at a time
    for i in range(n):
        bad = op[op[i, :], :] != op[i, op]
        if bad.any():
            j, w = first(bad)
            fails.append(AxiomFailure("oplus-associative", (i, j, w)))
            break
    lhs = op[ng[op[ng[:, None], x[None, :]]], x[None, :]]
    bad = lhs != lhs.T
    if bad.any():
        fails.append(AxiomFailure("lukasiewicz-axiom", first(bad)))
    if fails and t is not algebra:
        fails = [AxiomFailure(f.law, tuple(algebra.elements[i] for i in f.witness)) for f in fails]
    return fails


def require_mv(algebra: FiniteMV) -> None:
    if isinstance(algebra, ProductAlgebra):
        return  # coordinatewise chain operations; MV by construction
    fails = check_mv_axioms(algebra)
    if fails:
        law, wit = fails[0]
        raise AxiomViolation(f"not an MV-algebra: {law} fails at {wit}")


class DerivedLattice(NamedTuple):
    leq: np.ndarray
    join: np.ndarray
    meet: np.ndarray


def derived_lattice(algebra: FiniteMV) -> DerivedLattice:
    """Order, join and meet tables computed from ⊕ and ¬ (indices follow the table ids)."""
    require_mv(algebra)
    t = algebra.to_table()
    op, ng = t.oplus_table, t.neg_table
    x = np.arange(t.size)
    join = op[ng[op[ng[:, None], x[None, :]]], x[None, :]]
    meet = ng[join[ng[:, None], ng[None, :]]]
    return DerivedLattice(t.leq_matrix.copy(), join, meet)
