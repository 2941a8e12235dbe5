"""Text documents for algebras, multisets, homomorphisms and inverse systems.

A document is one JSON object whose ``kind`` key selects the schema; see
``docs/format.md`` for the full grammar. :func:`serialize_document` emits a
canonical layout, so ``serialize(parse(text)) == text`` for canonical text.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .algebra import FiniteMV, ProductAlgebra, TableAlgebra
from .errors import FormatError, MVError
from .homs import ElementHom, MVHom, ProductHom
from .limits import DirectedPoset, InverseSystem
from .multiset import Multiset, MultisetMorphism

KINDS = ("chain", "table_algebra", "product_algebra", "multiset",
         "multiset_morphism", "mv_hom", "inverse_system")


@dataclass(frozen=True)
class Document:
    kind: str
    body: Any

    def __eq__(self, other):
        return isinstance(other, Document) and self.kind == other.kind and self.body == other.body

    def __hash__(self):
        return hash(self.kind)


def _locate(text: str | None, key: str) -> tuple[int | None, int | None]:
    if not text:
        return None, None
    needle = json.dumps(key)
    for n, line in enumerate(text.splitlines(), 1):
        col = line.find(needle)
        if col >= 0:
            return n, col + 1
    return None, None


class _Parser:
    def __init__(self, text: str | None):
        self.text = text

    def fail(self, key: str, message: str):
        line, col = _locate(self.text, key)
        raise FormatError(f"{key!r}: {message}", line, col)

    def get(self, obj: dict, key: str, typ, where: str):
        if not isinstance(obj, dict):
            self.fail(where, "expected an object")
        if key not in obj:
            self.fail(where, f"missing key {key!r}")
        value = obj[key]
        if not isinstance(value, typ) or isinstance(value, bool) and typ is not bool:
            self.fail(key, f"expected {getattr(typ, '__name__', typ)}, got {type(value).__name__}")
        return value

    def check_keys(self, obj: dict, allowed: set, where: str):
        extra = sorted(set(obj) - allowed)
        if extra:
            self.fail(extra[0], f"unexpected key in {where}")

    def document(self, obj) -> Document:
        if not isinstance(obj, dict):
            raise FormatError("document must be a JSON object", 1, 1)
        kind = self.get(obj, "kind", str, "kind")
        if kind not in KINDS:
            self.fail("kind", f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
        return Document(kind, getattr(self, kind)(obj))

    def chain(self, obj) -> int:
        self.check_keys(obj, {"kind", "order"}, "chain")
        n = self.get(obj, "order", int, "chain")
        if n < 2:
            self.fail("order", f"chain order must be >= 2, got {n}")
        return n

    def algebra(self, obj, where: str) -> FiniteMV:
        kind = self.get(obj, "kind", str, where)
        if kind == "table_algebra":
            return self.table_algebra(obj)
        if kind == "product_algebra":
            return self.product_algebra(obj)
        self.fail(where, f"expected a table_algebra or product_algebra, got {kind!r}")

    def table_algebra(self, obj) -> TableAlgebra:
        self.check_keys(obj, {"kind", "elements", "zero", "neg", "oplus"}, "table_algebra")
        names = self.get(obj, "elements", list, "table_algebra")
        if not names or not all(isinstance(s, str) for s in names):
            self.fail("elements", "expected a nonempty list of element names")
        if len(set(names)) != len(names):
            self.fail("elements", "element names must be distinct")
        idx = {s: i for i, s in enumerate(names)}

        def lookup(name, key):
            if not isinstance(name, str) or name not in idx:
                self.fail(key, f"unknown element {name!r}")
            return idx[name]

        zero = lookup(self.get(obj, "zero", str, "table_algebra"), "zero")
        neg_obj = self.get(obj, "neg", dict, "table_algebra")
        missing = [s for s in names if s not in neg_obj]
        if missing:
            self.fail("neg", f"no entry for {missing[0]!r}")
        self.check_keys(neg_obj, set(names), "neg")
        neg = [lookup(neg_obj[s], "neg") for s in names]
        rows = self.get(obj, "oplus", list, "table_algebra")
        if len(rows) != len(names) or not all(isinstance(r, list) and len(r) == len(names) for r in rows):
            self.fail("oplus", f"expected {len(names)} rows of {len(names)} entries")
        op = [[lookup(v, "oplus") for v in r] for r in rows]
        return TableAlgebra(op, neg, zero, names=names)

    def product_algebra(self, obj) -> ProductAlgebra:
        self.check_keys(obj, {"kind", "coords"}, "product_algebra")
        coords = self.get(obj, "coords", list, "product_algebra")
        out = []
        for c in coords:
            if (not isinstance(c, list) or len(c) != 2 or not isinstance(c[0], str)
                    or not isinstance(c[1], int) or isinstance(c[1], bool)):
                self.fail("coords", f"coordinate {c!r} must be [label, order]")
            if c[1] < 2:
                self.fail("coords", f"coordinate {c[0]!r} has order {c[1]}; orders must be >= 2")
            out.append((c[0], c[1]))
        try:
            return ProductAlgebra(out)
        except FormatError as exc:
            self.fail("coords", str(exc))

    def entries(self, obj, key: str) -> Multiset:
        if not isinstance(obj, dict):
            self.fail(key, "expected an object of label: multiplicity")
        for label, sigma in obj.items():
            if not isinstance(sigma, int) or isinstance(sigma, bool):
                self.fail(label, f"multiplicity must be an integer, got {sigma!r}")
            if sigma < 1:
                self.fail(label, f"multiplicity {sigma} violates the rule σ ≥ 1")
        return Multiset(obj)

    def multiset(self, obj) -> Multiset:
        self.check_keys(obj, {"kind", "entries"}, "multiset")
        return self.entries(self.get(obj, "entries", dict, "multiset"), "entries")

    def multiset_morphism(self, obj) -> MultisetMorphism:
        self.check_keys(obj, {"kind", "source", "target", "map"}, "multiset_morphism")
        src = self.entries(self.get(obj, "source", dict, "multiset_morphism"), "source")
        tgt = self.entries(self.get(obj, "target", dict, "multiset_morphism"), "target")
        mapping = self.get(obj, "map", dict, "multiset_morphism")
        for k, v in mapping.items():
            if not isinstance(v, str):
                self.fail(k, f"image must be a label, got {v!r}")
        return MultisetMorphism(src, tgt, mapping)

    def hom_body(self, obj, source: FiniteMV, target: FiniteMV, where: str) -> MVHom:
        if ("dual" in obj) == ("map" in obj):
            self.fail(where, "exactly one of 'dual' or 'map' is required")
        try:
            if "dual" in obj:
                dual = self.get(obj, "dual", dict, where)
                if not (isinstance(source, ProductAlgebra) and isinstance(target, ProductAlgebra)):
                    self.fail("dual", "a dual map needs product algebras on both sides")
                return ProductHom(source, target, dual)
            pairs = self.get(obj, "map", list, where)
            mapping = {}
            for p in pairs:
                if not (isinstance(p, list) and len(p) == 2 and all(isinstance(s, str) for s in p)):
                    self.fail("map", f"entry {p!r} must be [source element, target element]")
                a = _parse_element(source, p[0])
                if a in mapping:
                    self.fail("map", f"element {p[0]!r} mapped twice")
                mapping[a] = _parse_element(target, p[1])
            return ElementHom(source, target, mapping)
        except FormatError:
            raise
        except MVError as exc:
            self.fail(where, str(exc))

    def mv_hom(self, obj) -> MVHom:
        self.check_keys(obj, {"kind", "source", "target", "dual", "map"}, "mv_hom")
        src = self.algebra(self.get(obj, "source", dict, "mv_hom"), "source")
        tgt = self.algebra(self.get(obj, "target", dict, "mv_hom"), "target")
        return self.hom_body(obj, src, tgt, "mv_hom")

    def inverse_system(self, obj) -> InverseSystem:
        self.check_keys(obj, {"kind", "nodes", "leq", "algebras", "transitions"}, "inverse_system")
        nodes = self.get(obj, "nodes", list, "inverse_system")
        if not nodes or not all(isinstance(n, str) for n in nodes) or len(set(nodes)) != len(nodes):
            self.fail("nodes", "expected a nonempty list of distinct node names")
        leq = self.get(obj, "leq", list, "inverse_system")
        pairs = []
        for p in leq:
            if not (isinstance(p, list) and len(p) == 2 and all(n in nodes for n in p)):
                self.fail("leq", f"entry {p!r} must be [lower, upper] with known nodes")
            pairs.append(tuple(p))
        algs_obj = self.get(obj, "algebras", dict, "inverse_system")
        self.check_keys(algs_obj, set(nodes), "algebras")
        algebras = {}
        for n in nodes:
            if n not in algs_obj:
                self.fail("algebras", f"no algebra for node {n!r}")
            algebras[n] = self.algebra(algs_obj[n], n)
        transitions = {}
        for t in self.get(obj, "transitions", list, "inverse_system"):
            lo, hi = self.get(t, "lower", str, "transitions"), self.get(t, "upper", str, "transitions")
            if lo not in algebras or hi not in algebras:
                self.fail("transitions", f"unknown node in transition {lo!r} <= {hi!r}")
            self.check_keys(t, {"lower", "upper", "dual", "map"}, "transitions")
            if (lo, hi) in transitions:
                self.fail("transitions", f"duplicate transition {lo!r} <= {hi!r}")
            transitions[(lo, hi)] = self.hom_body(t, algebras[hi], algebras[lo], "transitions")
        poset = DirectedPoset(nodes, [(n, n) for n in nodes] + pairs)
        return InverseSystem(poset, algebras, transitions)


def _parse_element(A: FiniteMV, text: str):
    if isinstance(A, TableAlgebra):
        if text not in A.names:
            raise FormatError(f"unknown element {text!r}")
        return A.names.index(text)
    if isinstance(A, ProductAlgebra):
        return A.parse_element(text)
    raise FormatError(f"cannot name elements of {A!r}")


def parse_document(text: str) -> Document:
    """Parse one document; raises :class:`FormatError` naming the line or key at fault."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(exc.msg, exc.lineno, exc.colno) from None
    return _Parser(text).document(obj)


def parse_value(obj: dict) -> Document:
    """Like :func:`parse_document`, for an already decoded JSON object."""
    return _Parser(None).document(obj)


# ---- serialization ---------------------------------------------------------

def _algebra_obj(A: FiniteMV) -> dict:
    if isinstance(A, ProductAlgebra):
        return {"kind": "product_algebra", "coords": [[lbl, n] for lbl, n in A.coords]}
    if isinstance(A, TableAlgebra):
        nm = A.names
        return {"kind": "table_algebra", "elements": list(nm), "zero": nm[A.zero],
                "neg": {nm[a]: nm[A.neg(a)] for a in A.elements},
                "oplus": [[nm[A.oplus(a, b)] for b in A.elements] for a in A.elements]}
    raise TypeError(f"cannot serialize {A!r}; convert it with to_table() first")


def _hom_fields(h: MVHom) -> dict:
    if isinstance(h, ProductHom):
        return {"dual": dict(h.dual)}
    fs, ft = h.source.format_element, h.target.format_element
    return {"map": [[fs(a), ft(h(a))] for a in h.source.elements]}


def document_object(doc: Document) -> dict:
    k, b = doc.kind, doc.body
    if k == "chain":
        return {"kind": k, "order": b}
    if k in ("table_algebra", "product_algebra"):
        return _algebra_obj(b)
    if k == "multiset":
        return {"kind": k, "entries": b.as_dict()}
    if k == "multiset_morphism":
        return {"kind": k, "source": b.source.as_dict(), "target": b.target.as_dict(), "map": dict(b.mapping)}
    if k == "mv_hom":
        return {"kind": k, "source": _algebra_obj(b.source), "target": _algebra_obj(b.target), **_hom_fields(b)}
    if k == "inverse_system":
        nodes = list(b.poset.nodes)
        trans = []
        for lo, hi in [(n, n) for n in nodes] + b.poset.strict_pairs():
            h = b.transitions[(lo, hi)]
            if lo == hi and all(h(a) == a for a in b.algebras[lo].elements):
                continue
            trans.append({"lower": lo, "upper": hi, **_hom_fields(h)})
        return {"kind": k, "nodes": nodes, "leq": [list(p) for p in b.poset.strict_pairs()],
                "algebras": {n: _algebra_obj(b.algebras[n]) for n in nodes}, "transitions": trans}
    raise ValueError(f"unknown kind {k!r}")


def _is_scalar(v) -> bool:
    return isinstance(v, (str, int, float, bool)) or v is None


def _flat(v) -> bool:
    if isinstance(v, list):
        if all(map(_is_scalar, v)):
            return True
        return len(v) <= 4 and all(isinstance(x, list) and len(x) <= 2 and all(map(_is_scalar, x))
                                   for x in v)
    if isinstance(v, dict):
        return all(map(_is_scalar, v.values()))
    return True


def _dump(v, indent: int) -> str:
    if _flat(v):
        return json.dumps(v, ensure_ascii=False)
    pad, inner = " " * indent, " " * (indent + 2)
    if isinstance(v, dict):
        items = [f"{inner}{json.dumps(k, ensure_ascii=False)}: {_dump(x, indent + 2)}" for k, x in v.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    items = [inner + _dump(x, indent + 2) for x in v]
    return "[\n" + ",\n".join(items) + "\n" + pad + "]"


def serialize_document(doc: Document) -> str:
    return _dump(document_object(doc), 0) + "\n"
