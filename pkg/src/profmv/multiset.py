"""The category of multisets ⟨X, σ⟩ with divisibility-respecting maps."""

from __future__ import annotations

from typing import Mapping, NamedTuple

from .errors import CompositionMismatch, InvalidMorphism


class Multiset:
    """A finite labeled multiset; every multiplicity is an integer >= 1.

    Multiplicity 0 is rejected: it would dualize to the one-element chain.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[str, int]):
        clean = {}
        for label, sigma in entries.items():
            if not isinstance(label, str):
                raise ValueError(f"multiset labels must be strings, got {label!r}")
            if isinstance(sigma, bool) or not isinstance(sigma, int):
                raise ValueError(f"multiplicity of {label!r} must be an integer, got {sigma!r}")
            if sigma < 1:
                raise ValueError(f"multiplicity of {label!r} is {sigma}; multiplicities must be >= 1")
            clean[label] = sigma
        self._entries = dict(sorted(clean.items()))

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self._entries)

    def items(self):
        return self._entries.items()

    def as_dict(self) -> dict[str, int]:
        return dict(self._entries)

    def __getitem__(self, label: str) -> int:
        return self._entries[label]

    def __contains__(self, label) -> bool:
        return label in self._entries

    def __iter__(self):
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other):
        return isinstance(other, Multiset) and self._entries == other._entries

    def __hash__(self):
        return hash(tuple(self._entries.items()))

    def __repr__(self):
        inner = ", ".join(f"{k}:{v}" for k, v in self._entries.items())
        return f"Multiset({{{inner}}})"


class Validation(NamedTuple):
    ok: bool
    witness: str | None = None
    reason: str | None = None

    def __bool__(self):
        return self.ok


class MultisetMorphism:
    """A map φ: X -> Y with μ(φ(x)) | σ(x). Construction does not validate."""

    __slots__ = ("source", "target", "mapping")

    def __init__(self, source: Multiset, target: Multiset, mapping: Mapping[str, str]):
        self.source = source
        self.target = target
        self.mapping = dict(sorted(mapping.items()))

    def __call__(self, label: str) -> str:
        return self.mapping[label]

    def __eq__(self, other):
        return (isinstance(other, MultisetMorphism) and self.source == other.source
                and self.target == other.target and self.mapping == other.mapping)

    def __hash__(self):
        return hash((self.source, self.target, tuple(self.mapping.items())))

    def __repr__(self):
        inner = ", ".join(f"{k}->{v}" for k, v in self.mapping.items())
        return f"MultisetMorphism({inner})"


def validate_morphism(m: MultisetMorphism) -> Validation:
    for x in m.source:
        if x not in m.mapping:
            return Validation(False, x, "not total")
        y = m.mapping[x]
        if y not in m.target:
            return Validation(False, x, f"image {y!r} is not a target label")
        if m.source[x] % m.target[y]:
            return Validation(False, x, f"{m.target[y]} does not divide {m.source[x]}")
    extra = sorted(set(m.mapping) - set(m.source.labels))
    if extra:
        return Validation(False, extra[0], "not a source label")
    return Validation(True)


def _require_valid(m: MultisetMorphism) -> None:
    v = validate_morphism(m)
    if not v:
        raise InvalidMorphism(f"invalid multiset morphism at {v.witness!r}: {v.reason}")


def identity(X: Multiset) -> MultisetMorphism:
    return MultisetMorphism(X, X, {x: x for x in X})


def compose(g: MultisetMorphism, f: MultisetMorphism) -> MultisetMorphism:
    """g ∘ f."""
    if f.target != g.source:
        raise CompositionMismatch("target of the first morphism is not the source of the second")
    _require_valid(f)
    _require_valid(g)
    return MultisetMorphism(f.source, g.target, {x: g.mapping[y] for x, y in f.mapping.items()})


def is_isomorphism(m: MultisetMorphism) -> bool:
    _require_valid(m)
    images = list(m.mapping.values())
    if len(set(images)) != len(images) or len(images) != len(m.target):
        return False
    return all(m.target[m.mapping[x]] == m.source[x] for x in m.source)


def inverse(m: MultisetMorphism) -> MultisetMorphism:
    if not is_isomorphism(m):
        raise InvalidMorphism("morphism is not an isomorphism")
    return MultisetMorphism(m.target, m.source, {y: x for x, y in m.mapping.items()})
