"""Exact arithmetic on the finite Łukasiewicz chains Ł_n.

An element k/(n-1) of Ł_n is stored as the integer pair ``(num=k, order=n)``.
Nothing here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import FormatError, OrderMismatch

__all__ = [
    "ChainElem",
    "ChainEmbedding",
    "LatticeInfo",
    "chain_elements",
    "chain_embedding",
    "join",
    "lattice",
    "leq",
    "meet",
    "nat_scale",
    "neg",
    "ominus",
    "oplus",
    "otimes",
    "parse_chain_elem",
]


@dataclass(frozen=True, order=True)
class ChainElem:
    """The element ``num/(order-1)`` of the chain with ``order`` elements."""

    num: int
    order: int

    def __post_init__(self):
        if self.order < 2:
            raise ValueError(f"chain order must be >= 2, got {self.order}")
        if not 0 <= self.num <= self.order - 1:
            raise ValueError(f"numerator {self.num} out of range for Ł{self.order}")

    @property
    def top(self) -> int:
        return self.order - 1

    @property
    def value(self) -> Fraction:
        return Fraction(self.num, self.order - 1)

    @classmethod
    def zero(cls, order: int) -> ChainElem:
        return cls(0, order)

    @classmethod
    def one(cls, order: int) -> ChainElem:
        return cls(order - 1, order)

    def __str__(self):
        return f"{self.num}/{self.order - 1}"


def _same_order(a: ChainElem, b: ChainElem) -> int:
    if a.order != b.order:
        raise OrderMismatch(f"cannot combine elements of Ł{a.order} and Ł{b.order}")
    return a.order


def chain_elements(n: int) -> list[ChainElem]:
    return [ChainElem(k, n) for k in range(n)]


def parse_chain_elem(text: str) -> ChainElem:
    """Inverse of ``str``: ``"2/4"`` is 2/4 in Ł5 (the denominator is kept as written)."""
    try:
        k, d = text.strip().split("/")
        return ChainElem(int(k), int(d) + 1)
    except ValueError as exc:
        raise FormatError(f"bad chain element {text!r}, expected 'k/(n-1)'") from exc


def oplus(a: ChainElem, b: ChainElem) -> ChainElem:
    n = _same_order(a, b)
    return ChainElem(min(a.num + b.num, n - 1), n)


def neg(a: ChainElem) -> ChainElem:
    return ChainElem(a.order - 1 - a.num, a.order)


def otimes(a: ChainElem, b: ChainElem) -> ChainElem:
    n = _same_order(a, b)
    return ChainElem(max(a.num + b.num - (n - 1), 0), n)


def ominus(a: ChainElem, b: ChainElem) -> ChainElem:
    return otimes(a, neg(b))


def leq(a: ChainElem, b: ChainElem) -> bool:
    # x <= y iff ¬x ⊕ y = 1
    return oplus(neg(a), b) == ChainElem.one(_same_order(a, b))


def join(a: ChainElem, b: ChainElem) -> ChainElem:
    return oplus(neg(oplus(neg(a), b)), b)


def meet(a: ChainElem, b: ChainElem) -> ChainElem:
    return neg(join(neg(a), neg(b)))


class LatticeInfo(NamedTuple):
    leq: bool
    join: ChainElem
    meet: ChainElem


def lattice(a: ChainElem, b: ChainElem) -> LatticeInfo:
    """Order and lattice operations, all computed from ⊕ and ¬."""
    return LatticeInfo(leq(a, b), join(a, b), meet(a, b))


def nat_scale(a: ChainElem, r: int) -> ChainElem:
    """The r-fold sum a ⊕ ... ⊕ a; ``r = 0`` gives 0."""
    if r < 0:
        raise ValueError("scale factor must be a natural number")
    return ChainElem(min(r * a.num, a.order - 1), a.order)


@dataclass(frozen=True)
class ChainEmbedding:
    """The homomorphism Ł_n -> Ł_m, k/(n-1) |-> k*f/(m-1) with f = (m-1)/(n-1)."""

    source_order: int
    target_order: int

    @property
    def factor(self) -> int:
        return (self.target_order - 1) // (self.source_order - 1)

    def __call__(self, a: ChainElem) -> ChainElem:
        if a.order != self.source_order:
            raise OrderMismatch(f"embedding expects Ł{self.source_order}, got Ł{a.order}")
        return ChainElem(a.num * self.factor, self.target_order)

    def on_numerator(self, k: int) -> int:
        return k * self.factor


def chain_embedding(n: int, m: int) -> ChainEmbedding | None:
    """The unique homomorphism Ł_n -> Ł_m, or None when (n-1) does not divide (m-1)."""
    if n < 2 or m < 2:
        raise ValueError("chain orders must be >= 2")
    if (m - 1) % (n - 1):
        return None
    return ChainEmbedding(n, m)
