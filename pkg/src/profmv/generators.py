"""Random and exhaustive instance generators for tests and experiments."""

from __future__ import annotations

import random

from .algebra import ProductAlgebra, TableAlgebra
from .multiset import Multiset, MultisetMorphism


def scrambled_table(P: ProductAlgebra, rng: random.Random, anonymous: bool = True) -> TableAlgebra:
    """The table of ``P`` with element ids shuffled (and names hidden)."""
    T = P.to_table()
    perm = list(range(T.size))
    rng.shuffle(perm)
    S = T.relabel(perm)
    if anonymous:
        S = TableAlgebra(S.oplus_table, S.neg_table, S.zero, names=[f"e{i}" for i in range(S.size)])
    return S


def random_product(rng: random.Random, max_coords: int = 4, max_order: int = 5,
                   min_coords: int = 1) -> ProductAlgebra:
    k = rng.randint(min_coords, max_coords)
    return ProductAlgebra((f"x{i + 1}", rng.randint(2, max_order)) for i in range(k))


def factorizations(n: int, largest: int | None = None) -> list[tuple[int, ...]]:
    """Ways to write n as a product of factors >= 2, non-increasing."""
    largest = n if largest is None else largest
    if n == 1:
        return [()]
    out = []
    for f in range(min(n, largest), 1, -1):
        if n % f == 0:
            out += [(f,) + rest for rest in factorizations(n // f, f)]
    return out


def products_up_to(max_size: int) -> list[ProductAlgebra]:
    """One product of chains per isomorphism type of nontrivial finite MV-algebra of size <= max_size."""
    return [ProductAlgebra((f"x{i + 1}", n) for i, n in enumerate(f))
            for size in range(2, max_size + 1) for f in factorizations(size)]


def random_multiset(rng: random.Random, max_labels: int = 6, max_mult: int = 8,
                    prefix: str = "a") -> Multiset:
    k = rng.randint(1, max_labels)
    return Multiset({f"{prefix}{i + 1}": rng.randint(1, max_mult) for i in range(k)})


def random_morphism_into(rng: random.Random, target: Multiset, max_labels: int = 6,
                         max_mult: int = 8, prefix: str = "a") -> MultisetMorphism:
    """A valid morphism X -> target with a fresh random source X.

    Each source label picks a target label y and a multiplicity that is a
    multiple of μ(y) not exceeding ``max_mult``.
    """
    usable = [y for y in target if target[y] <= max_mult]
    if not usable:
        raise ValueError("no target label has multiplicity <= max_mult")
    k = rng.randint(1, max_labels)
    entries, mapping = {}, {}
    for i in range(k):
        x = f"{prefix}{i + 1}"
        y = rng.choice(usable)
        entries[x] = target[y] * rng.randint(1, max_mult // target[y])
        mapping[x] = y
    return MultisetMorphism(Multiset(entries), target, mapping)


def random_morphism(rng: random.Random, max_labels: int = 6, max_mult: int = 8) -> MultisetMorphism:
    Y = random_multiset(rng, max_labels, max_mult, prefix="b")
    return random_morphism_into(rng, Y, max_labels, max_mult, prefix="a")


def random_composable_pair(rng: random.Random, max_labels: int = 5,
                           max_mult: int = 8) -> tuple[MultisetMorphism, MultisetMorphism]:
    """(f, g) with f: X -> Y and g: Y -> Z, so that g ∘ f is defined."""
    Z = random_multiset(rng, max_labels, max_mult, prefix="c")
    g = random_morphism_into(rng, Z, max_labels, max_mult, prefix="b")
    f = random_morphism_into(rng, g.source, max_labels, max_mult, prefix="a")
    return f, g
