"""The contravariant functors between products of finite chains and multisets.

``H`` sends A = ∏_X Ł_{n_x} to the multiset of its [0,1]-valued homomorphisms
with principal kernel, each χ weighted by #χ(A) - 1. Such a χ is determined
by its kernel, a coordinate kernel ker p_x, so it is the projection p_x read
as a rational number; it is labeled ``p[x]``. ``F`` sends ⟨X, σ⟩ to
∏_X Ł_{σ(x)+1}. ``eta`` and ``epsilon`` are the unit and counit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .algebra import ProductAlgebra
from .errors import (EmptyMultiset, InvalidMorphism, InvariantViolation, MorphismCondition,
                     TrivialAlgebra)
from .homs import ElementHom, MVHom, ProductHom
from .ideal import Ideal, coordinate_kernel, enumerate_ideals, is_ideal, principal_ideal
from .multiset import Multiset, MultisetMorphism, validate_morphism


def hom_label(coordinate: str) -> str:
    return f"p[{coordinate}]"


@dataclass(frozen=True)
class RationalHom:
    """χ(f) = f(x)/(n_x - 1): the homomorphism A -> [0,1] with kernel ker p_x."""

    source: ProductAlgebra
    coordinate: str

    def __call__(self, f) -> Fraction:
        i = self.source.label_index(self.coordinate)
        return Fraction(f[i], self.source.tops[i])

    @property
    def image_order(self) -> int:
        return self.source.order_of(self.coordinate)

    @property
    def label(self) -> str:
        return hom_label(self.coordinate)

    def kernel(self) -> Ideal:
        return Ideal(self.source, frozenset(f for f in self.source.elements if self(f) == 0))

    def image(self) -> frozenset:
        return frozenset(self(f) for f in self.source.elements)


def _require_nontrivial(A: ProductAlgebra) -> None:
    if not isinstance(A, ProductAlgebra):
        raise TypeError(f"expected a ProductAlgebra, got {type(A).__name__}")
    if not A.labels:
        raise TrivialAlgebra("the one-element algebra has no principal-kernel homomorphisms")


def principal_kernel_homs(A: ProductAlgebra) -> list[RationalHom]:
    """The set H_F(A), one homomorphism per coordinate."""
    _require_nontrivial(A)
    return [RationalHom(A, x) for x in A.labels]


def H_obj(A: ProductAlgebra) -> Multiset:
    """⟨H_F(A), σ_A⟩ with σ_A(χ) = #χ(A) - 1 = n_x - 1."""
    return Multiset({chi.label: chi.image_order - 1 for chi in principal_kernel_homs(A)})


def F_obj(X: Multiset) -> ProductAlgebra:
    if not len(X):
        raise EmptyMultiset("F needs a nonempty multiset")
    return ProductAlgebra((x, sigma + 1) for x, sigma in X.items())


def _kernel_preimage_label(phi: MVHom, x: str) -> str | None:
    """Label y of phi.source with phi^{-1}(ker p_x) = ker p_y, or None."""
    if isinstance(phi, ProductHom):
        return phi.preimage_of_kernel(x)
    B, A = phi.source, phi.target
    i = A.label_index(x)
    pre = frozenset(f for f in B.elements if phi(f)[i] == 0)
    for y in B.labels:
        if coordinate_kernel(B, y).members == pre:
            return y
    return None


def reflects_principal_maximal(phi: MVHom) -> bool:
    """Whether the preimage of every principal maximal ideal of the target is one of the source."""
    _require_nontrivial(phi.source)
    _require_nontrivial(phi.target)
    return all(_kernel_preimage_label(phi, x) is not None for x in phi.target.labels)


def reflects_principal_ideals(phi: MVHom) -> bool:
    """Diagnostic: the stronger condition on every principal ideal of the target."""
    B, A = phi.source, phi.target
    for J in enumerate_ideals(A):
        pre = phi.preimage(J.members)
        if not is_ideal(B, pre):
            return False
        top = B.zero
        for f in pre:
            top = B.oplus(top, f)
        if principal_ideal(B, top).members != pre:
            return False
    return True


def H_mor(phi: MVHom) -> MultisetMorphism:
    """For φ: B -> A reflecting principal maximal ideals, χ |-> χ∘φ, as a map H(A) -> H(B)."""
    B, A = phi.source, phi.target
    _require_nontrivial(B)
    _require_nontrivial(A)
    mapping = {}
    for x in A.labels:
        y = _kernel_preimage_label(phi, x)
        if y is None:
            raise MorphismCondition(f"preimage of ker p_{x} is not a principal maximal ideal")
        mapping[hom_label(x)] = hom_label(y)
    m = MultisetMorphism(H_obj(A), H_obj(B), mapping)
    v = validate_morphism(m)
    if not v:
        raise InvariantViolation(f"H(φ) fails at {v.witness}: {v.reason}")
    return m


def F_mor(phi: MultisetMorphism) -> ProductHom:
    """For φ: ⟨X,σ⟩ -> ⟨Y,μ⟩, the map F(Y) -> F(X), f |-> (x |-> f(φ(x)))."""
    v = validate_morphism(phi)
    if not v:
        raise InvalidMorphism(f"invalid multiset morphism at {v.witness!r}: {v.reason}")
    return ProductHom(F_obj(phi.target), F_obj(phi.source), phi.mapping)


def eta(X: Multiset) -> MultisetMorphism:
    """x |-> the evaluation f |-> f(x), i.e. the projection hom at coordinate x."""
    A = F_obj(X)
    by_coordinate = {chi.coordinate: chi.label for chi in principal_kernel_homs(A)}
    return MultisetMorphism(X, H_obj(A), {x: by_coordinate[x] for x in X})


def epsilon(A: ProductAlgebra) -> ProductHom:
    """A -> F(H(A)), f |-> (χ |-> χ(f)).

    χ = p_x takes values in Ł_{n_x}, the coordinate χ of F(H(A)), and χ(f)
    has numerator f(x) there, so this is the dual map χ |-> x.
    """
    homs = principal_kernel_homs(A)
    target = F_obj(H_obj(A))
    return ProductHom(A, target, {chi.label: chi.coordinate for chi in homs})


def epsilon_literal(A: ProductAlgebra) -> ElementHom:
    """epsilon evaluated element by element through the rational homomorphisms."""
    homs = principal_kernel_homs(A)
    target = F_obj(H_obj(A))
    out = {}
    for f in A.elements:
        values = {chi.label: chi(f) for chi in homs}
        out[f] = tuple(int(values[lbl] * (n - 1)) for lbl, n in target.coords)
    return ElementHom(A, target, out)


class NaturalityReport(NamedTuple):
    square: str
    ok: bool
    witness: object = None

    def __bool__(self):
        return self.ok


def check_eta_naturality(phi: MultisetMorphism) -> NaturalityReport:
    """H(F(φ))(η_X(x)) = η_Y(φ(x)) for every x."""
    left = H_mor(F_mor(phi))
    eta_x, eta_y = eta(phi.source), eta(phi.target)
    for x in phi.source:
        if left(eta_x(x)) != eta_y(phi(x)):
            return NaturalityReport("eta", False, x)
    return NaturalityReport("eta", True)


def check_epsilon_naturality(phi: MVHom) -> NaturalityReport:
    """F(H(φ))(ε_B(f)) = ε_A(φ(f)) for every f in B, where φ: B -> A."""
    B, A = phi.source, phi.target
    FH = F_mor(H_mor(phi))
    eps_b, eps_a = epsilon(B), epsilon(A)
    if isinstance(phi, ProductHom):
        arr = B.carrier_array()
        left = FH.apply_array(eps_b.apply_array(arr))
        right = eps_a.apply_array(phi.apply_array(arr))
        bad = np.flatnonzero((left != right).any(axis=1))
        if bad.size:
            return NaturalityReport("epsilon", False, tuple(arr[bad[0]].tolist()))
        return NaturalityReport("epsilon", True)
    for f in B.elements:
        if FH(eps_b(f)) != eps_a(phi(f)):
            return NaturalityReport("epsilon", False, f)
    return NaturalityReport("epsilon", True)


def check_naturality(phi) -> list[NaturalityReport]:
    """Both squares: a multiset morphism checks the eta square and the epsilon
    square for F(φ); an MV-homomorphism checks the epsilon square and the eta
    square for H(φ)."""
    if isinstance(phi, MultisetMorphism):
        return [check_eta_naturality(phi), check_epsilon_naturality(F_mor(phi))]
    if isinstance(phi, MVHom):
        return [check_epsilon_naturality(phi), check_eta_naturality(H_mor(phi))]
    raise TypeError(f"cannot check naturality of {type(phi).__name__}")
