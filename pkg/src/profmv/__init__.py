"""Exact computations with finite MV-algebras: Łukasiewicz chains, ideals and
quotients, inverse limits and profinite completions, and the duality between
products of finite chains and multisets."""

from .algebra import (FiniteMV, ProductAlgebra, TableAlgebra, chain_algebra, check_mv_axioms,
                      derived_lattice, trivial_algebra)
from .chain import ChainElem, chain_embedding
from .decompose import decompose, is_simple
from .documents import Document, parse_document, serialize_document
from .duality import (F_mor, F_obj, H_mor, H_obj, check_naturality, epsilon, eta,
                      reflects_principal_maximal)
from .homs import ElementHom, MVHom, ProductHom, enumerate_homs, find_isomorphisms, identity_hom
from .ideal import (Ideal, IdealKind, classify_ideal, classify_maximal, coordinate_kernel,
                    direct_sum_ideal, enumerate_ideals, principal_ideal, quotient)
from .limits import (Cone, DirectedPoset, InverseSystem, check_universal_property,
                     finitely_approximable_probe, inverse_limit, profinite_completion,
                     validate_system)
from .multiset import Multiset, MultisetMorphism, compose, is_isomorphism, validate_morphism

__all__ = ["FiniteMV", "ProductAlgebra", "TableAlgebra", "chain_algebra", "check_mv_axioms",
           "derived_lattice", "trivial_algebra", "ChainElem", "chain_embedding", "decompose",
           "is_simple", "Document", "parse_document", "serialize_document", "F_mor", "F_obj",
           "H_mor", "H_obj", "check_naturality", "epsilon", "eta", "reflects_principal_maximal",
           "ElementHom", "MVHom", "ProductHom", "enumerate_homs", "find_isomorphisms",
           "identity_hom", "Ideal", "IdealKind", "classify_ideal", "classify_maximal",
           "coordinate_kernel", "direct_sum_ideal", "enumerate_ideals", "principal_ideal",
           "quotient", "Cone", "DirectedPoset", "InverseSystem", "check_universal_property",
           "finitely_approximable_probe", "inverse_limit", "profinite_completion",
           "validate_system", "Multiset", "MultisetMorphism", "compose", "is_isomorphism",
           "validate_morphism"]

__version__ = "0.1.0"
