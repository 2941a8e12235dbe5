import pytest
from hypothesis import given, strategies as st

from profmv.algebra import ProductAlgebra, chain_algebra
from profmv.errors import CompositionMismatch, InvalidMorphism, SizeLimit
from profmv.generators import products_up_to, scrambled_table
from profmv.homs import (ElementHom, ProductHom, enumerate_homs, find_isomorphisms,
                         identity_hom, is_isomorphic)

from oracles import all_homs_literal


def product(*orders, prefix="x"):
    return ProductAlgebra((f"{prefix}{i + 1}", n) for i, n in enumerate(orders))


def as_maps(homs):
    return sorted(tuple(sorted(h.mapping().items())) for h in homs)


def literal_maps(A, B):
    return sorted(tuple(sorted(h.items())) for h in all_homs_literal(A, B))


def test_chain_hom_counts_frozen():
    # frozen from the literal filter over all maps
    assert len(all_homs_literal(chain_algebra(3), chain_algebra(5))) == 1
    assert len(all_homs_literal(chain_algebra(3), chain_algebra(4))) == 0
    assert len(enumerate_homs(chain_algebra(3), chain_algebra(5))) == 1
    assert enumerate_homs(chain_algebra(3), chain_algebra(4)) == []


def test_product_to_chain_two_projections():
    A, B = product(2, 3), product(3, prefix="y")
    dual = enumerate_homs(A, B, method="dual")
    brute = enumerate_homs(A.to_table(), B.to_table(), method="brute")
    assert len(dual) == len(brute) == 2
    # frozen: Ł2 -> Ł3 exists, Ł3 -> Ł3 exists
    assert {h.dual["y1"] for h in dual} == {"x1", "x2"}


def test_brute_force_matches_literal_filter():
    pairs = [(chain_algebra(n), chain_algebra(m)) for n in range(2, 6) for m in range(2, 6)]
    pairs += [(product(2, 2).to_table(), chain_algebra(3)),
              (product(2, 3).to_table(), product(2, 2).to_table()),
              (chain_algebra(3), product(2, 3).to_table())]
    for A, B in pairs:
        assert as_maps(enumerate_homs(A, B, method="brute")) == literal_maps(A, B)


def test_dual_route_matches_brute_force():
    small = [P for P in products_up_to(8)]
    for A in small:
        for B in small:
            dual = enumerate_homs(A, B, method="dual")
            brute = enumerate_homs(A, B, method="brute")
            assert as_maps(dual) == as_maps(brute), (A, B)


def test_every_enumerated_map_is_a_hom():
    for A in products_up_to(6):
        for B in products_up_to(6):
            for h in enumerate_homs(A, B):
                assert h.check() is None
                assert h.is_hom()


def test_scrambled_source_hom_count(rng):
    P = product(2, 3)
    T = scrambled_table(P, rng)
    assert len(enumerate_homs(T, chain_algebra(5), method="brute")) == len(
        enumerate_homs(P, product(5), method="dual"))


def test_product_hom_evaluation():
    A, B = product(2, 3), product(3, 5, prefix="y")
    h = ProductHom(A, B, {"y1": "x1", "y2": "x2"})
    assert h((1, 1)) == (2, 2)
    assert h((0, 2)) == (0, 4)
    with pytest.raises(InvalidMorphism):
        ProductHom(A, product(4, prefix="y"), {"y1": "x2"})
    with pytest.raises(InvalidMorphism):
        ProductHom(A, B, {"y1": "x1"})


def test_product_hom_check_agrees_with_generic():
    A, B = product(2, 3), product(3, 5, 2, prefix="y")
    for h in enumerate_homs(A, B, method="dual"):
        assert h.check() is None
        assert ElementHom(A, B, h.mapping()).check() is None


def test_check_reports_broken_map():
    L3 = chain_algebra(3)
    bad = ElementHom(L3, L3, {0: 0, 1: 2, 2: 2})
    v = bad.check()
    assert v is not None and v.law == "neg"
    assert not ElementHom(L3, L3, {0: 2, 1: 1, 2: 0}).is_hom()


def test_compose_and_identity():
    A, B, C = product(2), product(3, prefix="y"), product(5, prefix="z")
    f = ProductHom(A, B, {"y1": "x1"})
    g = ProductHom(B, C, {"z1": "y1"})
    gf = g.compose(f)
    assert isinstance(gf, ProductHom)
    assert all(gf(a) == g(f(a)) for a in A.elements)
    assert f.compose(identity_hom(A)) == f and identity_hom(B).compose(f) == f
    with pytest.raises(CompositionMismatch):
        f.compose(g)
    L = chain_algebra(4)
    ident = identity_hom(L)
    assert all(ident(a) == a for a in L.elements)


def test_isomorphisms():
    P = product(3, 2)
    Q = product(2, 3, prefix="y")
    assert len(find_isomorphisms(P, Q)) == 1
    assert len(find_isomorphisms(product(2, 2), product(2, 2, prefix="y"))) == 2
    assert not is_isomorphic(chain_algebra(4), product(2, 2).to_table())


def test_brute_force_cap():
    with pytest.raises(SizeLimit):
        enumerate_homs(chain_algebra(17), chain_algebra(2), method="brute")
    assert len(enumerate_homs(chain_algebra(17), chain_algebra(17), method="brute",
                              max_carrier=17)) == 1


@given(st.lists(st.integers(2, 4), min_size=1, max_size=2),
       st.lists(st.integers(2, 5), min_size=1, max_size=2))
def test_hom_count_is_product_of_divisor_options(src, tgt):
    A, B = product(*src), product(*tgt, prefix="y")
    expected = 1
    for m in tgt:
        expected *= sum((m - 1) % (n - 1) == 0 for n in src)
    assert len(enumerate_homs(A, B)) == expected


@given(st.lists(st.integers(2, 4), min_size=1, max_size=3), st.data())
def test_image_and_injectivity(orders, data):
    A = product(*orders)
    k = len(orders)
    # each x_i feeds a copy of Ł_{2n-1}; extra coordinates pick any source with order 2
    B = product(*[n * 2 - 1 for n in orders], 2, prefix="y")
    dual = {f"y{i + 1}": f"x{i + 1}" for i in range(k)}
    twos = [x for x, n in A.coords if n == 2]
    if not twos:
        B = product(*[n * 2 - 1 for n in orders], prefix="y")
    else:
        dual[f"y{k + 1}"] = data.draw(st.sampled_from(twos))
    h = ProductHom(A, B, dual)
    assert h.is_injective()
    assert h.image() == frozenset(h(a) for a in A.elements)
    assert h.check() is None
