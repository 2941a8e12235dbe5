import itertools

import pytest
from hypothesis import given, strategies as st

from profmv.algebra import ProductAlgebra, chain_algebra, check_mv_axioms
from profmv.errors import InvariantViolation, NotMaximal
from profmv.generators import products_up_to, scrambled_table
from profmv.homs import find_isomorphisms
from profmv.ideal import (Ideal, IdealKind, PrincipalAt, classify_ideal, classify_maximal,
                          coordinate_kernel, direct_sum_ideal, enumerate_ideals, ideal_violation,
                          is_ideal, make_ideal, maximal_ideals, principal_ideal, quotient)

from oracles import generated_ideal_literal, ideals_literal, is_ideal_literal


def product(*orders):
    return ProductAlgebra((f"x{i + 1}", n) for i, n in enumerate(orders))


def members(ideals):
    return sorted(sorted(I.members) for I in ideals)


def test_principal_ideal_examples():
    L5 = chain_algebra(5)
    assert principal_ideal(L5, 1).members == frozenset(L5.elements)
    assert principal_ideal(L5, 0).members == {0}
    P = product(2, 3)
    assert principal_ideal(P, (1, 0)).members == {(0, 0), (1, 0)}
    assert principal_ideal(P, (0, 1)).members == {(0, 0), (0, 1), (0, 2)}


def test_principal_matches_generated_closure(rng):
    for A in [chain_algebra(6), product(2, 3), product(3, 3), scrambled_table(product(2, 2, 3), rng)]:
        for a in A.elements:
            assert principal_ideal(A, a).members == generated_ideal_literal(A, [a])


def test_product_ideals_frozen():
    # literal subset filter: ideals of Ł2×Ł3 are {0}, Ł2×0, 0×Ł3, everything
    P = product(2, 3)
    lit = ideals_literal(P)
    assert sorted(map(len, lit)) == [1, 2, 3, 6]
    assert members(enumerate_ideals(P)) == sorted(sorted(S) for S in lit)


def test_enumeration_methods_agree(rng):
    for P in products_up_to(12):
        T = P.to_table()
        lit = sorted(sorted(S) for S in ideals_literal(T))
        assert members(enumerate_ideals(T, method="subsets")) == lit
        assert members(enumerate_ideals(T, method="principal")) == lit
        assert len(enumerate_ideals(P, method="product")) == len(lit) == 2 ** len(P.orders)
        S = scrambled_table(P, rng)
        assert len(enumerate_ideals(S)) == len(lit)


def test_ideal_check_agrees_with_literal_on_all_subsets():
    for A in [product(2, 2).to_table(), chain_algebra(4), product(2, 3).to_table()]:
        for r in range(A.size + 1):
            for S in itertools.combinations(A.elements, r):
                assert is_ideal(A, S) == is_ideal_literal(A, S)


def test_ideal_violations_name_the_law():
    L3 = chain_algebra(3)
    assert ideal_violation(L3, {1})[0] == "contains-zero"
    assert ideal_violation(L3, {0, 2})[0] == "down-closed"
    assert ideal_violation(L3, {0, 1})[0] == "oplus-closed"
    with pytest.raises(InvariantViolation):
        make_ideal(L3, {0, 1})


def test_classification_examples():
    P = product(2, 3)
    ideals = enumerate_ideals(P)
    kinds = [classify_ideal(P, I, ideals) for I in ideals]
    assert kinds == [IdealKind.PROPER_NOT_PRIME, IdealKind.MAXIMAL, IdealKind.MAXIMAL,
                     IdealKind.NOT_PROPER]
    L4 = chain_algebra(4)
    assert [classify_ideal(L4, I) for I in enumerate_ideals(L4)] == [IdealKind.MAXIMAL,
                                                                    IdealKind.NOT_PROPER]


def _prime_literal(A, S):
    out = [a for a in A.elements if a not in S]
    return len(out) > 0 and all(A.meet(x, y) not in S for x in out for y in out)


def test_prime_classification_against_definition():
    for P in products_up_to(12):
        ideals = enumerate_ideals(P)
        for I in ideals:
            kind = classify_ideal(P, I, ideals)
            if kind is IdealKind.PRIME:
                assert _prime_literal(P, I.members)
            elif kind is IdealKind.PROPER_NOT_PRIME:
                assert not _prime_literal(P, I.members)


def test_maximal_ideals_are_coordinate_kernels():
    for P in products_up_to(24):
        maxi = {I.members for I in maximal_ideals(P)}
        kernels = {coordinate_kernel(P, x).members for x in P.labels}
        assert maxi == kernels
        for x in P.labels:
            assert principal_ideal(P, P.separator(x)).members == coordinate_kernel(P, x).members
            assert classify_maximal(P, coordinate_kernel(P, x)) == PrincipalAt(x)


def test_classify_maximal_rejects_non_maximal():
    P = product(2, 2)
    with pytest.raises(NotMaximal):
        classify_maximal(P, Ideal(P, frozenset({(0, 0)})))
    assert direct_sum_ideal(P).members == frozenset(P.elements)


def test_quotient_examples():
    P = product(2, 3)
    # A / ker p_x is the coordinate chain
    for x, n in P.coords:
        Q, proj = quotient(P, coordinate_kernel(P, x))
        assert Q.size == n and check_mv_axioms(Q) == []
        assert find_isomorphisms(Q, chain_algebra(n))
        assert proj.check() is None
    Q0, proj0 = quotient(P, Ideal(P, frozenset({P.zero})))
    assert Q0.size == 6 and proj0.is_bijective()
    Qt, _ = quotient(P, direct_sum_ideal(P))
    assert Qt.is_trivial


def test_quotient_kernel_is_the_ideal():
    for P in products_up_to(12):
        for I in enumerate_ideals(P):
            Q, proj = quotient(P, I)
            assert proj.preimage({Q.zero}) == I.members
            assert Q.size * len(I) == P.size


@given(st.lists(st.integers(2, 5), min_size=1, max_size=3), st.randoms(use_true_random=False))
def test_principal_ideal_is_smallest_containing(orders, r):
    A = scrambled_table(product(*orders), r)
    a = r.choice(A.elements)
    I = principal_ideal(A, a)
    assert a in I and is_ideal(A, I.members)
    for J in enumerate_ideals(A, method="principal"):
        if a in J:
            assert I.members <= J.members
