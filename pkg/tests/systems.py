"""The three example inverse systems, their expected limits, and cones over them."""

from profmv.algebra import ProductAlgebra, chain_algebra
from profmv.homs import ElementHom, ProductHom, identity_hom
from profmv.limits import Cone, DirectedPoset, InverseSystem


def cube(k):
    return ProductAlgebra((f"x{i + 1}", 2) for i in range(k))


def constant_system(A, nodes=("a", "b", "c"), pairs=(("a", "c"), ("b", "c"))):
    poset = DirectedPoset.generated(nodes, pairs)
    return InverseSystem(poset, {i: A for i in nodes},
                         {p: identity_hom(A) for p in poset.leq})


def projection_chain():
    """Ł2³ -> Ł2² -> Ł2 forgetting the last coordinate each time."""
    A1, A2, A3 = cube(1), cube(2), cube(3)
    poset = DirectedPoset.generated([1, 2, 3], [(1, 2), (2, 3)])
    keep = lambda k: {f"x{i + 1}": f"x{i + 1}" for i in range(k)}  # noqa: E731
    return InverseSystem(poset, {1: A1, 2: A2, 3: A3}, {
        (1, 2): ProductHom(A2, A1, keep(1)),
        (2, 3): ProductHom(A3, A2, keep(2)),
        (1, 3): ProductHom(A3, A1, keep(1)),
    })


def broken_projection_chain():
    S = projection_chain()
    S.transitions[(1, 3)] = ProductHom(S.algebras[3], S.algebras[1], {"x1": "x3"})
    return S


def span_system():
    """Ł2 <- Ł2×Ł3 -> Ł3 with the two coordinate projections."""
    L2 = ProductAlgebra([("s", 2)])
    L3 = ProductAlgebra([("t", 3)])
    top = ProductAlgebra([("s", 2), ("t", 3)])
    poset = DirectedPoset.generated(["l", "r", "top"], [("l", "top"), ("r", "top")])
    return InverseSystem(poset, {"l": L2, "r": L3, "top": top}, {
        ("l", "top"): ProductHom(top, L2, {"s": "s"}),
        ("r", "top"): ProductHom(top, L3, {"t": "t"}),
    })


def examples():
    """(name, system, algebra the limit should be isomorphic to)."""
    L3 = chain_algebra(3)
    return [
        ("constant Ł3", constant_system(L3), L3),
        ("constant Ł2×Ł2", constant_system(cube(2)), cube(2)),
        ("projection chain", projection_chain(), cube(3)),
        ("span", span_system(), ProductAlgebra([("s", 2), ("t", 3)])),
    ]


def cones(name, S, limit):
    """Cones over ``S``: the limit cone itself plus one or two hand-built ones."""
    out = [Cone(limit.algebra, dict(limit.projections))]
    if name.startswith("constant"):
        A = S.algebras[S.poset.nodes[0]]
        out.append(Cone(A, {i: identity_hom(A) for i in S.poset.nodes}))
    if name == "projection chain":
        L2 = cube(1)
        diag = {i: ProductHom(L2, S.algebras[i], {f"x{k + 1}": "x1" for k in range(i)})
                for i in S.poset.nodes}
        out.append(Cone(L2, diag))
        out.append(Cone(S.algebras[3], {i: S.transition(i, 3) for i in S.poset.nodes}))
    if name == "span":
        top = S.algebras["top"]
        out.append(Cone(top, {i: S.transition(i, "top") for i in S.poset.nodes}))
        L2 = chain_algebra(2)
        legs = {"l": ElementHom(L2, S.algebras["l"], {0: (0,), 1: (1,)}),
                "r": ElementHom(L2, S.algebras["r"], {0: (0,), 1: (2,)}),
                "top": ElementHom(L2, top, {0: (0, 0), 1: (1, 2)})}
        out.append(Cone(L2, legs))
    return out
