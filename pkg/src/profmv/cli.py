"""Command-line interface.

Exit codes: 0 on success, 1 on a domain error (or a failed check), 2 on a
format error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import TextIO

from .algebra import FiniteMV, ProductAlgebra, chain_algebra, check_mv_axioms
from .decompose import decompose
from .documents import Document, parse_document, serialize_document
from .duality import (F_mor, F_obj, H_mor, H_obj, check_naturality, epsilon, eta,
                      reflects_principal_maximal)
from .errors import FormatError, MVError
from .homs import MAX_BRUTE_FORCE, ProductHom, enumerate_homs, identity_hom
from .ideal import IdealKind, PrincipalAt, classify_ideal, classify_maximal, enumerate_ideals
from .limits import MAX_COMPLETION, finitely_approximable_probe, inverse_limit, profinite_completion
from .multiset import identity, is_isomorphism, validate_morphism

TICK, CROSS = "✓", "✗"


class _Failed(Exception):
    """A check ran and reported failure."""


def _load(path: str) -> Document:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
    except UnicodeDecodeError:
        raise FormatError(f"{path} is not UTF-8 text") from None
    return parse_document(text)


def _algebra(doc: Document) -> FiniteMV:
    if doc.kind == "chain":
        return chain_algebra(doc.body)
    if doc.kind in ("table_algebra", "product_algebra"):
        return doc.body
    raise FormatError(f"expected an algebra document, got kind {doc.kind!r}")


def _as_product(A: FiniteMV, cap: int) -> ProductAlgebra:
    return A if isinstance(A, ProductAlgebra) else decompose(A, max_carrier=cap)[0]


def _cap(args, default: int = MAX_BRUTE_FORCE) -> int:
    return default if args.max_carrier is None else args.max_carrier


def _emit(out: TextIO, doc: Document):
    out.write(serialize_document(doc))


def _mark(ok: bool) -> str:
    return TICK if ok else CROSS


def cmd_chain_table(args, out):
    if args.n < 2:
        raise MVError(f"chain order must be >= 2, got {args.n}")
    _emit(out, Document("table_algebra", chain_algebra(args.n)))


def cmd_check_axioms(args, out):
    A = _algebra(_load(args.file))
    fails = check_mv_axioms(A)
    if not fails:
        out.write(f"MV-algebra: {TICK} ({A.size} elements)\n")
        return
    for law, wit in fails:
        out.write(f"{CROSS} {law} at ({', '.join(A.format_element(w) for w in wit)})\n")
    raise _Failed


def cmd_decompose(args, out):
    A = _algebra(_load(args.file))
    P, iso = decompose(A, max_carrier=_cap(args))
    _emit(out, Document("mv_hom", iso) if args.iso else Document("product_algebra", P))


def cmd_ideals(args, out):
    A = _algebra(_load(args.file))
    ideals = enumerate_ideals(A, max_carrier=_cap(args))
    for k, I in enumerate(ideals, 1):
        kind = classify_ideal(A, I, ideals)
        out.write(f"ideal {k}\t{kind.value}\tsize {len(I)}\t{I.describe()}\n")


def cmd_maxideals(args, out):
    A = _algebra(_load(args.file))
    ideals = enumerate_ideals(A, max_carrier=_cap(args))
    maxi = [I for I in ideals if classify_ideal(A, I, ideals) is IdealKind.MAXIMAL]
    for I in maxi:
        if isinstance(A, ProductAlgebra):
            where = classify_maximal(A, I, ideals)
            tag = f"ker p[{where.label}]" if isinstance(where, PrincipalAt) else "contains direct sum"
            out.write(f"{tag}\tsize {len(I)}\t{I.describe()}\n")
        else:
            out.write(f"maximal\tsize {len(I)}\t{I.describe()}\n")


def cmd_dualize(args, out):
    doc = _load(args.file)
    if doc.kind == "mv_hom":
        _emit(out, Document("multiset_morphism", H_mor(doc.body)))
        return
    _emit(out, Document("multiset", H_obj(_as_product(_algebra(doc), _cap(args)))))


def cmd_realize(args, out):
    doc = _load(args.file)
    if doc.kind == "multiset":
        _emit(out, Document("product_algebra", F_obj(doc.body)))
    elif doc.kind == "multiset_morphism":
        _emit(out, Document("mv_hom", F_mor(doc.body)))
    else:
        raise FormatError(f"realize expects a multiset or multiset_morphism, got {doc.kind!r}")


def cmd_homs(args, out):
    A = _algebra(_load(args.source))
    B = _algebra(_load(args.target))
    homs = enumerate_homs(A, B, max_carrier=_cap(args))
    out.write(f"{len(homs)} homomorphism(s)\n")
    for h in homs:
        out.write(("dual: " if isinstance(h, ProductHom) else "map: ") + h.describe() + "\n")


def _iso_line(out, name, ok):
    out.write(f"{name}: {_mark(ok)}\n")
    return ok


def cmd_check_duality(args, out):
    doc = _load(args.file)
    ok = True
    if doc.kind == "multiset_morphism":
        phi = doc.body
        v = validate_morphism(phi)
        ok &= _iso_line(out, "valid morphism", bool(v))
        if not v:
            raise _Failed
        reports = check_naturality(phi)
    elif doc.kind == "mv_hom":
        phi = doc.body
        refl = reflects_principal_maximal(phi)
        ok &= _iso_line(out, "reflects principal maximal ideals", refl)
        if not refl:
            raise _Failed
        reports = check_naturality(phi)
    else:
        if doc.kind == "multiset":
            X = doc.body
            A = F_obj(X)
        else:
            A = _as_product(_algebra(doc), _cap(args))
            X = H_obj(A)
        e = eta(X)
        ok &= _iso_line(out, "eta iso", is_isomorphism(e))
        eps = epsilon(A)
        ok &= _iso_line(out, "epsilon iso", eps.check() is None and eps.is_bijective())
        reports = check_naturality(identity(X)) + check_naturality(identity_hom(A))
    nat = all(reports)
    ok &= _iso_line(out, "naturality", nat)
    if not nat:
        for r in reports:
            if not r:
                out.write(f"  {r.square} square fails at {r.witness}\n")
    if not ok:
        raise _Failed


def cmd_limit(args, out):
    doc = _load(args.file)
    if doc.kind != "inverse_system":
        raise FormatError(f"limit expects an inverse_system, got {doc.kind!r}")
    L = inverse_limit(doc.body).algebra
    _emit(out, Document("table_algebra", L.to_table()))


def cmd_completion(args, out):
    A = _algebra(_load(args.file))
    c = profinite_completion(A, max_carrier=_cap(args, MAX_COMPLETION))
    out.write(f"algebra: {A.size} elements\n")
    out.write(f"congruences: {len(c.system.poset.nodes)}\n")
    out.write(f"completion: {c.algebra.size} elements\n")
    out.write(f"e injective: {_mark(c.e.is_injective())}\n")
    out.write(f"e surjective: {_mark(c.e.is_surjective())}\n")
    out.write(f"e homomorphism: {_mark(c.e.check() is None)}\n")


def cmd_probe_fa(args, out):
    A = _algebra(_load(args.file))
    ok = finitely_approximable_probe(A, max_carrier=_cap(args, MAX_COMPLETION))
    out.write(f"finitely approximable: {'true' if ok else 'false'}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="profmv",
        description="Finite MV-algebras, products of Łukasiewicz chains and their multiset duals.")
    ap.add_argument("--max-carrier", type=int, default=None, metavar="N",
                    help=f"carrier cap for brute-force searches (default {MAX_BRUTE_FORCE}, "
                         f"{MAX_COMPLETION} for completions)")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, help, *files):
        p = sub.add_parser(name, help=help)
        for f in files:
            p.add_argument(f)
        p.set_defaults(func=func)
        return p

    p = add("chain-table", cmd_chain_table, "print the operation tables of Ł_n")
    p.add_argument("n", type=int)
    add("check-axioms", cmd_check_axioms, "check the MV-algebra axioms", "file")
    p = add("decompose", cmd_decompose, "split an algebra into a product of chains", "file")
    p.add_argument("--iso", action="store_true", help="print the isomorphism instead of the product")
    add("ideals", cmd_ideals, "list and classify all ideals", "file")
    add("maxideals", cmd_maxideals, "list the maximal ideals", "file")
    add("dualize", cmd_dualize, "apply H to an algebra or homomorphism", "file")
    add("realize", cmd_realize, "apply F to a multiset or multiset morphism", "file")
    add("homs", cmd_homs, "enumerate homomorphisms", "source", "target")
    add("check-duality", cmd_check_duality, "check unit, counit and naturality", "file")
    add("limit", cmd_limit, "inverse limit of an inverse system", "file")
    add("completion", cmd_completion, "profinite completion of a finite algebra", "file")
    add("probe-fa", cmd_probe_fa, "test finite approximability", "file")
    return ap


def run_command(argv: list[str], out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, out)
    except _Failed:
        return 1
    except FormatError as exc:
        err.write(f"format error: {exc}\n")
        return 2
    except MVError as exc:
        err.write(f"error: {exc}\n")
        return 1
    return 0


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
