import json
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from profmv.algebra import ProductAlgebra, chain_algebra
from profmv.documents import Document, parse_document, parse_value, serialize_document
from profmv.errors import FormatError
from profmv.generators import random_morphism, random_multiset, random_product, scrambled_table
from profmv.homs import ElementHom, enumerate_homs
from profmv.multiset import Multiset

from systems import examples

CORPUS = sorted((Path(__file__).parent.parent / "docs" / "corpus").glob("*.json"))


def test_corpus_present():
    assert len(CORPUS) >= 10
    assert {parse_document(p.read_text()).kind for p in CORPUS} == {
        "chain", "table_algebra", "product_algebra", "multiset", "multiset_morphism",
        "mv_hom", "inverse_system"}


@pytest.mark.parametrize("path", CORPUS, ids=[p.stem for p in CORPUS])
def test_corpus_round_trip(path):
    text = path.read_text(encoding="utf-8")
    doc = parse_document(text)
    assert serialize_document(doc) == text
    assert parse_document(serialize_document(doc)) == doc


def test_documented_examples():
    d = parse_document('{"kind":"multiset","entries":{"a":1,"b":2}}')
    assert d == Document("multiset", Multiset({"a": 1, "b": 2}))
    d = parse_document('{"kind":"product_algebra","coords":[["x",2],["y",3]]}')
    assert d.body == ProductAlgebra([("x", 2), ("y", 3)])
    with pytest.raises(FormatError, match="σ ≥ 1"):
        parse_document('{"kind":"multiset","entries":{"a":0}}')


def test_errors_carry_position():
    with pytest.raises(FormatError) as exc:
        parse_document('{"kind": "multiset",\n "entries": {"a": 1,}}')
    assert exc.value.line == 2
    text = '{\n  "kind": "multiset",\n  "entries": {"a": 1, "b": -2}\n}'
    with pytest.raises(FormatError) as exc:
        parse_document(text)
    assert exc.value.line == 3 and "'b'" in str(exc.value)
    assert str(exc.value).startswith("line 3, column")


@pytest.mark.parametrize("text, key", [
    ('{"entries": {}}', "kind"),
    ('{"kind": "banana"}', "kind"),
    ('{"kind": "chain", "order": 1}', "order"),
    ('{"kind": "chain", "order": true}', "order"),
    ('{"kind": "chain", "order": 3, "extra": 1}', "extra"),
    ('{"kind": "product_algebra", "coords": [["x", 2], ["x", 3]]}', "coords"),
    ('{"kind": "product_algebra", "coords": [["x", 1]]}', "coords"),
    ('{"kind": "table_algebra", "elements": ["0", "1"], "zero": "0", "neg": {"0": "1"},'
     ' "oplus": [["0", "1"], ["1", "1"]]}', "neg"),
    ('{"kind": "table_algebra", "elements": ["0", "1"], "zero": "2", "neg": {"0": "1", "1": "0"},'
     ' "oplus": [["0", "1"], ["1", "1"]]}', "zero"),
    ('{"kind": "table_algebra", "elements": ["0", "1"], "zero": "0", "neg": {"0": "1", "1": "0"},'
     ' "oplus": [["0", "1"]]}', "oplus"),
    ('{"kind": "multiset_morphism", "source": {"a": 1}, "target": {"b": 1}, "map": {"a": 3}}', "a"),
])
def test_format_errors_name_the_key(text, key):
    with pytest.raises(FormatError) as exc:
        parse_document(text)
    assert repr(key) in str(exc.value)


def test_bad_hom_documents():
    src = '{"kind": "product_algebra", "coords": [["x", 3]]}'
    tgt = '{"kind": "product_algebra", "coords": [["y", 4]]}'
    with pytest.raises(FormatError):
        parse_document(f'{{"kind": "mv_hom", "source": {src}, "target": {tgt}, "dual": {{"y": "x"}}}}')
    with pytest.raises(FormatError):
        parse_document(f'{{"kind": "mv_hom", "source": {src}, "target": {tgt}}}')
    with pytest.raises(FormatError):
        parse_document(f'{{"kind": "mv_hom", "source": {src}, "target": {src},'
                       ' "map": [["0/2", "0/2"], ["0/2", "1/2"], ["1/2", "1/2"], ["2/2", "2/2"]]}')


def test_inverse_system_identity_and_leq():
    for name, S, _ in examples():
        if any(not isinstance(n, str) for n in S.poset.nodes):
            continue
        doc = Document("inverse_system", S)
        assert parse_document(serialize_document(doc)) == doc


documents = st.one_of(
    st.integers(2, 30).map(lambda n: Document("chain", n)),
    st.randoms(use_true_random=False).map(lambda r: Document("product_algebra", random_product(r))),
    st.randoms(use_true_random=False).map(lambda r: Document("multiset", random_multiset(r))),
    st.randoms(use_true_random=False).map(lambda r: Document("multiset_morphism", random_morphism(r))),
    st.randoms(use_true_random=False).map(
        lambda r: Document("table_algebra", scrambled_table(random_product(r, 2, 3), r))),
)


@given(documents)
def test_parse_serialize_identity_on_random_documents(doc):
    text = serialize_document(doc)
    assert parse_document(text) == doc
    assert serialize_document(parse_document(text)) == text


@given(st.randoms(use_true_random=False))
def test_hom_documents_round_trip(r):
    A, B = random_product(r, 2, 4), random_product(r, 2, 5)
    for h in enumerate_homs(A, B)[:3]:
        for body in (h, ElementHom(A, B, h.mapping())):
            doc = Document("mv_hom", body)
            assert parse_document(serialize_document(doc)) == doc


def test_parse_value_matches_parse_document():
    for path in CORPUS:
        assert parse_value(json.loads(path.read_text())) == parse_document(path.read_text())
    assert parse_value({"kind": "chain", "order": 4}).body == 4
    assert chain_algebra(4) == parse_document(serialize_document(
        Document("table_algebra", chain_algebra(4)))).body
