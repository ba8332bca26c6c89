import json
from fractions import Fraction

import pytest

from kodaira.corpus import corpus_dir, corpus_ids, load_entry
from kodaira.io import (
    SchemaError,
    canonical_dumps,
    decode_number,
    encode_number,
    loads,
    monodromy_problem_from_payload,
    validate_document,
)


@pytest.mark.parametrize("gid", corpus_ids())
def test_corpus_round_trip_is_byte_identical(gid):
    text = (corpus_dir() / f"{gid}.json").read_text(encoding="utf-8")
    doc = loads(text)
    assert doc["id"] == gid
    assert canonical_dumps(doc) == text


def test_number_encoding():
    assert encode_number(Fraction(23, 10)) == "23/10"
    assert encode_number(Fraction(4)) == 4
    assert encode_number(2 ** 60) == str(2 ** 60)
    assert decode_number("23/10") == Fraction(23, 10)
    assert decode_number(str(2 ** 60)) == 2 ** 60
    with pytest.raises(SchemaError):
        decode_number("abc")
    with pytest.raises(SchemaError):
        decode_number(True)


def test_unknown_fields_rejected():
    doc = load_entry("free-involution-b3")
    doc["payload"]["surprise"] = 1
    with pytest.raises(SchemaError):
        validate_document(doc)


def test_unknown_kind_and_malformed_json():
    with pytest.raises(SchemaError):
        validate_document({"kind": "nope"})
    with pytest.raises(SchemaError):
        loads("{")
    with pytest.raises(SchemaError):
        validate_document([1, 2])


def test_push_lift_components_compose():
    doc = load_entry("free-involution-b3")
    comp = doc["payload"]["components"][0]
    n = len(comp["matrix"])
    ident = [[int(i == j) for j in range(n)] for i in range(n)]
    doc["payload"]["components"][0] = {"push": ident, "lift": comp["matrix"], "weight": comp["weight"]}
    validate_document(doc)
    p = monodromy_problem_from_payload(doc["payload"])
    assert p.components[0].transfer_push.tolist() == comp["matrix"]
    doc["payload"]["components"][0]["lift"] = [[1, 0]]
    with pytest.raises(SchemaError):
        monodromy_problem_from_payload(doc["payload"])


def test_weight_length_checked():
    doc = load_entry("free-involution-b3")
    doc["payload"]["components"][0]["weight"] = [1, 0]
    with pytest.raises(SchemaError):
        monodromy_problem_from_payload(doc["payload"])


def test_canonical_dumps_sorted():
    assert canonical_dumps({"b": 1, "a": [1, 2]}) == json.dumps({"a": [1, 2], "b": 1}, indent=2) + "\n"
