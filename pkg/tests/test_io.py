import json

import numpy as np
import pytest

from pd0.cochains import BIT, PHASE, Cochain, random_cochain
from pd0.crt import reduce, synthesize_pentuple
from pd0.errors import InvalidGroupError, ParseError
from pd0.groups import all_z2_homs, make_cyclic, make_dihedral, make_direct_product
from pd0.invariant import EquivCertificate, apply_move, equiv, random_triple
from pd0.io import digest, dumps, from_json, loads, read_bundle, to_json, write_bundle

Z2 = make_cyclic(2)
Z4 = make_cyclic(4)


def _objects():
    a = all_z2_homs(Z4)[1]
    t = random_triple(a, seed=3)
    td = random_triple(a, seed=3, diagonal=True)
    p = synthesize_pentuple(td, seed=3)
    moved = apply_move(t, random_cochain(Z4, 1, BIT, seed=1), random_cochain(Z4, 2, PHASE, 8, seed=2))
    return [make_dihedral(3), random_cochain(Z4, 2, PHASE, 8, seed=0), t, p,
            equiv(t, moved).certificate, reduce(p).certificate]


@pytest.mark.parametrize("i", range(6))
def test_round_trip_bytes(tmp_path, i):
    obj = _objects()[i]
    path = tmp_path / "x.json"
    write_bundle(obj, path)
    back = read_bundle(path)
    assert dumps(back) == path.read_text()
    assert type(back) is type(obj)


def test_triple_round_trip_equal(tmp_path):
    t = random_triple(all_z2_homs(make_direct_product(Z2, Z2))[2], seed=8)
    write_bundle(t, tmp_path / "t.json")
    assert read_bundle(tmp_path / "t.json") == t


def test_no_floats_serialized():
    for obj in _objects():
        text = dumps(obj)
        json.loads(text, parse_float=lambda s: pytest.fail(f"float {s} in output"))


def _cochain_doc():
    doc = to_json(Cochain(Z2, 1, PHASE, np.array([[0, 4], [2, 0]]), 8))
    assert doc["entries"] == [["0/1", "1/2"], ["1/4", "0/1"]] and doc["denominator"] == 4
    return doc


def test_non_reduced_phase():
    doc = _cochain_doc()
    doc["entries"][1][0] = "3/6"
    doc["denominator"] = 2
    with pytest.raises(ParseError) as e:
        from_json(doc)
    assert e.value.location == "/entries/1/0"
    x = from_json(doc, strict=False)
    assert to_json(x)["entries"][1][0] == "1/2"


def test_denominator_must_be_least():
    doc = _cochain_doc()
    doc["denominator"] = 8
    with pytest.raises(ParseError) as e:
        from_json(doc)
    assert e.value.location == "/denominator"
    doc["denominator"] = 2
    with pytest.raises(ParseError) as e:
        from_json(doc)
    assert e.value.location == "/entries/1/0"


def test_identity_not_first():
    doc = {"order": 2, "table": [[1, 0], [0, 1]]}
    with pytest.raises(InvalidGroupError, match="identity must be index 0"):
        from_json(doc)


def test_schema_locations():
    t = to_json(random_triple(all_z2_homs(Z2)[0], seed=0))
    bad = json.loads(json.dumps(t))
    bad["kappa"]["entries"][2][1] = 2
    with pytest.raises(ParseError) as e:
        from_json(bad)
    assert e.value.location == "/kappa/entries/2/1"
    bad = json.loads(json.dumps(t))
    bad["extra"] = 1
    with pytest.raises(ParseError, match="unknown keys"):
        from_json(bad)
    bad = json.loads(json.dumps(t))
    bad["a"] = [1, 1]
    with pytest.raises(ParseError) as e:
        from_json(bad)
    assert e.value.location == "/a"
    bad = json.loads(json.dumps(t))
    bad["c"] = bad["kappa"]
    with pytest.raises(ParseError) as e:
        from_json(bad)
    assert e.value.location == "/c"
    with pytest.raises(ParseError, match="unknown bundle type"):
        from_json(dict(t, type="nope"))
    with pytest.raises(ParseError, match="invalid JSON"):
        loads("{")


def test_group_path_reference(tmp_path):
    write_bundle(Z4, tmp_path / "z4.json")
    doc = to_json(random_triple(all_z2_homs(Z4)[0], seed=1))
    doc["group"] = "z4.json"
    (tmp_path / "t.json").write_text(json.dumps(doc))
    assert read_bundle(tmp_path / "t.json").group == Z4
    doc["group"] = "missing.json"
    (tmp_path / "t.json").write_text(json.dumps(doc))
    with pytest.raises(ParseError) as e:
        read_bundle(tmp_path / "t.json")
    assert e.value.location == "/group"


def test_digest_stable():
    x = to_json(random_triple(all_z2_homs(Z4)[0], seed=1))
    assert digest(x) == digest(json.loads(json.dumps(x)))
    assert len(digest(x)) == 16
