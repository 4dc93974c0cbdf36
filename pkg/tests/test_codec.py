# filename: tests/test_codec.py

import json

import pytest

from app.core.config import FORMAT_VERSION
from utils.checking import same_maps
from utils.codec import MorphismData, decode, dump, dumps, encode, load, loads
from utils.errors import FormatError
from utils.genkit import random_transport
from utils.twoalg import functor_T

Q_ALGEBRA = {
    "version": FORMAT_VERSION,
    "kind": "diff_algebra",
    "dims": {"A": 1},
    "maps": {
        "mult": {"srcs": ["A", "A"], "dst": "A", "entries": [[[0, 0, 0], "1"]]},
        "d": {"srcs": ["A"], "dst": "A", "entries": [[[0, 0], "-1"]]},
    },
}


def _text(**changes) -> str:
    doc = json.loads(json.dumps(Q_ALGEBRA))
    doc.update(changes)
    return json.dumps(doc)


def _with_d_entries(entries) -> str:
    doc = json.loads(json.dumps(Q_ALGEBRA))
    doc["maps"]["d"]["entries"] = entries
    return json.dumps(doc)


def test_printing_is_canonical(dual_da, skeletal, strict):
    moved, morphism = random_transport(skeletal, 3)
    for obj in (dual_da, skeletal, functor_T(strict), MorphismData(src=skeletal, dst=moved, morphism=morphism)):
        text = dump(obj)
        assert dumps(encode(load(text))) == text
        assert same_maps(load(text), obj)


def test_hand_written_file(q_da):
    assert same_maps(load(_text()), q_da)


def test_rationals_are_reduced():
    da = load(_with_d_entries([[[0, 0], "2/4"]]))
    assert encode(da).maps["d"].entries == [([0, 0], "1/2")]


@pytest.mark.parametrize("literal", ["1/0", "0.5", "1e3", "one", "1/-2"])
def test_inexact_literals_are_rejected(literal):
    with pytest.raises(FormatError):
        loads(_with_d_entries([[[0, 0], literal]]))


@pytest.mark.parametrize(
    "text",
    [
        _with_d_entries([[[0, 1], "1"]]),
        _with_d_entries([[[0, 0], "1"], [[0, 0], "2"]]),
        _with_d_entries([[[0], "1"]]),
        _text(dims={"A": 9}),
        _text(dims={}),
        _text(maps={"mult": Q_ALGEBRA["maps"]["mult"]}),
        _text(maps={**Q_ALGEBRA["maps"], "e": Q_ALGEBRA["maps"]["d"]}),
        _text(maps={**Q_ALGEBRA["maps"], "d": {"srcs": ["A", "A"], "dst": "A", "entries": []}}),
    ],
    ids=["index-range", "duplicate", "short-index", "too-large", "no-dims", "missing-map", "unknown-map", "signature"],
)
def test_ill_shaped_files_are_rejected(text):
    with pytest.raises(FormatError):
        load(text)


def test_header_errors():
    with pytest.raises(FormatError):
        loads(_text(version=FORMAT_VERSION + 1))
    with pytest.raises(FormatError):
        loads(_text(kind="lie_algebra"))
    with pytest.raises(FormatError):
        loads("{not json")


def test_max_dim_is_configurable(dual_da):
    sf = encode(dual_da)
    with pytest.raises(FormatError):
        decode(sf, max_dim=1)
    assert decode(sf, max_dim=2).space.dim == 2
