import pytest

from structalg import io
from structalg.constructions import ak_construct
from structalg.registry import LABELS, canonical_algebra


@pytest.mark.parametrize("label", LABELS)
def test_algebra_round_trip(label):
    a = canonical_algebra(label)
    doc = io.algebra_to_json(a)
    assert doc["unit"] == 0 and doc["label"] == label
    assert io.algebra_from_json(doc) == a


def test_algebra_format_errors():
    with pytest.raises(io.FormatError):
        io.algebra_from_json({"dim": 3})
    doc = io.algebra_to_json(canonical_algebra("A1"))
    doc["dim"] = 4
    with pytest.raises(io.FormatError):
        io.algebra_from_json(doc)
    doc = io.algebra_to_json(canonical_algebra("A1"))
    doc["table"][1][1] = ["1", "x", "0"]
    with pytest.raises(io.FormatError):
        io.algebra_from_json(doc)


def test_lie_round_trip():
    lie = ak_construct(canonical_algebra("S2"))
    doc = io.lie_to_json(lie)
    assert doc["dim"] == 14 and len(doc["grades"]) == 14
    back = io.lie_from_json(doc)
    assert back.table == lie.table and back.grades == lie.grades


def test_lie_format_errors():
    with pytest.raises(io.FormatError):
        io.lie_from_json({"dim": 2, "brackets": [[0, 5, 1, "1"]]})
    with pytest.raises(io.FormatError):
        io.lie_from_json({"dim": 2, "brackets": [[0, 1, 1, "1"]], "grades": [0]})
    with pytest.raises(io.FormatError):
        io.lie_from_json({"brackets": []})


def test_dumps_deterministic():
    doc = io.algebra_to_json(canonical_algebra("S2"))
    assert io.dumps(doc) == io.dumps(io.algebra_to_json(io.algebra_from_json(doc)))
