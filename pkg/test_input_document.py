"""
Input Document Tests
Schema validation with field diagnostics, and export followed by re-parse
"""

import json

import pytest

import linalg
from errors import ParseError, ValidationError
from input_document import InduceOptions, export_bundle, export_document, load_document, parse_document


def minimal(**overrides):
    doc = {
        "dim": 3,
        "metric": [["1", "0", "0"], ["0", "-1", "0"], ["0", "0", "1"]],
        "phi": [["0", "-1", "0"], ["1", "0", "0"], ["0", "0", "0"]],
        "xi": ["0", "0", "1"],
        "eta": ["0", "0", "1"],
    }
    doc.update(overrides)
    return doc


def test_minimal_document():
    doc = parse_document(minimal())
    assert doc.space.basis == ["e1", "e2", "e3"]
    assert doc.section is None
    assert doc.induce is None
    assert linalg.all_zero(doc.space.frame.brackets)


def test_brackets_are_one_based():
    doc = parse_document(minimal(brackets={"1,2": ["0", "0", "1"]}))
    e = doc.space.frame.e
    assert linalg.equal(doc.space.frame.bracket(e(0), e(1)), e(2))
    assert linalg.equal(doc.space.frame.bracket(e(1), e(0)), -e(2))


def test_export_then_parse(H):
    data = json.loads(json.dumps(export_bundle(H, InduceOptions(branch="lambda2", epsilon=-1))))
    doc = parse_document(data)
    space = doc.space
    assert doc.table == H.table
    assert space.basis == H.space.basis
    assert linalg.equal(space.frame.brackets, H.space.frame.brackets)
    assert linalg.equal(space.metric.matrix, H.space.metric.matrix)
    assert linalg.equal(space.structure.phi, H.space.structure.phi)
    assert linalg.equal(space.structure.xi, H.space.structure.xi)
    assert linalg.equal(space.structure.eta, H.space.structure.eta)
    assert linalg.equal(doc.section.n1, H.section.n1)
    assert linalg.equal(doc.section.n2, H.section.n2)
    assert all(linalg.equal(u, v) for u, v in zip(doc.section.tangent, H.section.tangent))
    assert doc.section.tangent_names == ["E1", "E2", "E5"]
    assert doc.induce == InduceOptions(branch="lambda2", epsilon=-1)


def test_export_without_section(G):
    data = export_document(G)
    assert "section" not in data
    squares = {rel["symbol"]: G.table.parse(rel["square"]) for rel in data["relations"]}
    assert squares == {"s": G.table.parse("3"), "t2": G.table.parse("1 - t0^2")}
    assert "2,3" in data["brackets"]
    assert "1,4" not in data["brackets"]


@pytest.mark.parametrize("overrides, field", [
    ({"dim": "three"}, "dim"),
    ({"brackets": {"2,1": ["0", "0", "1"]}}, "brackets[2,1]"),
    ({"brackets": {"1-2": ["0", "0", "1"]}}, "brackets[1-2]"),
    ({"brackets": {"1,2": ["0", "1"]}}, "brackets[1,2]"),
    ({"metric": [["1", "0"], ["0", "1"]]}, "metric"),
    ({"xi": ["0", "1"]}, "xi"),
    ({"basis": ["e1", "e1", "e3"]}, "basis"),
    ({"section": {"n1": ["1", "0", "0"], "n2": ["0", "1", "0"], "induce": {"epsilon": 2}}},
     "section.induce.epsilon"),
    ({"section": {"n1": ["1", "0", "0"], "n2": ["0", "1", "0"], "induce": {"branch": "lambda9"}}},
     "section.induce.branch"),
])
def test_validation_errors(overrides, field):
    with pytest.raises(ValidationError) as info:
        parse_document(minimal(**overrides))
    assert info.value.field == field


def test_missing_field():
    data = minimal()
    del data["dim"]
    with pytest.raises(ValidationError) as info:
        parse_document(data)
    assert info.value.field == "dim"


def test_bad_expression_names_its_position():
    data = minimal(metric=[["1", "0", "0"], ["0", "-1", "0"], ["0", "0", "w"]])
    with pytest.raises(ParseError) as info:
        parse_document(data)
    assert info.value.field == "metric[2][2]"


def test_tangent_position_in_diagnostics():
    section = {"n1": ["1", "0", "0"], "n2": ["0", "1", "0"], "tangent": [["0", "0", "1.5"]]}
    with pytest.raises(ParseError) as info:
        parse_document(minimal(section=section))
    assert info.value.field == "section.tangent[0][2]"


def test_malformed_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"dim": 3,\n  "metric": [}', encoding="utf-8")
    with pytest.raises(ParseError, match="line 2"):
        load_document(str(path))


def test_missing_file(tmp_path):
    with pytest.raises(ParseError):
        load_document(str(tmp_path / "absent.json"))


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
