import json
import os
import pathlib

import jsonschema
import pytest

import khcob

REPO = pathlib.Path(os.environ.get("KHCOB_REPO", pathlib.Path(__file__).resolve().parents[2]))
CORPUS = REPO / "corpus"
TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"


def schema(name):
    return json.loads((REPO / "schemas" / f"{name}.schema.json").read_text())


def test_diagram_and_jones():
    d = khcob.diagram(TREFOIL)
    assert d["crossings"] == 3 and d["n_plus"] == 3 and d["components"] == 1
    assert khcob.jones(TREFOIL) == {1: 1, 3: 1, 5: 1, 9: -1}
    assert khcob.jones("U(1)") == {-1: 1, 1: 1}


def test_homology():
    kh = khcob.homology(TREFOIL)
    assert kh["total"] == 6
    assert {(e["h"], e["q"]) for e in kh["dims"]} == {(0, 1), (0, 3), (2, 5), (2, 7), (3, 7), (3, 9)}
    assert khcob.homology(TREFOIL, "bn")["total"] == 2


def test_pages():
    p = khcob.pages(TREFOIL)
    totals = {page["name"]: page["total"] for page in p["pages"]}
    assert totals["Khovanov page"] == 6
    assert p["stable"]["total"] == 2


def test_complex_round_trip_and_schema():
    c = khcob.complex(TREFOIL, "bn")
    jsonschema.validate(c, schema("complex"))
    assert khcob.complex_homology(c)["total"] == 2
    c["differential"].append([0, 0])
    with pytest.raises(khcob.FormatError):
        khcob.complex_homology(c)


def test_rule_files_match_schemas():
    for f in ["khovanov.json", "bar-natan.json"]:
        jsonschema.validate(json.loads((CORPUS / "rules" / f).read_text()), schema("frobenius-rule"))
    for f in [CORPUS / "rules" / "khovanov-only.szabo.json", CORPUS / "negative" / "disconnected.szabo.json"]:
        jsonschema.validate(json.loads(f.read_text()), schema("szabo-rule"))
    assert khcob.homology(TREFOIL, str(CORPUS / "rules" / "bar-natan.json"))["total"] == 2


def test_movies():
    assert khcob.compare_movies("U(1)\nh0\nh1 1 2\n", "U(1)\n")["homotopic"]
    assert not khcob.compare_movies("U(1) U(2)\nrelabel 1->2 2->1\n", "U(1) U(2)\n")["homotopic"]
    with pytest.raises(khcob.FrameMismatch):
        khcob.compare_movies("U(1)\nh0\n", "U(1)\n")


def test_errors():
    with pytest.raises(khcob.DiagramError):
        khcob.diagram("X(1,2,3,4)")
    with pytest.raises(ValueError):
        khcob.diagram("X(1,2")
    with pytest.raises(khcob.IoError):
        khcob.homology(TREFOIL, "no-such-rule")
    with pytest.raises(khcob.RuleError):
        khcob.homology(TREFOIL, str(CORPUS / "negative" / "disconnected.szabo.json"))
    os.environ["KHCOB_GENERATOR_CAP"] = "10"
    try:
        with pytest.raises(khcob.CapExceeded):
            khcob.homology(TREFOIL)
    finally:
        del os.environ["KHCOB_GENERATOR_CAP"]


@pytest.mark.parametrize("suite", ["axioms", "moviemoves"])
def test_verify_suite(suite):
    res = khcob.verify(suite, CORPUS, jobs=2)
    assert res and all(r["status"] != "fail" for r in res)
