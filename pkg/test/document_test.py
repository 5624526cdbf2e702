import os

import pytest

from pyhopf.document import ProblemDocument, load, validate
from pyhopf.errors import DocumentError
from pyhopf.fields import QQ

PROBLEMS = os.path.join(os.path.dirname(__file__), "problems")


def _doc(**sections):
    return ProblemDocument({"schema_version": 1, **sections})


def test_load_and_resolve():
    doc = load(os.path.join(PROBLEMS, "third_roots.json"))
    mu3 = doc.hopf("mu3")
    assert mu3 is doc.hopf("mu3")
    assert mu3.metadata["name"] == "mu3"
    assert mu3.metadata["builtin"] == "roots_of_unity"
    assert mu3.is_good_basis()
    assert doc.field("Q") == QQ
    assert doc.field("Qc").names == ("c",)
    spec = doc.operator("cbrt2")
    assert spec.generators == ("c",)
    variety = doc.variety("cube")
    assert variety.ring.variables == ("X",)
    assert variety.field_action is spec
    assert doc.payload("rules") == {"hopf": "mu3"}


def test_schema_errors_name_the_key_path():
    with pytest.raises(DocumentError, match=r"^fields\.K\.type"):
        _doc(fields={"K": {"type": "complex"}})
    with pytest.raises(DocumentError, match="schema_version"):
        ProblemDocument({"schema_version": 2})
    with pytest.raises(DocumentError):
        validate({"fields": {}})
    with pytest.raises(DocumentError, match="not valid JSON"):
        ProblemDocument.loads("{")


def test_resolution_errors():
    doc = _doc(fields={"F2": {"type": "prime", "p": 2}, "K": {"type": "extension", "base": "F2", "name": "a"}},
               hopf={"a": {"base_change": "b", "field": "F2"}, "b": {"base_change": "a", "field": "F2"},
                     "nofield": {"builtin": "trivial"},
                     "unknown": {"builtin": "sl2", "field": "F2"},
                     "badparam": {"builtin": "trivial", "field": "F2", "params": {"n": 3}},
                     "table": {"builtin": "constant_group", "field": "F2", "params": {"table": [[0, 1], [1, 1]]}}})
    with pytest.raises(DocumentError, match=r"^fields\.K\.minpoly"):
        doc.field("K")
    with pytest.raises(DocumentError, match="circular reference"):
        doc.hopf("a")
    with pytest.raises(DocumentError, match=r"hopf\.nofield\.field"):
        doc.hopf("nofield")
    with pytest.raises(DocumentError, match=r"hopf\.unknown\.builtin"):
        doc.hopf("unknown")
    with pytest.raises(DocumentError, match=r"hopf\.badparam\.params"):
        doc.hopf("badparam")
    with pytest.raises(DocumentError, match=r"^hopf\.table: "):
        doc.hopf("table")
    with pytest.raises(DocumentError, match="unknown hopf entry"):
        doc.hopf("missing")
    with pytest.raises(DocumentError, match="no payload"):
        doc.payload("rules")


def test_operator_declarations():
    doc = _doc(fields={"Q": {"type": "rationals"}},
               hopf={"c2": {"builtin": "constant_group", "field": "Q", "params": {"group": "cyclic", "n": 2}}},
               operators={"bad": {"hopf": "c2", "carrier": {"field": "Q", "relations": ["x"]}, "images": {}},
                          "swap": {"hopf": "c2", "carrier": {"field": "Q", "variables": ["x", "y"]},
                                   "images": {"x": ["x", "y"], "y": ["y", "x"]}}})
    with pytest.raises(DocumentError, match="field carriers take no relations"):
        doc.operator("bad")
    assert doc.operator("swap").kind == "ring"
