import json
from fractions import Fraction

from qnd.report import FAIL, INFO, PASS, SCHEMA_VERSION, Check, SuiteReport, dumps, merge


def test_status_and_ok():
    rep = SuiteReport("x")
    rep.add(Check.expect("a", True))
    rep.add(Check("b", INFO, "note"))
    assert rep.ok
    rep.add(Check.expect("c", False, "bad"))
    assert not rep.ok
    assert [c.name for c in rep.failures] == ["c"]
    assert "1 fail" in rep.summary() and "FAIL c: bad" in rep.summary()


def test_json_encoding():
    rep = SuiteReport("x", meta={"seed": 3})
    rep.add(Check("n", PASS, numeric=[["frac", Fraction(1, 3)], ["z", 1 + 2j]]))
    d = json.loads(dumps(rep.to_dict()))
    assert d["schema"] == SCHEMA_VERSION and d["ok"] is True
    assert d["checks"][0]["numeric"] == [["frac", "1/3"], ["z", [1.0, 2.0]]]


def test_merge_prefixes_names():
    a, b = SuiteReport("a"), SuiteReport("b")
    a.add(Check.expect("one", True))
    b.add(Check("two", FAIL))
    m = merge("all", [a, b], {"seed": 1})
    assert [c.name for c in m.checks] == ["a/one", "b/two"]
    assert not m.ok and m.meta == {"seed": 1}
