import pytest

import ibncert

R2 = "vertex v; edge e: v -> v; edge f: v -> v;"


def test_examples_are_listed():
    names = ibncert.example_names()
    assert "r2" in names and "f-line" in names


def test_companion_of_r2():
    out = ibncert.companion(R2)
    assert out["graph"]["vertices"] == ["v", "v'"]
    assert len(out["graph"]["edges"]) == 4
    assert out["incidence"]["entries"] == [[2, 2], [0, 0]]


def test_json_graph_input():
    graph = {
        "vertices": ["v"],
        "edges": [{"name": "e", "from": "v", "to": "v"}, {"name": "f", "from": "v", "to": "v"}],
    }
    assert ibncert.companion(graph) == ibncert.companion(R2)


def test_cohn_r2_is_certified():
    out = ibncert.ibn_check(R2, "cohn")
    assert out["ibn"]["status"] == "certified"
    assert out["ibn"]["certificate"]["weights"] == ["2", "-1"]
    assert out["imn"] == "holds"
    assert out["audited"] is True


def test_leavitt_r2_is_refuted():
    out = ibncert.ibn_check(R2, "leavitt")
    assert out["ibn"]["status"] == "refuted"
    assert (out["ibn"]["m"], out["ibn"]["m_prime"]) == (1, 2)
    assert out["imn"] == "unknown"


def test_relative_family_is_refuted():
    graph, x = ibncert.family(2, 1)
    assert x == ["v2"]
    out = ibncert.ibn_check(graph, "relative", x)
    assert out["ibn"]["status"] == "refuted"
    assert out["ibn"]["descendant"] == [2, 2, 2]


def test_monoid_equiv_in_f_r2():
    f_r2 = ibncert.example("f-r2")
    eq = ibncert.monoid_equiv(f_r2, [1, 2], [2, 4])
    assert eq["status"] == "equivalent"
    assert eq["descendant"] == [2, 4]
    ne = ibncert.monoid_equiv(f_r2, [1, 0], [2, 0], weights=[2, -1])
    assert ne["status"] == "not-equivalent"
    assert (ne["gamma_left"], ne["gamma_right"]) == ("2", "4")


def test_normal_form_and_generators():
    f_line = ibncert.example("f-line")
    assert ibncert.generators(f_line) == ["u", "v", "w", "u'", "v'"]
    assert ibncert.normal_form(f_line, [1] * 5) == [0, 0, 3, 1, 2]
    assert ibncert.generators(R2, "cohn") == ["v", "q(v)"]


def test_errors_surface_as_exceptions():
    with pytest.raises(ibncert.Error, match="DanglingEdge"):
        ibncert.companion("vertex a; edge e: a -> b;")
    with pytest.raises(ibncert.Error, match="ParseError"):
        ibncert.companion("vertex a")
    with pytest.raises(ibncert.Error, match="NonTerminating"):
        ibncert.normal_form(R2, [1])
    with pytest.raises(ValueError):
        ibncert.ibn_check(R2, "nope")
