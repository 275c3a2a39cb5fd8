from fractions import Fraction

import pytest

from sislne import graphs
from sislne.core import NotApplicableError, SisInput, decide_lne


@pytest.mark.parametrize("k", range(2, 7))
def test_Ti_decorations(k):
    g = graphs.build_Ti(k)
    (delta,) = g.by_kind(graphs.DELTA)
    assert delta.m == k and delta.q == Fraction(k + 1, k)
    assert delta.arrows == k - 1
    assert g.valency(delta.id) == k + 1
    assert graphs.root_vertex(g).weight == -1 - k
    assert g.is_tree() and graphs.strings_off_tprime(g)


def test_Ti_rejects_small_k():
    with pytest.raises(graphs.GraphError):
        graphs.build_Ti(1)


def test_bouquet_case1(ex41, ex44):
    g = graphs.build_T(ex41)
    assert graphs.root_vertex(g).weight == -1 - 4
    g = graphs.build_T(ex44)
    assert graphs.root_vertex(g).weight == -1 - sum(ex44.k_list())
    assert g.meta["case"] == "Case1" and g.is_tree()
    assert len(g.by_kind(graphs.DELTA)) == ex44.r


def test_bouquet_case2(ex42):
    g = graphs.build_T(ex42)
    e1 = -1 - sum(ex42.k_list())
    root = graphs.root_vertex(g)
    assert root.weight == e1 - ex42.r
    assert root.arrows == ex42.n0
    seps = g.by_kind(graphs.SEPARATION)
    assert len(seps) == ex42.r
    assert all(s.m == 3 and s.q == Fraction(4, 3) and s.derived == ("q",) for s in seps)
    assert g.is_tree() and graphs.strings_off_tprime(g)


def test_smooth_tangent_cone_T_is_one_vertex():
    rep = decide_lne(SisInput.from_strings("x^4 + y^4 + z^4", "(x + 2*y + 3*z)^5"))
    g = graphs.build_T(rep)
    assert len(g.vertices) == 1
    assert g.vertices[0].kind == graphs.ROOT and g.vertices[0].arrows == 12


def test_T_refused_when_not_lne():
    rep = decide_lne(SisInput.from_strings("z*x^2 + y^3", "(x + y + z)^4"))
    with pytest.raises(NotApplicableError):
        graphs.build_T(rep)


def test_G0_example_weights(ex41, ex42, ex44):
    g = graphs.build_G0(ex41)
    assert [v.weight for v in g.by_kind(graphs.LNODE)] == [-5, -5, -5, -5]
    assert [v.m for v in g.by_kind(graphs.PNODE)] == [4]
    g = graphs.build_G0(ex42)
    lw = {v.label: (v.weight, v.arrows, v.genus) for v in g.by_kind(graphs.LNODE)}
    assert lw["x"] == (-7, 0, 0) and lw["y"] == (-7, 0, 0)
    assert lw["x^2 + y^2 + z^2"] == (-10, 2, 0)
    assert len(g.by_kind(graphs.PNODE)) == 5
    for g in (graphs.build_G0(ex41), graphs.build_G0(ex42), graphs.build_G0(ex44)):
        assert graphs.check_H_relation(g) and g.is_connected()


def test_G0_cone_expansion(ex43):
    g = graphs.build_G0(ex43)
    assert len(g.by_kind(graphs.LNODE)) == 4
    assert graphs.check_H_relation(g)


def test_H_relation_detects_corruption(ex41):
    g = graphs.build_G0(ex41)
    v = g.vertices[0]
    bad = graphs.DualGraph((graphs.Vertex(**{**v.__dict__, "weight": v.weight - 1}),) + g.vertices[1:],
                           g.edges, g.meta)
    assert not graphs.check_H_relation(bad)


def test_json_roundtrip(ex42):
    for g in (graphs.build_T(ex42), graphs.build_G0(ex42)):
        text = graphs.emit_json(g)
        back = graphs.parse_json(text)
        assert back == g
        assert graphs.emit_json(back) == text


def test_dot_output(ex41):
    dot = graphs.emit_dot(graphs.build_T(ex41), "T")
    assert dot.startswith("graph T {") and dot.rstrip().endswith("}")
    assert "doublecircle" in dot and "arrowhead" in dot
