import itertools
import random
from fractions import Fraction

import pytest

from conftest import arrangement_input, intersection_oracle, random_lines
from sislne.algebra import MPoly, parse_polynomial
from sislne.curves import (
    ComponentError,
    NotSquarefreeError,
    analyze_curve,
    bezout_defect,
    find_singular_locus,
    is_ordinary,
    is_squarefree_homogeneous,
    local_shear_sequence,
    multiplicity_and_initial_form,
    sheared_form,
    singular_points,
    validate_components,
)


def rational_coords(rec):
    assert rec.degree == 1
    return tuple(c.rational_value() for c in rec.point.coords)


def test_smooth_conic_has_no_singular_points():
    assert singular_points(parse_polynomial("x^2 + y^2 - z^2")) == []


def test_nodal_cubic():
    recs = analyze_curve(parse_polynomial("y^2*z - x^3 - x^2*z"))
    assert len(recs) == 1
    assert rational_coords(recs[0]) == (0, 0, 1)
    assert recs[0].multiplicity == 2 and recs[0].ordinary


def test_cuspidal_cubic_is_not_ordinary():
    recs = analyze_curve(parse_polynomial("y^2*z - x^3"))
    assert [r.ordinary for r in recs] == [False]


def test_four_concurrent_lines():
    f = parse_polynomial("x*y*(x + y)*(x - y)")
    (rec,) = analyze_curve(f)
    assert rational_coords(rec) == (0, 0, 1)
    assert rec.multiplicity == 4 and rec.ordinary
    assert rec.tangent_slopes.degree == 4


def test_conjugate_points_are_grouped():
    # the conic meets each line in a pair of conjugate points
    f = parse_polynomial("x*y*(x^2 + y^2 + z^2)")
    recs = analyze_curve(f)
    assert sum(r.degree for r in recs) == 5
    assert sorted(r.degree for r in recs) == [1, 2, 2]
    quad = [r for r in recs if r.degree == 2]
    assert all(r.multiplicity == 2 and r.ordinary for r in quad)


@pytest.mark.parametrize("start", [0, 1, 5, 13])
def test_result_does_not_depend_on_transform(start):
    f = parse_polynomial("x*y*(x^2 + y^2 + z^2)")
    base = [(r.point.describe(), str(r.point.modulus), r.multiplicity) for r in singular_points(f)]
    other = [(r.point.describe(), str(r.point.modulus), r.multiplicity)
             for r in singular_points(f, shear_start=start)]
    assert base == other


def test_non_reduced_curve_rejected():
    assert not is_squarefree_homogeneous(parse_polynomial("x^2*y"))
    with pytest.raises(NotSquarefreeError):
        find_singular_locus(parse_polynomial("x^2*y"))


def test_multiplicity_and_initial_form():
    f = parse_polynomial("x^3 + y^3 + x*y*z")
    (rec,) = singular_points(f)
    k, form = multiplicity_and_initial_form(f, rec.point)
    assert k == 2 and is_ordinary(form)


def test_small_arrangements_match_oracle():
    rng = random.Random(3)
    for _ in range(10):
        lines = random_lines(rng, rng.choice([3, 4]))
        inp = arrangement_input(lines)
        got = {rational_coords(r): r.multiplicity for r in singular_points(inp.f_d)}
        assert got == intersection_oracle(lines)


def test_bezout_defect_for_line_arrangement_is_zero():
    f = parse_polynomial("x*y*z*(x + y + z)")
    recs = singular_points(f)
    assert bezout_defect(recs, 4) == 0


def test_components_validation():
    f = parse_polynomial("x*y*(x^2 + y^2 + z^2)")
    facs = [parse_polynomial(s) for s in ("x", "y", "x^2 + y^2 + z^2")]
    data = validate_components(f, facs)
    assert data.degrees == (1, 1, 2)
    for rec, row in zip(data.records, data.branch_counts):
        assert sum(row) == rec.multiplicity


def test_components_product_mismatch():
    f = parse_polynomial("x*y*(x + y)")
    with pytest.raises(ComponentError):
        validate_components(f, [parse_polynomial("x"), parse_polynomial("y")])


def test_cone_factor_is_expanded_into_lines():
    # x^2 - y^2 is two lines through [0:0:1]; with a third concurrent line it is a cone
    f = parse_polynomial("(x^2 - y^2)*(x + 3*y)")
    data = validate_components(f, [parse_polynomial("x^2 - y^2"), parse_polynomial("x + 3*y")])
    assert [d for _label, d, _c in data.expanded()] == [1, 1, 1]


def test_cone_through_other_singular_points_is_refused():
    f = parse_polynomial("(x^2 - y^2)*z")
    with pytest.raises(ComponentError):
        validate_components(f, [parse_polynomial("x^2 - y^2"), parse_polynomial("z")])


def test_evaluate_at_singular_point_vanishes():
    f = parse_polynomial("x*y*(x + y + z)")
    for rec in singular_points(f):
        vals = [f.diff(v).evaluate(rec.point.coords) for v in ("x", "y", "z")]
        assert all(v.is_zero() for v in vals)
        assert isinstance(rec.point.coords[0].rational_value(), Fraction)


def test_constant_polynomial_has_no_points():
    assert find_singular_locus(MPoly.var(("x", "y", "z"), "x"))[0] == []


@pytest.mark.parametrize("text", ["x*y*(x + y)*(x - y)", "y^2*z - x^3", "x^3 + y^3 + x*y*z"])
def test_ordinariness_is_shear_invariant(text):
    for rec in analyze_curve(parse_polynomial(text)):
        verdicts = {is_ordinary(sheared_form(rec.initial_form, a, b))
                    for a, b in itertools.islice(local_shear_sequence(), 8)}
        assert verdicts == {rec.ordinary}
