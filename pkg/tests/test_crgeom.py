"""Tangent spaces, pointwise CR dimension, strata ideals, d - m checks."""

from fractions import Fraction

import pytest

from conftest import system_fixture, system_from_text
from holoclosure.arith import GaussianRational, gq
from holoclosure.complexify import System, zeta_to_real
from holoclosure.crgeom import (
    cr_dimension_at,
    cr_strata_ideal,
    tangent_space,
    verify_d_minus_m,
)
from holoclosure.errors import NonSmoothPointError, PointNotOnSetError
from holoclosure.groebner import ideal_membership
from holoclosure.poly import Polynomial
from holoclosure.syntax import parse_point


def test_sphere_tangent_space_at_pole():
    S = zeta_to_real(system_fixture("sphere.sys"))
    ts = tangent_space(S, parse_point("1, 0"))
    assert ts.d == 3
    assert ts.jacobian_rank == 1
    assert ts.smooth
    # kernel of (2,0,0,0): the x1 coordinate of every tangent vector vanishes
    assert len(ts.basis) == 3
    assert all(v[0] == 0 for v in ts.basis)


def test_totally_real_plane_tangent():
    S = system_fixture("totally_real_r2.sys")
    ts = tangent_space(S, parse_point("0, 0"))
    assert ts.smooth and ts.d == 2
    assert set(ts.basis) == {
        (Fraction(1), Fraction(0), Fraction(0), Fraction(0)),
        (Fraction(0), Fraction(0), Fraction(1), Fraction(0)),
    }


def test_stick_germ_tangent():
    S = system_fixture("umbrella_stick_germ.sys")
    ts = tangent_space(S, parse_point("0, 1"))
    assert ts.d == 1 and ts.smooth
    assert ts.basis == ((Fraction(0), Fraction(0), Fraction(1), Fraction(0)),)


def test_tangent_point_off_set():
    S = system_fixture("totally_real_r2.sys")
    with pytest.raises(PointNotOnSetError):
        tangent_space(S, parse_point("i, 0"))


def test_cr_dimension_sphere():
    S = system_fixture("sphere.sys")
    cr = cr_dimension_at(S, parse_point("1, 0"))
    assert (cr.d, cr.m, cr.rank_stacked) == (3, 1, 2)
    assert cr.smooth


def test_cr_dimension_totally_real():
    for name, n in (("totally_real_r1.sys", 1), ("totally_real_r2.sys", 2),
                    ("totally_real_r3.sys", 3)):
        S = system_fixture(name)
        origin = parse_point(", ".join(["0"] * n), n)
        cr = cr_dimension_at(S, origin)
        assert cr.m == 0
        assert cr.rank_stacked == 2 * n


def test_cr_dimension_complex_line():
    cr = cr_dimension_at(system_fixture("complex_line_c2.sys"), parse_point("0, 0"))
    assert (cr.d, cr.m) == (2, 1)


def test_cr_refuses_nonsmooth_point():
    # umbrella with global generators is singular along the stick
    S = system_fixture("umbrella.sys")
    with pytest.raises(NonSmoothPointError):
        cr_dimension_at(S, parse_point("0, 1"))


def test_strata_totally_real_is_empty():
    S = system_fixture("totally_real_r2.sys")
    ideal = cr_strata_ideal(S, 1)
    one = Polynomial.constant(ideal.context, 1)
    assert ideal_membership(one, ideal)


def test_strata_complex_line_is_everything():
    S = system_fixture("complex_line_c2.sys")
    ideal = cr_strata_ideal(S, 1)
    converted = zeta_to_real(S)
    assert set(ideal.generators) == set(converted.generators)


def test_strata_k_out_of_range():
    with pytest.raises(ValueError):
        cr_strata_ideal(system_fixture("totally_real_r2.sys"), 2)


def test_strata_membership_matches_pointwise_cr_dimension():
    S = system_fixture("mixed_graph.sys")
    d = 2
    points = [
        parse_point("0, 0"),
        parse_point("1+2*i, 2"),
        parse_point("2+i, 2"),
        parse_point("1+i, 1"),
        parse_point("3+i, 3"),
    ]
    for k in range(0, d // 2 + 1):
        ideal = cr_strata_ideal(S, k)
        ctx = ideal.context
        for p in points:
            values = {}
            for j, c in enumerate(p):
                c = gq(c)
                values[ctx.names[2 * j]] = gq(c.re)
                values[ctx.names[2 * j + 1]] = gq(c.im)
            in_stratum = all(not g.evaluate(values) for g in ideal.generators)
            m = cr_dimension_at(S, p).m
            assert in_stratum == (m >= k), (k, p)


def test_cr_dimension_invariant_under_coordinate_swap():
    # same surface with the two complex coordinates exchanged
    S1 = system_from_text("realvars x1 y1 x2 y2\neq x2 - x1*y1\neq y2\n")
    S2 = system_from_text("realvars x1 y1 x2 y2\neq x1 - x2*y2\neq y1\n")
    p1 = parse_point("1+2*i, 2")
    p2 = parse_point("2, 1+2*i")
    assert cr_dimension_at(S1, p1).m == cr_dimension_at(S2, p2).m


def test_verify_dm_sphere():
    S = system_fixture("sphere.sys")
    points = [
        parse_point("1, 0"),
        parse_point("3/5, 4/5"),
        parse_point("0, i"),
        parse_point("3/5, 4/5*i"),
        parse_point("1/2+1/2*i, 1/2+1/2*i"),
    ]
    dm = verify_d_minus_m(S, points)
    assert (dm.h, dm.d) == (2, 3)
    assert dm.all_agree
    assert all(e.m == 1 for e in dm.entries)


def test_verify_dm_totally_real_and_line():
    dm = verify_d_minus_m(system_fixture("totally_real_r2.sys"), [parse_point("0,0")])
    assert (dm.h, dm.d) == (2, 2) and dm.all_agree
    dm2 = verify_d_minus_m(system_fixture("complex_line_c2.sys"), [parse_point("0,0")])
    assert (dm2.h, dm2.d) == (1, 2) and dm2.all_agree


def test_verify_dm_flags_bad_points():
    S = system_fixture("umbrella.sys")
    # (0,1) is a non-smooth stick point; (1,5) is off the set entirely
    dm = verify_d_minus_m(S, [parse_point("0, 1"), parse_point("1, 5")])
    assert not dm.all_agree
    assert all(e.error is not None for e in dm.entries)


def test_paraboloid_cr_singular_origin_is_flagged():
    # x2 = x1^2 + y1^2, y2 = 0: smooth everywhere, CR dimension jumps to 1
    # at the origin while it is 0 at generic points, so d - m disagrees with
    # the closure dimension exactly there
    S = system_fixture("paraboloid.sys")
    dm = verify_d_minus_m(S, [parse_point("0, 0"), parse_point("1, 1")])
    origin, generic = dm.entries
    assert (dm.h, dm.d) == (2, 2)
    assert origin.m == 1 and origin.agrees is False
    assert generic.m == 0 and generic.agrees is True
