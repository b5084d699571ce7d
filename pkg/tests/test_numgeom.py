import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weingarten.numgeom import (
    CurvatureInconsistencyError,
    DegenerateSampleError,
    FundamentalForms,
    Grid,
    SurfaceJet,
    curvatures,
    finite_difference_jet,
    fundamental_forms,
    sample,
    weingarten_residual,
)
from weingarten.surfaces import catenoid, cylinder, generalized_cone, sphere


def unit_sphere_jet(u, v):
    cu, su, cv, sv = math.cos(u), math.sin(u), math.cos(v), math.sin(v)
    return SurfaceJet.of((cu * cv, cu * sv, su), (-su * cv, -su * sv, cu), (-cu * sv, cu * cv, 0),
                         (-cu * cv, -cu * sv, -su), (su * sv, -su * cv, 0), (-cu * cv, -cu * sv, 0))


def catenoid_map(u, v):
    return np.array([math.cosh(u) * math.cos(v), math.cosh(u) * math.sin(v), u])


def test_sphere_area_element():
    forms = fundamental_forms(unit_sphere_jet(math.pi / 4, math.pi / 3))
    assert forms.W == pytest.approx(0.5, rel=1e-14)


def test_plane_second_form_vanishes():
    jet = SurfaceJet.of((0.3, 0.2, 0), (1, 0, 0), (0, 1, 0), (0, 0, 0), (0, 0, 0), (0, 0, 0))
    f = fundamental_forms(jet)
    assert (f.e, f.f, f.g) == (0, 0, 0)


def test_cylinder_first_form():
    f = fundamental_forms(cylinder(3.0).jet(0.4, 1.1))
    assert (f.E, f.F) == (1.0, 0.0)
    assert f.G == pytest.approx(9.0)


def test_degenerate_jet():
    jet = SurfaceJet.of((0, 0, 0), (1, 0, 0), (2, 0, 0), (0, 0, 0), (0, 0, 0), (0, 0, 0))
    with pytest.raises(DegenerateSampleError):
        fundamental_forms(jet)


def test_sphere_and_cylinder_curvatures():
    cs = sample(sphere(2.0).jet(0.3, 2.0))
    assert cs.H == pytest.approx(0.5, abs=1e-14)
    assert cs.K == pytest.approx(0.25, abs=1e-14)
    cs = sample(cylinder(3.0).jet(0.1, 0.2))
    assert cs.H == pytest.approx(1 / 6, abs=1e-14)
    assert cs.K == pytest.approx(0.0, abs=1e-14)


def test_catenoid_curvatures():
    for u in (-0.8, 0.0, 0.6):
        cs = sample(catenoid().jet(u, 0.7))
        assert abs(cs.H) < 1e-12
        assert cs.K == pytest.approx(-1 / math.cosh(u) ** 4, rel=1e-12)


def test_principal_curvatures_consistent():
    cs = sample(catenoid().jet(0.3, 0.1))
    assert (cs.k1 + cs.k2) / 2 == pytest.approx(cs.H, abs=1e-12)
    assert cs.k1 * cs.k2 == pytest.approx(cs.K, rel=1e-12)


def test_negative_radicand_raises():
    bad = FundamentalForms(1, 0, 1, 0, 0, 0, 1.0, 0.0, 1.0, np.zeros(3))
    with pytest.raises(CurvatureInconsistencyError):
        curvatures(bad)


def test_residual_examples():
    g = Grid((-1.2, 1.2), (0, 2 * math.pi), 12, 16)
    assert weingarten_residual(sphere(2.0), (1, -2, 0), g).max < 1e-12
    assert weingarten_residual(sphere(1.0), (2, -1, 1), g).max < 1e-12
    cone = generalized_cone((1, 1), (0, 2), (1, 0.5))
    rep = weingarten_residual(cone, (0, 1, 0))
    assert rep.max < 1e-10


def test_residual_report_outputs(tmp_path):
    rep = weingarten_residual(catenoid(), (1, 0, 1), Grid((-1, 1), (0, 1), 4, 3))
    assert rep.max >= rep.mean >= 0
    assert rep.max == pytest.approx(1.0)
    d = json.loads(rep.to_json())
    assert d["grid"]["nu"] == 4
    path = tmp_path / "s.csv"
    rep.write_csv(path)
    lines = path.read_text().splitlines()
    assert lines[0] == "u,v,H,K,residual" and len(lines) == 13


def test_degenerate_location_reported():
    def jet(u, v):
        return SurfaceJet.of((0, 0, 0), (1, 0, 0), (u, 0, 0), (0, 0, 0), (0, 0, 0), (0, 0, 0))

    with pytest.raises(DegenerateSampleError) as exc:
        weingarten_residual(jet, (1, 0, 0), Grid((0, 1), (0, 1), 2, 2))
    assert exc.value.location == (0.0, 0.0)


def test_fd_sphere_matches_analytic():
    s = sphere(1.0)
    fd = finite_difference_jet(s.pointmap, 0.4, 1.3, 1e-4)
    ex = s.jet(0.4, 1.3)
    for k in ("xu", "xv", "xuu", "xuv", "xvv"):
        assert np.max(np.abs(getattr(fd, k) - getattr(ex, k))) < 1e-7


def test_fd_linear_map():
    fd = finite_difference_jet(lambda u, v: (u, v, 0.0), 0.3, 0.2, 1e-3)
    for k in ("xuu", "xuv", "xvv"):
        assert np.max(np.abs(getattr(fd, k))) < 1e-9


def _fd_error(h):
    u, v = 0.7, 0.4
    c, s = math.cosh(u), math.sinh(u)
    exact = SurfaceJet.of(catenoid_map(u, v), (s * math.cos(v), s * math.sin(v), 1),
                          (-c * math.sin(v), c * math.cos(v), 0), (c * math.cos(v), c * math.sin(v), 0),
                          (-s * math.sin(v), s * math.cos(v), 0), (-c * math.cos(v), -c * math.sin(v), 0))
    fd = finite_difference_jet(catenoid_map, u, v, h)
    return max(np.max(np.abs(getattr(fd, k) - getattr(exact, k))) for k in ("xu", "xv", "xuu", "xuv", "xvv"))


def test_fd_convergence_order():
    ratio = _fd_error(1e-3) / _fd_error(5e-4)
    assert 3.5 < ratio < 4.5


@pytest.mark.parametrize("make", [lambda: sphere(1.5), catenoid, lambda: cylinder(2.0),
                                  lambda: generalized_cone((0, 1), (1, -1), (1, 0.3))])
def test_fd_curvatures_agree(make):
    s = make()
    for u, v in ((s.u_range[0] * 0.5 + s.u_range[1] * 0.5, 0.3), (s.u_range[0] * 0.2 + s.u_range[1] * 0.8, 2.0)):
        a = sample(s.jet(u, v))
        b = sample(finite_difference_jet(s.pointmap, u, v, 1e-4))
        assert abs(a.H - b.H) < 1e-6 and abs(a.K - b.K) < 1e-6


vec = st.lists(st.floats(-2, 2), min_size=3, max_size=3)


@st.composite
def jets(draw):
    parts = [np.array(draw(vec)) for _ in range(6)]
    jet = SurfaceJet(*parts)
    # keep W well clear of the degeneracy floor
    cross = np.cross(jet.xu, jet.xv)
    if cross @ cross < 1e-3:
        jet = SurfaceJet(parts[0], np.array([1.0, 0, 0]), np.array([0, 1.0, 0]), *parts[3:])
    return jet


@settings(max_examples=200)
@given(jets())
def test_orientation_flip(jet):
    a, b = sample(jet), sample(jet.swapped())
    assert b.H == pytest.approx(-a.H, rel=1e-9, abs=1e-9)
    assert b.K == pytest.approx(a.K, rel=1e-9, abs=1e-9)
    assert b.k1 == pytest.approx(-a.k2, rel=1e-9, abs=1e-9)
    assert b.k2 == pytest.approx(-a.k1, rel=1e-9, abs=1e-9)


@settings(max_examples=200)
@given(jets(), st.floats(0.1, 10))
def test_scaling_law_random(jet, s):
    a = sample(jet)
    b = sample(jet.transformed(np.eye(3), scale=s))
    assert b.H == pytest.approx(a.H / s, rel=1e-9, abs=1e-9)
    assert b.K == pytest.approx(a.K / s ** 2, rel=1e-9, abs=1e-9)


@settings(max_examples=200)
@given(jets())
def test_mean_squared_dominates_gauss(jet):
    cs = sample(jet)
    assert cs.H ** 2 - cs.K >= -1e-12 * max(1.0, cs.H ** 2)


@pytest.mark.parametrize("s", [0.5, 3.0])
def test_scaling_law_shapes(s):
    for make in (lambda k: sphere(2.0 * k), lambda k: catenoid(k)):
        a = sample(make(1.0).jet(0.3, 0.5))
        b = sample(make(s).jet(0.3 * s if make(1.0).kind == "catenoid" else 0.3, 0.5))
        assert b.H == pytest.approx(a.H / s, abs=1e-12)
        assert b.K == pytest.approx(a.K / s ** 2, rel=1e-10, abs=1e-14)
