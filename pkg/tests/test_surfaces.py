import json
import math

import numpy as np
import pytest

from weingarten.numgeom import Grid, finite_difference_jet, sample, weingarten_residual
from weingarten.surfaces import (
    CertificationError,
    NonpositiveRadiusError,
    OutOfDomainError,
    ProfileState,
    SingularStateError,
    catenoid,
    cone,
    cylinder,
    from_params,
    generalized_cone,
    integrate_profile,
    integrate_riemann,
    load_params,
    revolution_profile_rhs,
    revolution_surface,
    rigid_copy,
    sphere,
)


def profile_error(relation, exact, span, step):
    init = ProfileState(0.0, exact(0.0), 0.0, math.nan)
    traj = integrate_profile(lambda s: revolution_profile_rhs(s, relation), init, span, step)
    assert traj.stop is None and traj.u_range == pytest.approx(span)
    return max(abs(s.r - exact(s.u)) for s in traj)


def arc(u):
    return math.sqrt(1 - u * u)


# ---- rhs and anchors

def test_rhs_examples():
    assert revolution_profile_rhs(ProfileState(0, 1.0, 0.0, 0), (2, 0, 2)) == pytest.approx(-1)
    assert revolution_profile_rhs(ProfileState(0, 1.0, 0.0, 0), (1, 0, 0)) == pytest.approx(1)
    r, p, c = 1.5, 0.4, 0.7
    q = math.sqrt(1 + p * p)
    assert revolution_profile_rhs(ProfileState(0, r, p, 0), (0, 1, c)) == pytest.approx(-c * r * q ** 4)


def test_rhs_singular_coefficient():
    # a/(2q^3) + b/(r q^4) = 0 at r = 1, p = 0 for (2, -1, 0)
    with pytest.raises(SingularStateError):
        revolution_profile_rhs(ProfileState(0, 1.0, 0.0, 0), (2, -1, 0))
    with pytest.raises(SingularStateError):
        revolution_profile_rhs(ProfileState(0, 0.0, 0.0, 0), (1, 0, 0))


def test_sphere_arc_anchor():
    assert profile_error((2, 0, 2), arc, (-0.9, 0.9), 1e-3) <= 1e-6


def test_catenoid_anchor():
    assert profile_error((1, 0, 0), math.cosh, (-1.0, 1.0), 1e-3) <= 1e-6


@pytest.mark.parametrize("relation,exact,span", [((2, 0, 2), arc, (-0.9, 0.9)),
                                                 ((1, 0, 0), math.cosh, (-1.0, 1.0))])
def test_step_halving(relation, exact, span):
    coarse = profile_error(relation, exact, span, 0.01)
    fine = profile_error(relation, exact, span, 0.005)
    assert coarse / fine >= 12


def test_flat_gauss_profile_is_linear():
    # bK = c with c = 0 and a = 0: r'' = 0, a cone or cylinder
    init = ProfileState(0.0, 1.0, 0.3, math.nan)
    traj = integrate_profile(lambda s: revolution_profile_rhs(s, (0, 1, 0)), init, (0, 1), 0.01)
    assert max(abs(s.r - (1 + 0.3 * s.u)) for s in traj) < 1e-13


def test_profile_stops_at_zero_radius():
    # a sphere arc run past its pole
    init = ProfileState(0.0, 1.0, 0.0, math.nan)
    traj = integrate_profile(lambda s: revolution_profile_rhs(s, (2, 0, 2)), init, (-2, 2), 1e-2)
    assert traj.stop is not None
    assert -1.0 - 1e-9 <= traj.u_range[0] and traj.u_range[1] <= 1.0 + 1e-9


def test_revolution_surface_certified():
    s = revolution_surface((2, 0, 2), 1.0, 0.0, (-0.8, 0.8))
    assert s.certification["passed"]
    cs = sample(s.jet(0.3217, 1.0))
    assert cs.H == pytest.approx(1.0, abs=1e-9)
    assert cs.K == pytest.approx(1.0, abs=1e-8)


def test_coarse_step_still_consistent():
    # jets take r'' from the ODE, so the relation holds to rounding at any step;
    # accuracy against the exact solution is what the anchors measure
    s = revolution_surface((1, 0, 0), 1.0, 0.0, (-0.5, 0.5), step=0.2)
    assert s.certification["max"] < 1e-12


def test_certification_failure_is_loud():
    from weingarten.surfaces import _certify

    s = sphere(1.0)
    with pytest.raises(CertificationError):
        _certify(s, "probe", 1.0, 1e-10)
    assert s.certification["passed"] is False


# ---- baselines

def test_cone_is_flat():
    s = cone(1.0, 0.5)
    assert s.certification["max"] < 1e-10
    assert weingarten_residual(s, (0, 1, 0), Grid((0, 1), (0, 2 * math.pi), 20, 20)).max < 1e-10


def test_generalized_cone_jet():
    s = generalized_cone((1, 2), (0, -1), (1, 0.5))
    j = s.jet(0.0, 0.0)
    assert np.allclose(j.x, (2, 0, 0))
    assert np.allclose(j.xu, (2.5, -1, 1))
    assert np.allclose(j.xv, (0, 1, 0))
    assert np.allclose(j.xuu, 0)
    assert np.allclose(j.xuv, (0, 0.5, 0))
    assert np.allclose(j.xvv, (-1, 0, 0))


def test_generalized_cone_radius_must_stay_positive():
    with pytest.raises(NonpositiveRadiusError):
        generalized_cone(r=(1, -2), u_range=(0, 1))


def test_cylinder_second_derivative_in_u():
    assert np.allclose(cylinder(3.0).jet(0.5, 0.9).xuu, 0)


def test_sphere_certificate_and_domain():
    s = sphere(2.0)
    assert s.certification["max"] < 1e-10
    with pytest.raises(OutOfDomainError):
        s.jet(1.5, 0.0)
    with pytest.raises(NonpositiveRadiusError):
        sphere(-1.0)


# ---- Riemann examples

@pytest.fixture(scope="module")
def riemann():
    return integrate_riemann(1.0, 0.0)


def test_riemann_minimal(riemann):
    g = Grid(riemann.u_range, riemann.v_range, 50, 50)
    worst = max(abs(sample(riemann.jet(u, v)).H) for u, v in g.points())
    assert worst < 1e-5
    assert riemann.stop is None


def test_riemann_identity_off_node(riemann):
    from weingarten.surfaces import riemann_identity_defect

    us = np.linspace(-0.3993, 0.3987, 97)
    assert riemann_identity_defect(riemann, us) < 1e-10


def test_riemann_without_rotation_is_catenoid():
    s = integrate_riemann(0.0, 0.0, span=(-0.8, 0.8))
    # r = cosh u with fixed centres
    for st in s.trajectory[::50]:
        assert st.r == pytest.approx(math.cosh(st.u), abs=1e-9)
        assert st.f == 0 and st.g == 0


def test_riemann_lobe_stop():
    s = integrate_riemann(3.0, 1.0, span=(-5, 5), step=1e-3)
    assert s.stop and "lobe" in s.stop
    assert s.u_range[0] > -5 and s.u_range[1] < 5


def test_riemann_jets_match_finite_differences(riemann):
    for u, v in ((-0.2713, 0.4), (0.0517, 2.2), (0.3311, 5.0)):
        ex = riemann.jet(u, v)
        fd = finite_difference_jet(riemann.pointmap, u, v, 1e-4)
        for k in ("xu", "xv", "xuu", "xuv", "xvv"):
            assert np.max(np.abs(getattr(fd, k) - getattr(ex, k))) < 1e-6, k


def test_riemann_rejects_bad_radius():
    with pytest.raises(NonpositiveRadiusError):
        integrate_riemann(1.0, 0.0, r0=0.0)


# ---- invariance and files

def _rotation(seed):
    q, r = np.linalg.qr(np.random.default_rng(seed).normal(size=(3, 3)))
    q = q * np.sign(np.diag(r))
    return q if np.linalg.det(q) > 0 else -q


@pytest.mark.parametrize("make", [lambda: sphere(2.0), catenoid, lambda: cone(1.0, 0.5),
                                  lambda: integrate_riemann(1.0, 0.5)])
def test_rigid_motion_invariance(make):
    s = make()
    moved = rigid_copy(s, _rotation(3), np.array([1.0, -2.0, 0.5]))
    for u, v in Grid(s.u_range, s.v_range, 5, 5).points():
        a, b = sample(s.jet(u, v)), sample(moved.jet(u, v))
        assert abs(a.H - b.H) < 1e-12 and abs(a.K - b.K) < 1e-12


def test_params_round_trip(tmp_path):
    for s in (sphere(2.0), generalized_cone((1, 2), (0, -1), (1, 0.5)), integrate_riemann(1.0, 0.0)):
        path = tmp_path / f"{s.kind}.json"
        path.write_text(s.to_json())
        t = load_params(path)
        assert t.kind == s.kind and t.params == s.params
        for u, v in ((s.u_range[0], 0.3), (sum(s.u_range) / 2, 1.7)):
            assert np.allclose(t.point(u, v), s.point(u, v), atol=1e-14)


def test_from_params_unknown_kind():
    with pytest.raises(ValueError):
        from_params({"kind": "torus", "parameters": {}})


def test_trajectory_csv(tmp_path):
    s = integrate_riemann(1.0, 0.0, span=(-0.1, 0.1), step=0.01)
    from weingarten.surfaces import Trajectory

    path = tmp_path / "t.csv"
    Trajectory(s.trajectory).write_csv(path)
    lines = path.read_text().splitlines()
    assert lines[0] == "u,r,r',f,g"
    assert len(lines) == 22
    u, r, rp, f, g = map(float, lines[11].split(","))
    assert (u, r, rp, f, g) == (0.0, 1.0, 0.0, 0.0, 0.0)


def test_to_json_is_plain(riemann):
    d = json.loads(riemann.to_json())
    assert d["kind"] == "riemann" and d["certification"]["passed"] is True
