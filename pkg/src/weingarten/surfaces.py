"""Surface generators with exact or ODE-consistent jets.

Every chart here is a cyclic surface ``X(u, v) = (f(u), g(u), h(u)) + r(u)(cos v, sin v, 0)``
ordered so that ``X_u x X_v`` points toward the axis of the circles.  With this
orientation a sphere of radius R has H = +1/R, a cylinder of radius R has
H = 1/(2R), and a rotational profile satisfies

    H = (1 + r'^2 - r r'') / (2 r (1 + r'^2)^{3/2}),   K = -r'' / (r (1 + r'^2)^2).
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction

import numpy as np

from .numgeom import Grid, SurfaceJet, sample, weingarten_residual

SINGULAR_COEF = 1e-12
SLOPE_LIMIT = 1e3  # r' beyond this ends a Riemann lobe
DOMAIN_SLACK = 1e-12


class NonpositiveRadiusError(ValueError):
    pass


class CertificationError(RuntimeError):
    pass


class SingularStateError(ArithmeticError):
    def __init__(self, msg, state=None):
        super().__init__(msg)
        self.state = state


class OutOfDomainError(ValueError):
    pass


@dataclass(frozen=True)
class ProfileState:
    u: float
    r: float
    rp: float
    rpp: float
    f: float = 0.0
    g: float = 0.0
    lam: float = 0.0
    mu: float = 0.0
    rppp: float | None = None


def _circle_jet(u, v, F, G, Z, R) -> SurfaceJet:
    """Jet of ``(F(u), G(u), Z(u)) + R(u)(cos v, sin v, 0)``; each of F, G, Z, R is (value, d1, d2)."""
    c, s = math.cos(v), math.sin(v)
    f0, f1, f2 = F
    g0, g1, g2 = G
    z0, z1, z2 = Z
    r0, r1, r2 = R
    return SurfaceJet.of(
        (f0 + r0 * c, g0 + r0 * s, z0),
        (f1 + r1 * c, g1 + r1 * s, z1),
        (-r0 * s, r0 * c, 0.0),
        (f2 + r2 * c, g2 + r2 * s, z2),
        (-r1 * s, r1 * c, 0.0),
        (-r0 * c, -r0 * s, 0.0),
    )


@dataclass
class CyclicSurface:
    """A generated surface: parameters, domain box and a jet evaluator."""

    kind: str
    params: dict
    u_range: tuple[float, float]
    v_range: tuple[float, float] = (0.0, 2 * math.pi)
    evaluator: object = field(default=None, repr=False)
    certification: dict = field(default_factory=dict)
    trajectory: list = field(default_factory=list, repr=False)
    stop: str | None = None

    def _check(self, u, v):
        lo, hi = self.u_range
        vlo, vhi = self.v_range
        if not (lo - DOMAIN_SLACK <= u <= hi + DOMAIN_SLACK and vlo - DOMAIN_SLACK <= v <= vhi + DOMAIN_SLACK):
            raise OutOfDomainError(f"({u}, {v}) outside {self.kind} domain "
                                   f"u in {self.u_range}, v in {self.v_range}")

    def jet(self, u: float, v: float) -> SurfaceJet:
        self._check(u, v)
        return self.evaluator(u, v)

    def point(self, u: float, v: float) -> np.ndarray:
        return self.jet(u, v).x

    def pointmap(self, u, v):
        """Position without the domain check (for finite differences at the boundary)."""
        return self.evaluator(u, v).x

    def default_grid(self, nu: int = 24, nv: int = 24) -> Grid:
        return Grid(tuple(self.u_range), tuple(self.v_range), nu, nv)

    def to_dict(self) -> dict:
        out = {
            "kind": self.kind,
            "parameters": self.params,
            "domain": {"u": list(self.u_range), "v": list(self.v_range)},
            "certification": self.certification,
        }
        if self.stop:
            out["stop"] = self.stop
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


# ---------------------------------------------------------------------------
# closed-form families


def _certify(surface: CyclicSurface, name: str, value: float, tol: float):
    surface.certification = {"quantity": name, "max": value, "tol": tol, "passed": value < tol}
    if not value < tol:
        raise CertificationError(f"{surface.kind}: {name} = {value:.3e} exceeds {tol:.0e}")
    return surface


def _max_abs(surface, what, grid=None):
    grid = grid or surface.default_grid()
    worst = 0.0
    for u, v in grid.points():
        cs = sample(surface.jet(u, v))
        worst = max(worst, abs(getattr(cs, what)))
    return worst


def sphere(R: float = 1.0, u_range=(-1.4, 1.4), center=(0.0, 0.0, 0.0)) -> CyclicSurface:
    """Latitude-longitude chart ``(R cos u cos v, R cos u sin v, R sin u)``, inward normal."""
    if R <= 0:
        raise NonpositiveRadiusError("sphere radius must be positive")
    if not (-math.pi / 2 < u_range[0] < u_range[1] < math.pi / 2):
        raise ValueError("sphere latitude range must lie inside (-pi/2, pi/2)")
    cx, cy, cz = center

    def ev(u, v):
        cu, su = math.cos(u), math.sin(u)
        return _circle_jet(u, v, (cx, 0, 0), (cy, 0, 0), (cz + R * su, R * cu, -R * su),
                           (R * cu, -R * su, -R * cu))

    s = CyclicSurface("sphere", {"R": R, "center": list(center)}, tuple(u_range), evaluator=ev)
    rep = weingarten_residual(s, (1.0, -R, 0.0), s.default_grid())
    return _certify(s, "max |H - R K|", rep.max, 1e-10)


def cylinder(R: float = 1.0, u_range=(0.0, 1.0)) -> CyclicSurface:
    if R <= 0:
        raise NonpositiveRadiusError("cylinder radius must be positive")
    s = CyclicSurface("cylinder", {"R": R}, tuple(u_range),
                      evaluator=lambda u, v: _circle_jet(u, v, (0, 0, 0), (0, 0, 0), (u, 1, 0), (R, 0, 0)))
    return _certify(s, "max |K|", _max_abs(s, "K"), 1e-10)


def catenoid(scale: float = 1.0, u_range=(-1.0, 1.0)) -> CyclicSurface:
    """``(c cosh(u/c) cos v, c cosh(u/c) sin v, u)``."""
    c = scale
    if c <= 0:
        raise NonpositiveRadiusError("catenoid scale must be positive")

    def ev(u, v):
        ch, sh = math.cosh(u / c), math.sinh(u / c)
        return _circle_jet(u, v, (0, 0, 0), (0, 0, 0), (u, 1, 0), (c * ch, sh, ch / c))

    s = CyclicSurface("catenoid", {"scale": c}, tuple(u_range), evaluator=ev)
    return _certify(s, "max |H|", _max_abs(s, "H"), 1e-10)


def generalized_cone(f=(0.0, 0.0), g=(0.0, 0.0), r=(1.0, 0.0), u_range=(0.0, 1.0),
                     kind="generalized-cone") -> CyclicSurface:
    """Circles with linear centre ``(f0 + f1 u, g0 + g1 u, u)`` and linear radius ``r0 + r1 u``."""
    f0, f1 = map(float, f)
    g0, g1 = map(float, g)
    r0, r1 = map(float, r)
    lo, hi = u_range
    if min(r0 + r1 * lo, r0 + r1 * hi) <= 0:
        raise NonpositiveRadiusError(f"radius r(u) = {r0} + {r1} u is not positive on [{lo}, {hi}]")

    def ev(u, v):
        return _circle_jet(u, v, (f0 + f1 * u, f1, 0), (g0 + g1 * u, g1, 0), (u, 1, 0),
                           (r0 + r1 * u, r1, 0))

    s = CyclicSurface(kind, {"f": [f0, f1], "g": [g0, g1], "r": [r0, r1]}, tuple(u_range),
                      evaluator=ev)
    return _certify(s, "max |K|", _max_abs(s, "K"), 1e-10)


def cone(r0: float = 1.0, slope: float = 0.5, u_range=(0.0, 1.0)) -> CyclicSurface:
    """Right circular cone: coaxial circles with radius ``r0 + slope u``."""
    return generalized_cone((0, 0), (0, 0), (r0, slope), u_range, kind="cone")


_BASELINES = {
    "sphere": sphere,
    "cylinder": cylinder,
    "cone": cone,
    "catenoid": catenoid,
    "generalized-cone": generalized_cone,
}


def make_baseline(kind: str, **params) -> CyclicSurface:
    try:
        maker = _BASELINES[kind]
    except KeyError:
        raise ValueError(f"unknown baseline {kind!r}; choose from {', '.join(_BASELINES)}") from None
    return maker(**params)


# ---------------------------------------------------------------------------
# rotational profiles


def _abc(relation):
    if hasattr(relation, "numeric"):
        return relation.numeric()
    return tuple(float(Fraction(str(x))) if isinstance(x, str) else float(x) for x in relation)


def revolution_profile_rhs(state: ProfileState, relation) -> float:
    """The r'' that makes ``aH + bK = c`` hold for the rotational profile at ``state``."""
    a, b, c = _abc(relation)
    r, p = state.r, state.rp
    if r <= 0:
        raise SingularStateError("radius reached zero", state)
    q = math.sqrt(1 + p * p)
    coef = a / (2 * q ** 3) + b / (r * q ** 4)
    if abs(coef) < SINGULAR_COEF:
        raise SingularStateError(f"r'' coefficient {coef:.3e} vanishes at u = {state.u}", state)
    return (a / (2 * r * q) - c) / coef


def _rk4(fun, u, y, h):
    k1 = fun(u, y)
    k2 = fun(u + h / 2, y + h / 2 * k1)
    k3 = fun(u + h / 2, y + h / 2 * k2)
    k4 = fun(u + h, y + h * k3)
    return y + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)


@dataclass
class Trajectory:
    """Nodes sorted by u plus the reason integration stopped early (if it did)."""

    states: list
    stop: str | None = None
    step: float = 0.0

    def __iter__(self):
        return iter(self.states)

    def __len__(self):
        return len(self.states)

    def __getitem__(self, i):
        return self.states[i]

    @property
    def u_range(self):
        return self.states[0].u, self.states[-1].u

    def write_csv(self, path):
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["u", "r", "r'", "f", "g"])
            for s in self.states:
                w.writerow([repr(s.u), repr(s.r), repr(s.rp), repr(s.f), repr(s.g)])


def _march(deriv, make_state, initial, y0, span, step, stop_check=None):
    """Integrate both ways from ``initial.u`` to the ends of ``span``."""
    lo, hi = span
    if not lo <= initial.u <= hi:
        raise ValueError("initial u must lie inside the span")
    if step <= 0:
        raise ValueError("step must be positive")
    out = {0: [make_state(initial.u, y0)]}
    reason = None
    for sign, end in ((1, hi), (-1, lo)):
        u, y = initial.u, y0
        nodes = []
        n = int(math.ceil(abs(end - u) / step - 1e-9))
        for i in range(n):
            h = sign * min(step, abs(end - u))
            try:
                y_new = _rk4(deriv, u, y, h)
                st = make_state(u + h, y_new)
            except SingularStateError as exc:
                reason = f"{exc} (last valid u = {u:.6g})"
                break
            if stop_check and (msg := stop_check(st)):
                reason = f"{msg} at u = {st.u:.6g}"
                break
            u, y = u + h, y_new
            nodes.append(st)
        out[sign] = nodes
    states = out[-1][::-1] + out[0] + out[1]
    return Trajectory(states, reason, step)


def integrate_profile(rhs, initial: ProfileState, span, step: float) -> Trajectory:
    """Classical RK4 for ``r'' = rhs(state)``; stops cleanly at r -> 0 or singular states.

    ``rhs`` takes a ProfileState (``rpp`` unset) and returns r''.
    """

    def deriv(u, y):
        return np.array([y[1], rhs(ProfileState(u, y[0], y[1], math.nan))])

    def make(u, y):
        if y[0] <= 0:
            raise SingularStateError("radius reached zero")
        return ProfileState(u, float(y[0]), float(y[1]), rhs(ProfileState(u, y[0], y[1], math.nan)))

    rhs(initial)  # raises on a singular initial state
    return _march(deriv, make, initial, np.array([initial.r, initial.rp], dtype=float), span, step)


class _DenseEvaluator:
    """Jets between nodes: one exact RK4 sub-step from the nearest node."""

    def __init__(self, traj: Trajectory, deriv, state_vector, jet_of_state, make_state):
        self.traj = traj
        self.us = np.array([s.u for s in traj.states])
        self.deriv = deriv
        self.vec = state_vector
        self.jet_of_state = jet_of_state
        self.make_state = make_state

    def state(self, u):
        i = int(np.argmin(np.abs(self.us - u)))
        node = self.traj.states[i]
        h = u - node.u
        if h == 0:
            return node
        return self.make_state(u, _rk4(self.deriv, node.u, self.vec(node), h))

    def __call__(self, u, v):
        return self.jet_of_state(self.state(u), v)


def _profile_jet(st: ProfileState, v):
    return _circle_jet(st.u, v, (st.f, st.mu * st.r ** 2, 2 * st.mu * st.r * st.rp),
                       (st.g, st.lam * st.r ** 2, 2 * st.lam * st.r * st.rp),
                       (st.u, 1, 0), (st.r, st.rp, st.rpp))


def revolution_surface(relation, r0: float = 1.0, rp0: float = 0.0, span=(-0.5, 0.5),
                       step: float = 1e-3, u0: float | None = None, tol: float = 1e-6) -> CyclicSurface:
    """Rotational Weingarten surface from the profile ODE, certified against the relation."""
    a, b, c = _abc(relation)
    rhs = lambda st: revolution_profile_rhs(st, (a, b, c))  # noqa: E731
    u0 = (span[0] + span[1]) / 2 if u0 is None else u0
    init = ProfileState(u0, r0, rp0, math.nan)
    traj = integrate_profile(rhs, init, span, step)

    def deriv(u, y):
        return np.array([y[1], rhs(ProfileState(u, y[0], y[1], math.nan))])

    ev = _DenseEvaluator(traj, deriv, lambda s: np.array([s.r, s.rp]), _profile_jet,
                         lambda u, y: ProfileState(u, y[0], y[1], rhs(ProfileState(u, y[0], y[1], 0))))
    s = CyclicSurface("revolution-profile",
                      {"relation": [a, b, c], "r0": r0, "rp0": rp0, "u0": u0, "step": step},
                      traj.u_range, evaluator=ev, trajectory=traj.states, stop=traj.stop)
    rep = weingarten_residual(s, (a, b, c), s.default_grid(max(2, min(len(traj), 64)), 8))
    return _certify(s, "max |aH + bK - c|", rep.max, tol)


# ---------------------------------------------------------------------------
# Riemann minimal examples


def riemann_rhs(r, p, lam, mu):
    """r'' = (1 + (lambda^2 + mu^2) r^4 + r'^2) / r."""
    if r <= 0:
        raise SingularStateError("radius reached zero")
    return (1 + (lam * lam + mu * mu) * r ** 4 + p * p) / r


def riemann_third(r, p, rpp, lam, mu):
    """r''' from differentiating the Riemann ODE."""
    return (4 * (lam * lam + mu * mu) * r ** 3 * p + p * rpp) / r


def integrate_riemann(lam: float, mu: float, r0: float = 1.0, r0p: float = 0.0,
                      span=(-0.4, 0.4), step: float = 1e-3, tol: float = 1e-5) -> CyclicSurface:
    """Riemann example: ``f' = mu r^2``, ``g' = lambda r^2`` and the radius ODE.

    Integration stops on a single monotone lobe (|r'| above ``SLOPE_LIMIT``);
    the surface domain is whatever part of ``span`` was reached.
    """
    if r0 <= 0:
        raise NonpositiveRadiusError("initial radius must be positive")
    u0 = 0.0 if span[0] <= 0 <= span[1] else span[0]

    def deriv(u, y):
        r, p = y[0], y[1]
        return np.array([p, riemann_rhs(r, p, lam, mu), mu * r * r, lam * r * r])

    def make(u, y):
        r, p = float(y[0]), float(y[1])
        rpp = riemann_rhs(r, p, lam, mu)
        return ProfileState(u, r, p, rpp, float(y[2]), float(y[3]), lam, mu,
                            riemann_third(r, p, rpp, lam, mu))

    init = make(u0, np.array([r0, r0p, 0.0, 0.0]))

    def stop(st):
        return "slope limit reached (end of lobe)" if abs(st.rp) > SLOPE_LIMIT else None

    traj = _march(deriv, make, init, np.array([r0, r0p, 0.0, 0.0]), span, step, stop)
    vec = lambda s: np.array([s.r, s.rp, s.f, s.g])  # noqa: E731
    ev = _DenseEvaluator(traj, deriv, vec, _profile_jet, make)
    s = CyclicSurface("riemann", {"lambda": lam, "mu": mu, "r0": r0, "r0p": r0p, "step": step},
                      traj.u_range, evaluator=ev, trajectory=traj.states, stop=traj.stop)
    return _certify(s, "max |H|", _max_abs(s, "H"), tol)


def riemann_identity_defect(surface: CyclicSurface, points) -> float:
    """max |1 + (lambda^2+mu^2) r^4 + r'^2 - r r''| at the given u values (off-node allowed)."""
    lam, mu = surface.params["lambda"], surface.params["mu"]
    worst = 0.0
    for u in points:
        st = surface.evaluator.state(u)
        worst = max(worst, abs(1 + (lam ** 2 + mu ** 2) * st.r ** 4 + st.rp ** 2 - st.r * st.rpp))
    return worst


# ---------------------------------------------------------------------------
# parameter files


def from_params(spec: dict) -> CyclicSurface:
    """Build a surface from ``{"kind": ..., "parameters": {...}}`` (the JSON param-file shape)."""
    spec = dict(spec)
    kind = spec.pop("kind")
    params = dict(spec.get("parameters", spec))
    for key in ("u_range", "span", "center", "f", "g", "r"):
        if key in params and isinstance(params[key], list):
            params[key] = tuple(params[key])
    if kind in _BASELINES:
        return make_baseline(kind, **params)
    if kind == "riemann":
        return integrate_riemann(params.pop("lambda", 0.0), params.pop("mu", 0.0), **params)
    if kind == "revolution-profile":
        return revolution_surface(tuple(params.pop("relation")), **params)
    raise ValueError(f"unknown surface kind {kind!r}")


def load_params(path) -> CyclicSurface:
    with open(path) as fh:
        return from_params(json.load(fh))


def rigid_copy(surface: CyclicSurface, rotation, translation) -> CyclicSurface:
    """The same surface moved by ``x -> R x + t`` (certification is not repeated)."""
    base = surface.evaluator

    def ev(u, v):
        return base(u, v).transformed(rotation, translation)

    return replace(surface, evaluator=ev)
