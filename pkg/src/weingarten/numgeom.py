"""Fundamental forms, curvatures and Weingarten residuals from surface jets.

Everything here is float64 numpy.  The normal is ``N = X_u x X_v / |X_u x X_v|``
so the sign of H follows the chart's (u, v) ordering; generators in
:mod:`weingarten.surfaces` order their charts so spheres and tubes get the
inward normal and positive H.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field

import numpy as np

W_FLOOR = 1e-14
RADICAND_CLAMP = 1e-12


class DegenerateSampleError(ValueError):
    """W = EG - F^2 fell below the immersion floor."""

    def __init__(self, msg, location=None):
        super().__init__(msg if location is None else f"{msg} at (u, v) = {location}")
        self.location = location


class CurvatureInconsistencyError(ValueError):
    pass


@dataclass(frozen=True)
class SurfaceJet:
    x: np.ndarray
    xu: np.ndarray
    xv: np.ndarray
    xuu: np.ndarray
    xuv: np.ndarray
    xvv: np.ndarray

    @classmethod
    def of(cls, x, xu, xv, xuu, xuv, xvv) -> "SurfaceJet":
        return cls(*(np.asarray(p, dtype=float) for p in (x, xu, xv, xuu, xuv, xvv)))

    def swapped(self) -> "SurfaceJet":
        """The jet of the same surface with the roles of u and v exchanged."""
        return SurfaceJet(self.x, self.xv, self.xu, self.xvv, self.xuv, self.xuu)

    def transformed(self, rotation, translation=(0.0, 0.0, 0.0), scale=1.0) -> "SurfaceJet":
        R = np.asarray(rotation, dtype=float) * scale
        t = np.asarray(translation, dtype=float)
        return SurfaceJet(R @ self.x + t, R @ self.xu, R @ self.xv,
                          R @ self.xuu, R @ self.xuv, R @ self.xvv)


@dataclass(frozen=True)
class FundamentalForms:
    E: float
    F: float
    G: float
    e: float
    f: float
    g: float
    W: float
    H1: float
    K1: float
    N: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class CurvatureSample:
    H: float
    K: float
    k1: float
    k2: float


def fundamental_forms(jet: SurfaceJet, floor: float = W_FLOOR) -> FundamentalForms:
    xu, xv = jet.xu, jet.xv
    E = float(xu @ xu)
    F = float(xu @ xv)
    G = float(xv @ xv)
    W = E * G - F * F
    if not W >= floor:
        raise DegenerateSampleError(f"degenerate jet: W = {W:.3e} below floor {floor:.0e}")
    cross = np.cross(xu, xv)
    # [Xu, Xv, Y] = <Xu x Xv, Y>
    t_uu = float(cross @ jet.xuu)
    t_uv = float(cross @ jet.xuv)
    t_vv = float(cross @ jet.xvv)
    s = math.sqrt(W)
    H1 = G * t_uu - 2 * F * t_uv + E * t_vv
    K1 = t_uu * t_vv - t_uv * t_uv
    return FundamentalForms(E, F, G, t_uu / s, t_uv / s, t_vv / s, W, H1, K1, cross / s)


def curvatures(forms: FundamentalForms) -> CurvatureSample:
    W = forms.W
    H = forms.H1 / (2 * W ** 1.5)
    K = forms.K1 / (W * W)
    rad = H * H - K
    if rad < 0:
        if rad < -RADICAND_CLAMP:
            raise CurvatureInconsistencyError(f"H^2 - K = {rad:.3e} is negative")
        rad = 0.0
    root = math.sqrt(rad)
    return CurvatureSample(H, K, H + root, H - root)


def sample(jet: SurfaceJet) -> CurvatureSample:
    return curvatures(fundamental_forms(jet))


def squared_identity(forms: FundamentalForms, relation) -> float:
    """``a^2 H1^2 W - 4 (c W^2 - b K1)^2`` evaluated on one sample."""
    a, b, c = _abc(relation)
    inner = c * forms.W ** 2 - b * forms.K1
    return a * a * forms.H1 ** 2 * forms.W - 4 * inner * inner


def _abc(relation):
    if hasattr(relation, "numeric"):
        return relation.numeric()
    a, b, c = relation
    return float(a), float(b), float(c)


@dataclass(frozen=True)
class Grid:
    u_range: tuple[float, float]
    v_range: tuple[float, float]
    nu: int
    nv: int

    def __post_init__(self):
        if self.nu < 2 or self.nv < 2:
            raise ValueError("grid counts must be at least 2")

    def points(self):
        us = np.linspace(*self.u_range, self.nu)
        vs = np.linspace(*self.v_range, self.nv)
        for u in us:
            for v in vs:
                yield float(u), float(v)

    def to_dict(self) -> dict:
        return {"u_range": list(self.u_range), "v_range": list(self.v_range),
                "nu": self.nu, "nv": self.nv}


@dataclass
class ResidualReport:
    grid: Grid
    relation: tuple[float, float, float]
    max: float
    mean: float
    argmax: tuple[float, float]
    w_floor: float
    samples: list = field(default_factory=list, repr=False)

    def to_dict(self) -> dict:
        return {
            "grid": self.grid.to_dict(),
            "relation": list(self.relation),
            "max_residual": self.max,
            "mean_residual": self.mean,
            "argmax": list(self.argmax),
            "min_W": self.w_floor,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def write_csv(self, path):
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["u", "v", "H", "K", "residual"])
            for row in self.samples:
                w.writerow([repr(x) for x in row])


def weingarten_residual(surface, relation, grid: Grid | None = None) -> ResidualReport:
    """Sample ``|aH + bK - c|`` over ``grid``.

    Args:
        surface: anything with ``jet(u, v)``, or a callable returning a jet.
        relation: a WeingartenRelation or an ``(a, b, c)`` triple.
        grid: sampling grid; defaults to ``surface.default_grid()``.
    """
    a, b, c = _abc(relation)
    jet_of = surface.jet if hasattr(surface, "jet") else surface
    if grid is None:
        grid = surface.default_grid()
    rows = []
    worst, where, total, wmin = -1.0, (math.nan, math.nan), 0.0, math.inf
    for u, v in grid.points():
        try:
            forms = fundamental_forms(jet_of(u, v))
        except DegenerateSampleError as exc:
            raise DegenerateSampleError(str(exc), (u, v)) from None
        cs = curvatures(forms)
        res = abs(a * cs.H + b * cs.K - c)
        rows.append((u, v, cs.H, cs.K, res))
        total += res
        wmin = min(wmin, forms.W)
        if res > worst:
            worst, where = res, (u, v)
    return ResidualReport(grid, (a, b, c), worst, total / len(rows), where, wmin, rows)


def finite_difference_jet(pointmap, u: float, v: float, h: float = 1e-4) -> SurfaceJet:
    """Central-difference jet of ``pointmap(u, v) -> R^3``; O(h^2) accurate."""
    if h <= 0:
        raise ValueError("step must be positive")
    P = lambda s, t: np.asarray(pointmap(s, t), dtype=float)  # noqa: E731
    x = P(u, v)
    up, um, vp, vm = P(u + h, v), P(u - h, v), P(u, v + h), P(u, v - h)
    xu = (up - um) / (2 * h)
    xv = (vp - vm) / (2 * h)
    xuu = (up - 2 * x + um) / (h * h)
    xvv = (vp - 2 * x + vm) / (h * h)
    xuv = (P(u + h, v + h) - P(u + h, v - h) - P(u - h, v + h) + P(u - h, v - h)) / (4 * h * h)
    return SurfaceJet(x, xu, xv, xuu, xuv, xvv)
