"""Static figures (PNG/PDF/SVG) of generated surfaces and profiles."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .numgeom import sample  # noqa: E402


def surface_figure(surface, nu=32, nv=48, color_by="H", relation=None, path=None):
    """3D view of ``surface`` coloured by H, K or the residual of ``relation``.

    Returns the matplotlib Figure; saves it when ``path`` is given.
    """
    us = np.linspace(*surface.u_range, nu + 1)
    vs = np.linspace(*surface.v_range, nv + 1)
    X = np.empty((nu + 1, nv + 1))
    Y = np.empty_like(X)
    Z = np.empty_like(X)
    C = np.empty_like(X)
    a, b, c = relation if relation is not None else (0.0, 0.0, 0.0)
    for i, u in enumerate(us):
        for j, v in enumerate(vs):
            jet = surface.jet(float(u), float(v))
            X[i, j], Y[i, j], Z[i, j] = jet.x
            cs = sample(jet)
            if color_by == "K":
                C[i, j] = cs.K
            elif color_by == "residual":
                C[i, j] = abs(a * cs.H + b * cs.K - c)
            else:
                C[i, j] = cs.H
    fig = plt.figure(figsize=(6, 5))
    ax = fig.add_subplot(projection="3d")
    span = np.ptp(C)
    norm = (C - C.min()) / span if span > 0 else np.full_like(C, 0.5)
    ax.plot_surface(X, Y, Z, facecolors=plt.cm.viridis(norm), linewidth=0, antialiased=False,
                    shade=False)
    ax.set_title(f"{surface.kind}: {color_by} in [{C.min():.3g}, {C.max():.3g}]")
    _equal_axes(ax, X, Y, Z)
    if path is not None:
        fig.savefig(path, dpi=120, bbox_inches="tight")
        plt.close(fig)
    return fig


def _equal_axes(ax, X, Y, Z):
    mids = [0.5 * (A.max() + A.min()) for A in (X, Y, Z)]
    half = 0.5 * max(A.max() - A.min() for A in (X, Y, Z)) or 1.0
    ax.set_xlim(mids[0] - half, mids[0] + half)
    ax.set_ylim(mids[1] - half, mids[1] + half)
    ax.set_zlim(mids[2] - half, mids[2] + half)


def profile_figure(states, exact=None, path=None):
    """r(u) along a trajectory, with an optional closed form for comparison."""
    u = np.array([s.u for s in states])
    r = np.array([s.r for s in states])
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.plot(u, r, label="integrated")
    if exact is not None:
        ax.plot(u, [exact(x) for x in u], "--", label="closed form")
        ax.legend()
    ax.set_xlabel("u")
    ax.set_ylabel("r")
    if path is not None:
        fig.savefig(path, dpi=120, bbox_inches="tight")
        plt.close(fig)
    return fig


def residual_figure(report, path=None):
    """Heat map of |aH + bK - c| over the report grid."""
    g = report.grid
    res = np.array([row[4] for row in report.samples]).reshape(g.nu, g.nv)
    fig, ax = plt.subplots(figsize=(5, 4))
    floor = np.where(res > 0, res, np.nan)
    im = ax.imshow(np.log10(floor).T, origin="lower", aspect="auto",
                   extent=(*g.u_range, *g.v_range))
    fig.colorbar(im, ax=ax, label="log10 residual")
    ax.set_xlabel("u")
    ax.set_ylabel("v")
    ax.set_title(f"max {report.max:.2e}" if math.isfinite(report.max) else "residual")
    if path is not None:
        fig.savefig(path, dpi=120, bbox_inches="tight")
        plt.close(fig)
    return fig
