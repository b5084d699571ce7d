"""Symbolic frame vectors and the two cyclic parametrizations.

Frenet case: the circle ``X = c(u) + r(u) (cos v n(u) + sin v b(u))`` about a
curve with Frenet frame ``{t, n, b}``, curvature ``kappa`` and torsion
``sigma``, and centre velocity ``c' = alpha t + beta n + gamma b``.  The
centre itself never enters the curvature, so ``X`` is stored as its offset
from ``c(u)`` and ``X_u`` is assembled from ``c'`` directly.

Parallel case: ``X = (f(u), g(u), u) + r(u) (cos v, sin v, 0)`` in the fixed
Cartesian basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..cas import FourierSeries, Polynomial, SymbolAlphabet

FRENET = "frenet"
PARALLEL = "parallel"
CARTESIAN = "cartesian"

#: Torsion is written sigma in the Frenet equations and tau in the case
#: analysis; both spellings name one symbol.
FRENET_ALPHABET = SymbolAlphabet.build(
    params=["a", "b", "c"],
    functions=["kappa", "sigma", "r", "alpha", "beta", "gamma"],
    aliases={"tau": "sigma"},
)

PARALLEL_ALPHABET = SymbolAlphabet.build(
    params=["a", "b", "c", "lambda", "mu", "alpha", "beta"],
    coordinate="u",
    functions=["f", "g", "r"],
)


def alphabet_for(kind: str) -> SymbolAlphabet:
    if kind == FRENET:
        return FRENET_ALPHABET
    if kind == PARALLEL:
        return PARALLEL_ALPHABET
    raise ValueError(f"unknown parametrization {kind!r}")


class FrameMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class FrameVector:
    coords: tuple[FourierSeries, FourierSeries, FourierSeries]
    frame: str  # "frenet" or "cartesian"

    def _check(self, other: "FrameVector"):
        if self.frame != other.frame:
            raise FrameMismatchError(f"cannot combine {self.frame} and {other.frame} vectors")

    def __add__(self, other):
        self._check(other)
        return FrameVector(tuple(p + q for p, q in zip(self.coords, other.coords)), self.frame)

    def __sub__(self, other):
        self._check(other)
        return FrameVector(tuple(p - q for p, q in zip(self.coords, other.coords)), self.frame)

    def scale(self, s) -> "FrameVector":
        return FrameVector(tuple(p * s for p in self.coords), self.frame)

    def dot(self, other: "FrameVector") -> FourierSeries:
        self._check(other)
        x, y, z = self.coords
        p, q, w = other.coords
        return x * p + y * q + z * w

    def derive_v(self) -> "FrameVector":
        return FrameVector(tuple(p.derive_v() for p in self.coords), self.frame)

    def derive_u(self) -> "FrameVector":
        x, y, z = self.coords
        if self.frame == CARTESIAN:
            return FrameVector((x.derive_u(), y.derive_u(), z.derive_u()), self.frame)
        alpha = x.alphabet
        kappa = Polynomial.symbol(alpha, "kappa")
        sigma = Polynomial.symbol(alpha, "sigma")
        # t' = kappa n,  n' = -kappa t + sigma b,  b' = -sigma n
        return FrameVector(
            (
                x.derive_u() - y * kappa,
                y.derive_u() + x * kappa - z * sigma,
                z.derive_u() + y * sigma,
            ),
            self.frame,
        )

    def evaluate(self, values, v):
        return tuple(p.evaluate(values, v) for p in self.coords)


def triple_product(u1: FrameVector, u2: FrameVector, u3: FrameVector) -> FourierSeries:
    """Determinant ``[u1, u2, u3]`` in an orthonormal right-handed frame."""
    u1._check(u2)
    u1._check(u3)
    x1, y1, z1 = u1.coords
    x2, y2, z2 = u2.coords
    x3, y3, z3 = u3.coords
    return x1 * (y2 * z3 - z2 * y3) - y1 * (x2 * z3 - z2 * x3) + z1 * (x2 * y3 - y2 * x3)


@dataclass(frozen=True)
class CyclicParametrization:
    kind: str
    X: FrameVector
    Xu: FrameVector
    Xv: FrameVector
    Xuu: FrameVector
    Xuv: FrameVector
    Xvv: FrameVector

    @property
    def alphabet(self) -> SymbolAlphabet:
        return alphabet_for(self.kind)


def _series(alpha, a0=0, cos1=0, sin1=0) -> FourierSeries:
    def lift(x):
        return x if isinstance(x, Polynomial) else Polynomial.constant(alpha, x)

    return FourierSeries(lift(a0), [lift(cos1)], [lift(sin1)])


@lru_cache(maxsize=None)
def build_cyclic_parametrization(kind: str) -> CyclicParametrization:
    alpha = alphabet_for(kind)
    P = lambda name: Polynomial.symbol(alpha, name)  # noqa: E731
    r, r1 = P("r"), P("r'")
    if kind == FRENET:
        frame = FRENET
        kappa, sigma = P("kappa"), P("sigma")
        X = FrameVector((_series(alpha), _series(alpha, cos1=r), _series(alpha, sin1=r)), frame)
        Xu = FrameVector(
            (
                _series(alpha, P("alpha"), cos1=-(r * kappa)),
                _series(alpha, P("beta"), cos1=r1, sin1=-(r * sigma)),
                _series(alpha, P("gamma"), cos1=r * sigma, sin1=r1),
            ),
            frame,
        )
    else:
        frame = CARTESIAN
        X = FrameVector(
            (_series(alpha, P("f"), cos1=r), _series(alpha, P("g"), sin1=r), _series(alpha, P("u"))),
            frame,
        )
        Xu = X.derive_u()
    Xv = X.derive_v()
    Xuu = Xu.derive_u()
    Xuv = Xu.derive_v()
    Xvv = Xv.derive_v()
    return CyclicParametrization(kind, X, Xu, Xv, Xuu, Xuv, Xvv)
