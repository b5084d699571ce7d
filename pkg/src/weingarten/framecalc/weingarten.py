"""The squared Weingarten identity ``a^2 H1^2 W - 4 (c W^2 - b K1)^2``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..cas import FourierSeries, Polynomial, parse
from .frames import alphabet_for, build_cyclic_parametrization, triple_product


class RelationError(ValueError):
    pass


def _coerce(x):
    if isinstance(x, str):
        try:
            return Fraction(x)
        except ValueError:
            return x
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    raise RelationError(f"relation coefficient must be rational or a symbol name, got {x!r}")


@dataclass(frozen=True)
class WeingartenRelation:
    """``a H + b K = c``.

    Each coefficient is an exact rational or a formula over the alphabet's
    parameters (``"a"``, ``"-a^2/4"``).
    """

    a: object
    b: object
    c: object

    def __post_init__(self):
        for name in "abc":
            object.__setattr__(self, name, _coerce(getattr(self, name)))
        a, b = self.a, self.b
        if isinstance(a, Fraction) and isinstance(b, Fraction) and a == 0 and b == 0:
            raise RelationError("a^2 + b^2 must be nonzero")

    @classmethod
    def parse(cls, text: str) -> "WeingartenRelation":
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 3:
            raise RelationError(f"expected 'a,b,c', got {text!r}")
        return cls(*parts)

    @property
    def normalization(self) -> str:
        if self.c == 0 and self.a == 1:
            return "a=1"
        if self.c == 1:
            return "c=1"
        return "raw"

    def polys(self, alphabet) -> tuple[Polynomial, Polynomial, Polynomial]:
        out = []
        for x in (self.a, self.b, self.c):
            if isinstance(x, str):
                out.append(parse(x, alphabet))
            else:
                out.append(Polynomial.constant(alphabet, x))
        return tuple(out)

    def numeric(self) -> tuple[float, float, float]:
        if not all(isinstance(x, Fraction) for x in (self.a, self.b, self.c)):
            raise RelationError("relation has symbolic coefficients")
        return float(self.a), float(self.b), float(self.c)

    def negated(self) -> "WeingartenRelation":
        def neg(x):
            return f"-({x})" if isinstance(x, str) else -x

        return WeingartenRelation(neg(self.a), neg(self.b), neg(self.c))

    def label(self) -> str:
        return ",".join(str(x) for x in (self.a, self.b, self.c))

    def to_dict(self) -> dict:
        return {"a": str(self.a), "b": str(self.b), "c": str(self.c),
                "normalization": self.normalization}


@dataclass(frozen=True)
class CurvatureParts:
    """E, F, G, W and the H1/K1 numerators as Fourier series in v."""

    E: FourierSeries
    F: FourierSeries
    G: FourierSeries
    W: FourierSeries
    T_uu: FourierSeries
    T_uv: FourierSeries
    T_vv: FourierSeries
    H1: FourierSeries
    K1: FourierSeries


@lru_cache(maxsize=None)
def curvature_parts(kind: str) -> CurvatureParts:
    par = build_cyclic_parametrization(kind)
    E = par.Xu.dot(par.Xu)
    F = par.Xu.dot(par.Xv)
    G = par.Xv.dot(par.Xv)
    W = E * G - F * F
    t_uu = triple_product(par.Xu, par.Xv, par.Xuu)
    t_uv = triple_product(par.Xu, par.Xv, par.Xuv)
    t_vv = triple_product(par.Xu, par.Xv, par.Xvv)
    H1 = G * t_uu - F * t_uv * 2 + E * t_vv
    K1 = t_uu * t_vv - t_uv * t_uv
    return CurvatureParts(E, F, G, W, t_uu, t_uv, t_vv, H1, K1)


@lru_cache(maxsize=None)
def _assemble(kind: str, relation: WeingartenRelation) -> FourierSeries:
    parts = curvature_parts(kind)
    a, b, c = relation.polys(alphabet_for(kind))
    W = parts.W
    lhs = parts.H1 * parts.H1 * W * (a * a)
    inner = W * W * c - parts.K1 * b
    return lhs - inner * inner * 4


def assemble_weingarten(relation: WeingartenRelation, kind: str) -> FourierSeries:
    """Exact Fourier expansion of ``a^2 H1^2 W - 4 (c W^2 - b K1)^2``."""
    return _assemble(kind, relation)
