"""Finite Fourier series in the circle parameter ``v``.

A series is ``a0 + sum_j (A_j cos(jv) + B_j sin(jv))`` with polynomial
coefficients, stored only in the canonical basis ``{1, cos jv, sin jv}``.
Products are reduced with the product-to-sum identities.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .polynomial import Polynomial

HALF = Fraction(1, 2)


class FourierSeries:
    __slots__ = ("alphabet", "a0", "cos", "sin")

    def __init__(self, a0: Polynomial, cos=(), sin=()):
        alpha = a0.alphabet
        cos = list(cos)
        sin = list(sin)
        n = max(len(cos), len(sin))
        zero = Polynomial(alpha)
        cos += [zero] * (n - len(cos))
        sin += [zero] * (n - len(sin))
        for p in cos + sin:
            alpha = alpha.join(p.alphabet)
        while n and cos[n - 1].is_zero() and sin[n - 1].is_zero():
            n -= 1
        self.alphabet = alpha
        self.a0 = a0
        self.cos: tuple[Polynomial, ...] = tuple(cos[:n])
        self.sin: tuple[Polynomial, ...] = tuple(sin[:n])

    @classmethod
    def constant(cls, p: Polynomial) -> "FourierSeries":
        return cls(p)

    @classmethod
    def basis(cls, alphabet, j: int, kind: str, coeff: Polynomial | None = None) -> "FourierSeries":
        """``coeff * cos(jv)`` / ``coeff * sin(jv)`` / ``coeff``."""
        if coeff is None:
            coeff = Polynomial.constant(alphabet, 1)
        zero = Polynomial(alphabet)
        if kind == "const" or j == 0:
            if kind == "sin":
                return cls(zero)
            return cls(coeff)
        cos = [zero] * j
        sin = [zero] * j
        (cos if kind == "cos" else sin)[j - 1] = coeff
        return cls(zero, cos, sin)

    @property
    def degree(self) -> int:
        return len(self.cos)

    def is_zero(self) -> bool:
        return self.a0.is_zero() and not self.cos

    def coefficients(self):
        """Yield ``(j, kind, poly)`` for every stored slot, A0 first."""
        yield 0, "const", self.a0
        for j in range(1, self.degree + 1):
            yield j, "cos", self.cos[j - 1]
            yield j, "sin", self.sin[j - 1]

    def coeff(self, j: int, kind: str) -> Polynomial:
        if j < 0:
            raise ValueError("harmonic index must be non-negative")
        if kind == "sin" and j == 0:
            raise ValueError("there is no sin(0v) coefficient")
        if kind == "const" or (kind == "cos" and j == 0):
            if j != 0:
                raise ValueError("const coefficient only exists at j = 0")
            return self.a0
        if kind not in ("cos", "sin"):
            raise ValueError(f"unknown coefficient kind {kind!r}")
        if j > self.degree:
            return Polynomial(self.alphabet)
        return (self.cos if kind == "cos" else self.sin)[j - 1]

    def _wrap(self, other):
        if isinstance(other, FourierSeries):
            return other
        if isinstance(other, Polynomial):
            return FourierSeries(other)
        return FourierSeries(Polynomial.constant(self.alphabet, other))

    def __add__(self, other):
        other = self._wrap(other)
        n = max(self.degree, other.degree)
        cos = [self.coeff(j, "cos") + other.coeff(j, "cos") for j in range(1, n + 1)]
        sin = [self.coeff(j, "sin") + other.coeff(j, "sin") for j in range(1, n + 1)]
        return FourierSeries(self.a0 + other.a0, cos, sin)

    __radd__ = __add__

    def __neg__(self):
        return FourierSeries(-self.a0, [-p for p in self.cos], [-p for p in self.sin])

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def map(self, fn) -> "FourierSeries":
        return FourierSeries(fn(self.a0), [fn(p) for p in self.cos], [fn(p) for p in self.sin])

    def __mul__(self, other):
        if not isinstance(other, FourierSeries):
            if isinstance(other, Polynomial) or isinstance(other, (int, Fraction)):
                return self.map(lambda p: p * other)
            return NotImplemented
        alpha = self.alphabet.join(other.alphabet)
        n = self.degree + other.degree
        acc_c: dict[int, Polynomial] = {}
        acc_s: dict[int, Polynomial] = {}

        def add(acc, j, p):
            if p.is_zero():
                return
            acc[j] = acc[j] + p if j in acc else p

        # represent each factor as lists of (j, cos-coeff, sin-coeff), j >= 0
        left = [(0, self.a0, None)] + [
            (j, self.cos[j - 1], self.sin[j - 1]) for j in range(1, self.degree + 1)
        ]
        right = [(0, other.a0, None)] + [
            (k, other.cos[k - 1], other.sin[k - 1]) for k in range(1, other.degree + 1)
        ]
        for j, ca, sa in left:
            for k, cb, sb in right:
                d = abs(j - k)
                sgn = 1 if j >= k else -1
                if not ca.is_zero() and not cb.is_zero():
                    p = ca * cb
                    if j == 0 or k == 0:
                        add(acc_c, j + k, p)
                    else:
                        h = p * HALF
                        add(acc_c, j + k, h)
                        add(acc_c, d, h)
                if sa is not None and sb is not None and not sa.is_zero() and not sb.is_zero():
                    # sin j sin k = (cos(j-k) - cos(j+k)) / 2
                    h = sa * sb * HALF
                    add(acc_c, d, h)
                    add(acc_c, j + k, -h)
                if not ca.is_zero() and sb is not None and not sb.is_zero():
                    # cos j sin k = (sin(j+k) - sin(j-k)) / 2 ; sin(j - k) = -sgn*sin d
                    p = ca * sb
                    if j == 0:
                        add(acc_s, k, p)
                    else:
                        h = p * HALF
                        add(acc_s, j + k, h)
                        if d:
                            add(acc_s, d, h if sgn < 0 else -h)
                if sa is not None and not sa.is_zero() and not cb.is_zero():
                    # sin j cos k = (sin(j+k) + sin(j-k)) / 2
                    p = sa * cb
                    if k == 0:
                        add(acc_s, j, p)
                    else:
                        h = p * HALF
                        add(acc_s, j + k, h)
                        if d:
                            add(acc_s, d, h if sgn > 0 else -h)
        zero = Polynomial(alpha)
        a0 = acc_c.get(0, zero)
        cos = [acc_c.get(j, zero) for j in range(1, n + 1)]
        sin = [acc_s.get(j, zero) for j in range(1, n + 1)]
        return FourierSeries(a0, cos, sin)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = FourierSeries(Polynomial.constant(self.alphabet, 1))
        for _ in range(n):
            result = result * self
        return result

    def derive_u(self) -> "FourierSeries":
        return self.map(lambda p: p.derive())

    def derive_v(self) -> "FourierSeries":
        zero = Polynomial(self.alphabet)
        cos = [self.sin[j - 1] * j for j in range(1, self.degree + 1)]
        sin = [self.cos[j - 1] * (-j) for j in range(1, self.degree + 1)]
        return FourierSeries(zero, cos, sin)

    def derive(self, wrt: str) -> "FourierSeries":
        if wrt == "u":
            return self.derive_u()
        if wrt == "v":
            return self.derive_v()
        raise ValueError(f"can only differentiate in u or v, not {wrt!r}")

    def evaluate(self, values: dict, v: float, **kw) -> float:
        total = self.a0.evaluate(values, **kw)
        for j in range(1, self.degree + 1):
            c, s = self.cos[j - 1], self.sin[j - 1]
            if c:
                total += c.evaluate(values, **kw) * math.cos(j * v)
            if s:
                total += s.evaluate(values, **kw) * math.sin(j * v)
        return total

    def __eq__(self, other):
        if not isinstance(other, FourierSeries):
            other = self._wrap(other)
        return self.a0 == other.a0 and self.cos == other.cos and self.sin == other.sin

    def __hash__(self):
        return hash((self.a0, self.cos, self.sin))

    def to_text(self) -> str:
        lines = [f"A0 = {self.a0.to_text()}"]
        for j in range(1, self.degree + 1):
            lines.append(f"A{j} = {self.cos[j - 1].to_text()}")
            lines.append(f"B{j} = {self.sin[j - 1].to_text()}")
        return "\n".join(lines)

    def __repr__(self):
        return f"FourierSeries(degree={self.degree})"


def fourier_mul(F: FourierSeries, G: FourierSeries) -> FourierSeries:
    return F * G


def fourier_derive(F: FourierSeries, wrt: str) -> FourierSeries:
    return F.derive(wrt)


def fourier_coeff(F: FourierSeries, j: int, kind: str) -> Polynomial:
    return F.coeff(j, kind)
