"""Quotients of polynomials, radical adjunction, and radical-aware d/du.

The symbolic layer stays polynomial wherever it can.  Quotients only appear
when a case substitution binds a symbol to something like ``-r r'/s`` with
``s = sqrt(b^2 - r^2)``; a :class:`RationalExpr` then carries numerator and
denominator separately and vanishes exactly when its numerator does.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .alphabet import SymbolAlphabet
from .polynomial import Polynomial, RadicalDerivativeError, pack, unpack


class RationalExpr:
    """``num / den`` with polynomial parts.

    Construction cancels the common monomial factor and scales the
    denominator's leading coefficient to 1.  No polynomial gcd is attempted,
    so two equal quotients may have different representations; compare them
    with ``==`` (cross-multiplication), not by their parts.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial | None = None):
        if den is None:
            den = Polynomial.constant(num.alphabet, 1)
        alpha = num.alphabet.join(den.alphabet)
        if den.is_zero():
            raise ZeroDivisionError("rational expression with zero denominator")
        if num.is_zero():
            self.num = Polynomial(alpha)
            self.den = Polynomial.constant(alpha, 1)
            return
        if not den.is_constant():
            n = len(alpha)
            ga = unpack(num.monomial_content(), n)
            gb = unpack(den.monomial_content(), n)
            common = pack(tuple(map(min, ga, gb)))
            if common:
                num = num.divide_monomial(common)
                den = den.divide_monomial(common)
        lead = den.leading_coefficient()
        if lead != 1:
            inv = Fraction(1) / Fraction(lead)
            num = num * inv
            den = den * inv
        self.num = num
        self.den = den

    @property
    def alphabet(self) -> SymbolAlphabet:
        return self.num.alphabet.join(self.den.alphabet)

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def to_polynomial(self) -> Polynomial:
        if not self.is_polynomial():
            raise ValueError("expression has a non-constant denominator")
        return self.num * (Fraction(1) / Fraction(self.den.constant_value()))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def simplify(self):
        """Polynomial when the denominator divides the numerator exactly."""
        if self.is_polynomial():
            return self.to_polynomial()
        q = self.num.divide_exact(self.den)
        return self if q is None else q

    @staticmethod
    def lift(x, alphabet=None) -> "RationalExpr":
        if isinstance(x, RationalExpr):
            return x
        if isinstance(x, Polynomial):
            return RationalExpr(x)
        if alphabet is None:
            raise TypeError("need an alphabet to lift a scalar")
        return RationalExpr(Polynomial.constant(alphabet, x))

    def _other(self, other):
        if isinstance(other, (RationalExpr, Polynomial)):
            return RationalExpr.lift(other)
        if isinstance(other, (int, Fraction)):
            return RationalExpr.lift(other, self.alphabet)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RationalExpr(self.num + o.num, self.den)
        return RationalExpr(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalExpr(-self.num, self.den)

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return RationalExpr(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero expression")
        return RationalExpr(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if n < 0:
            return RationalExpr(self.den ** (-n), self.num ** (-n))
        return RationalExpr(self.num ** n, self.den ** n)

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return (self.num * o.den - o.num * self.den).is_zero()

    __hash__ = None

    def derive(self) -> "RationalExpr":
        dn = derive(self.num)
        dd = derive(self.den)
        if isinstance(dd, Polynomial) and dd.is_zero():
            return RationalExpr.lift(dn) / self.den
        return (RationalExpr.lift(dn) * self.den - RationalExpr.lift(dd) * self.num) / (
            self.den * self.den
        )

    def evaluate(self, values, **kw):
        return self.num.evaluate(values, **kw) / self.den.evaluate(values, **kw)

    def to_text(self) -> str:
        if self.den == 1:
            return self.num.to_text()
        return f"({self.num.to_text()})/({self.den.to_text()})"

    __str__ = to_text

    def __repr__(self):
        return f"RationalExpr({self.to_text()!r})"


@dataclass(frozen=True)
class RadicalSymbol:
    """Handle for an adjoined square root ``name = sign*sqrt(radicand)``."""

    name: str
    radicand: Polynomial
    sign: int
    alphabet: SymbolAlphabet

    @property
    def poly(self) -> Polynomial:
        return Polynomial.symbol(self.alphabet, self.name)

    @property
    def differentiable(self) -> bool:
        return self.alphabet.symbol(self.name).differentiable

    def derivative(self) -> RationalExpr:
        """The declared quotient form ``radicand' * s / (2 radicand)``."""
        if not self.differentiable:
            raise RadicalDerivativeError(
                f"radical {self.name!r} was adjoined without a derivative form"
            )
        dq = RationalExpr.lift(derive(self.radicand))
        return dq * self.poly / (self.radicand.scale(2))

    def value(self, values):
        q = self.radicand.evaluate(values)
        return self.sign * q ** 0.5


def adjoin_radical(name: str, radicand: Polynomial, sign: int = 1, *,
                   differentiable: bool = False) -> RadicalSymbol:
    """Extend ``radicand.alphabet`` by ``name`` with the rule ``name^2 -> radicand``.

    The radicand may itself mention radicals adjoined earlier.  Passing
    ``differentiable=True`` materialises ``d(name)/du`` in quotient form; by
    default differentiating the radical raises.
    """
    alpha = radicand.alphabet.with_radical(name, radicand, sign, differentiable)
    return RadicalSymbol(name, radicand, sign, alpha)


def radical_names(alphabet: SymbolAlphabet) -> list[str]:
    return [alphabet.symbols[i].name for i in alphabet.radical_indices()]


def derive(expr):
    """Radical-aware d/du.

    Polynomials without differentiable radicals come back as polynomials;
    otherwise the result is a :class:`RationalExpr`.
    """
    if isinstance(expr, RationalExpr):
        return expr.derive()
    if not isinstance(expr, Polynomial):
        raise TypeError(f"cannot differentiate {type(expr).__name__}")
    alpha = expr.alphabet
    used = expr.used_symbols()
    rads = [alpha.symbols[i] for i in alpha.radical_indices() if alpha.symbols[i].name in used]
    if not rads:
        return expr.derive()
    for sym in rads:
        if not sym.differentiable:
            raise RadicalDerivativeError(
                f"radical {sym.name!r} has no declared derivative form"
            )
    base = RationalExpr(expr.derive(radicals_constant=True))
    for sym in rads:
        handle = RadicalSymbol(sym.name, sym.radicand, sym.sign, alpha)
        base = base + RationalExpr(expr.partial(sym.name)) * handle.derivative()
    return base


