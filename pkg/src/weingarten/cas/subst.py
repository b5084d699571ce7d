"""Symbol substitution with induced derivative bindings.

``substitute(p, {"g'": lam*r**2})`` also binds ``g'' -> 2*lam*r*r'`` (and so
on down the chain) unless the caller binds ``g''`` explicitly.  Bindings are
applied in dependency order; a binding whose value mentions a symbol bound
later is substituted first, so ``{x: y + 1, y: 0}`` means ``x -> 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .alphabet import FUNCTION, DerivativeDepthError
from .polynomial import Polynomial, RadicalDerivativeError
from .rational import RationalExpr, derive, radical_names


class CyclicBindingError(ValueError):
    pass


class UnresolvedRadicalError(ValueError):
    pass


@dataclass(frozen=True)
class SquareRule:
    """Rewrite ``name^2 -> value`` only; odd powers keep one factor of ``name``."""

    value: object


def _symbols_of(value) -> set[str]:
    if isinstance(value, SquareRule):
        return _symbols_of(value.value)
    if isinstance(value, RationalExpr):
        return value.num.used_symbols() | value.den.used_symbols()
    if isinstance(value, Polynomial):
        return value.used_symbols()
    return set()


def _lift_value(value, alphabet):
    if isinstance(value, SquareRule):
        return SquareRule(_lift_value(value.value, alphabet))
    if isinstance(value, RationalExpr):
        return value.to_polynomial() if value.is_polynomial() else value
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return Polynomial.constant(alphabet, value)
    raise TypeError(f"unsupported binding value {type(value).__name__}")


def induced_bindings(bindings: dict, alphabet, used: set[str]) -> tuple[dict, list[str]]:
    """Add ``d(name) -> d(value)`` for every function symbol that is bound.

    Returns the completed bindings and the list of derivative symbols that
    could not be induced (differentiation hit the declared depth).
    """
    out = dict(bindings)
    pending = list(bindings)
    blocked: list[str] = []
    while pending:
        name = pending.pop()
        value = out[name]
        if isinstance(value, SquareRule):
            continue
        sym = alphabet.symbol(name)
        if sym.kind != FUNCTION or sym.derivative is None:
            continue
        dname = alphabet.symbols[sym.derivative].name
        if dname in out:
            continue
        try:
            dvalue = derive(value)
        except (DerivativeDepthError, RadicalDerivativeError):
            blocked.append(dname)
            continue
        if isinstance(dvalue, RationalExpr) and dvalue.is_polynomial():
            dvalue = dvalue.to_polynomial()
        out[dname] = dvalue
        pending.append(dname)
    return out, [b for b in blocked if b in used]


def binding_order(bindings: dict) -> list[str]:
    """Names ordered so that each value only mentions names bound later."""
    deps = {n: _symbols_of(v) & set(bindings) for n, v in bindings.items()}
    order: list[str] = []
    state: dict[str, int] = {}

    def visit(n, stack):
        st = state.get(n)
        if st == 2:
            return
        if st == 1:
            raise CyclicBindingError(" -> ".join(stack + [n]))
        state[n] = 1
        # every name whose value mentions n must be substituted before n
        for m, d in deps.items():
            if n in d:
                visit(m, stack + [n])
        state[n] = 2
        order.append(n)

    for n in sorted(bindings):
        visit(n, [])
    return order


def _subst_poly(p: Polynomial, name: str, value):
    if name not in p.alphabet or name not in p.used_symbols():
        return p
    parts = p.coefficients_in(name)
    if isinstance(value, SquareRule):
        v = value.value
        x = Polynomial.symbol(p.alphabet, name)
        if isinstance(v, RationalExpr):
            d = max(parts) // 2
            num = Polynomial(p.alphabet.join(v.alphabet))
            for k, pk in parts.items():
                h, odd = divmod(k, 2)
                term = pk * v.num ** h * v.den ** (d - h)
                num = num + (term * x if odd else term)
            return RationalExpr(num, v.den ** d)
        out = Polynomial(p.alphabet.join(v.alphabet))
        for k, pk in parts.items():
            h, odd = divmod(k, 2)
            term = pk * v ** h
            out = out + (term * x if odd else term)
        return out
    if isinstance(value, RationalExpr):
        d = max(parts)
        alpha = p.alphabet.join(value.alphabet)
        num = Polynomial(alpha)
        npow = [Polynomial.constant(alpha, 1)]
        dpow = [Polynomial.constant(alpha, 1)]
        for _ in range(d):
            npow.append(npow[-1] * value.num)
            dpow.append(dpow[-1] * value.den)
        for k, pk in parts.items():
            num = num + pk * npow[k] * dpow[d - k]
        return RationalExpr(num, dpow[d])
    out = Polynomial(p.alphabet.join(value.alphabet))
    powers = {0: Polynomial.constant(out.alphabet, 1)}
    for k in sorted(parts):
        if k not in powers:
            powers[k] = value ** k
        out = out + parts[k] * powers[k]
    return out


def _subst_one(expr, name, value):
    if isinstance(expr, RationalExpr):
        num = _subst_poly(expr.num, name, value)
        den = _subst_poly(expr.den, name, value)
        return RationalExpr.lift(num) / RationalExpr.lift(den)
    return _subst_poly(expr, name, value)


def substitute(expr, bindings: dict, *, induce: bool = True, radical_free: bool = False):
    """Apply ``bindings`` (name -> Polynomial | RationalExpr | rational | SquareRule).

    Returns a :class:`Polynomial` when every value is polynomial, otherwise a
    :class:`RationalExpr`.  Radical rewrite rules are applied throughout.
    """
    if not bindings:
        return expr
    alpha = expr.alphabet
    for v in bindings.values():
        if isinstance(v, (Polynomial, RationalExpr)):
            alpha = alpha.join(v.alphabet)
        elif isinstance(v, SquareRule) and isinstance(v.value, (Polynomial, RationalExpr)):
            alpha = alpha.join(v.value.alphabet)
    canon = {}
    for name, v in bindings.items():
        canon[alpha.symbol(name).name] = _lift_value(v, alpha)
    used = _symbols_of(expr)
    if induce:
        canon, blocked = induced_bindings(canon, alpha, used)
        if blocked:
            raise DerivativeDepthError(
                f"cannot induce bindings for {', '.join(sorted(blocked))}"
            )
    for name in binding_order(canon):
        expr = _subst_one(expr, name, canon[name])
    if isinstance(expr, RationalExpr) and expr.is_polynomial():
        expr = expr.to_polynomial()
    if radical_free:
        left = _symbols_of(expr) & set(radical_names(alpha))
        if left:
            raise UnresolvedRadicalError(f"radicals remain: {', '.join(sorted(left))}")
    return expr


def poly_substitute(p, bindings, **kw):
    return substitute(p, bindings, **kw)
