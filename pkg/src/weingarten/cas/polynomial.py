"""Exact multivariate polynomials with rational coefficients.

Monomials are packed into a single ``int``: symbol ``i`` of the alphabet owns
bits ``[SLOT_BITS*i, SLOT_BITS*(i+1))``.  Multiplying monomials is then integer
addition, and alphabets extended by adjoined radicals keep every existing key
valid.  Coefficients are :class:`fractions.Fraction` (or plain ``int``), never
floats.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from numbers import Rational
from operator import or_

from .alphabet import (
    COORDINATE,
    FUNCTION,
    MAX_EXPONENT,
    PARAM,
    RADICAL,
    SLOT_BITS,
    SLOT_MASK,
    AlphabetError,
    DerivativeDepthError,
    SymbolAlphabet,
)


class RadicalDerivativeError(ArithmeticError):
    """Differentiating an adjoined radical without a declared quotient form."""


def _guard_mask(n: int) -> int:
    bit = 1 << (SLOT_BITS - 1)
    return sum(bit << (SLOT_BITS * i) for i in range(n))


_GUARDS: dict[int, int] = {}


def guard_mask(n: int) -> int:
    m = _GUARDS.get(n)
    if m is None:
        m = _GUARDS[n] = _guard_mask(n)
    return m


def unpack(key: int, n: int) -> tuple[int, ...]:
    return tuple((key >> (SLOT_BITS * i)) & SLOT_MASK for i in range(n))


def pack(exps) -> int:
    key = 0
    for i, e in enumerate(exps):
        if e < 0 or e > MAX_EXPONENT:
            raise OverflowError(f"exponent {e} out of range")
        key |= e << (SLOT_BITS * i)
    return key


def exponent(key: int, i: int) -> int:
    return (key >> (SLOT_BITS * i)) & SLOT_MASK


def _coerce_coeff(c):
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return Fraction(c.numerator, c.denominator)
    raise TypeError(f"polynomial coefficients must be exact rationals, got {type(c).__name__}")


class Polynomial:
    """Immutable sparse polynomial over a :class:`SymbolAlphabet`.

    Products are reduced by the rewrite rules ``s^2 -> radicand`` of every
    radical in the alphabet, so radical exponents are always 0 or 1.
    """

    __slots__ = ("alphabet", "terms", "_hash")

    def __init__(self, alphabet: SymbolAlphabet, terms=None, *, _trusted=False):
        self.alphabet = alphabet
        if terms is None:
            terms = {}
        elif not _trusted:
            terms = {k: _coerce_coeff(c) for k, c in terms.items() if c != 0}
        self.terms: dict[int, int | Fraction] = terms
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, alphabet, value) -> "Polynomial":
        value = _coerce_coeff(value)
        return cls(alphabet, {0: value} if value else {}, _trusted=True)

    @classmethod
    def symbol(cls, alphabet, name: str) -> "Polynomial":
        i = alphabet.resolve(name)
        return cls(alphabet, {1 << (SLOT_BITS * i): 1}, _trusted=True)

    @classmethod
    def monomial(cls, alphabet, exps: dict, coeff=1) -> "Polynomial":
        vec = [0] * len(alphabet)
        for name, e in exps.items():
            vec[alphabet.resolve(name)] += e
        return cls(alphabet, {pack(vec): coeff})._reduced()

    # -- basic protocol -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get(0, 0)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            self.alphabet.join(other.alphabet)
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def _lift(self, other):
        if isinstance(other, Polynomial):
            return self.alphabet.join(other.alphabet), other.terms
        if isinstance(other, (int, Fraction)) or isinstance(other, Rational):
            c = _coerce_coeff(other)
            return self.alphabet, ({0: c} if c else {})
        return None, None

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        alpha, oterms = self._lift(other)
        if alpha is None:
            return NotImplemented
        res = dict(self.terms)
        for k, c in oterms.items():
            s = res.get(k, 0) + c
            if s:
                res[k] = s
            else:
                res.pop(k, None)
        return Polynomial(alpha, res, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.alphabet, {k: -c for k, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        alpha, oterms = self._lift(other)
        if alpha is None:
            return NotImplemented
        res = dict(self.terms)
        for k, c in oterms.items():
            s = res.get(k, 0) - c
            if s:
                res[k] = s
            else:
                res.pop(k, None)
        return Polynomial(alpha, res, _trusted=True)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        alpha, oterms = self._lift(other)
        if alpha is None:
            return NotImplemented
        a, b = self.terms, oterms
        if not a or not b:
            return Polynomial(alpha, {}, _trusted=True)
        if len(b) == 1 and 0 in b:
            c = b[0]
            return Polynomial(alpha, {k: v * c for k, v in a.items()}, _trusted=True)
        if len(a) == 1 and 0 in a:
            c = a[0]
            return Polynomial(alpha, {k: v * c for k, v in b.items()}, _trusted=True)
        if len(a) < len(b):
            a, b = b, a
        res: dict = {}
        get = res.get
        for k2, c2 in b.items():
            for k1, c1 in a.items():
                k = k1 + k2
                res[k] = get(k, 0) + c1 * c2
        res = {k: c for k, c in res.items() if c}
        if res and reduce(or_, res) & guard_mask(len(alpha)):
            raise OverflowError("monomial exponent exceeds packed slot width")
        return Polynomial(alpha, res, _trusted=True)._reduced()

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        result = Polynomial.constant(self.alphabet, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        # exact division by a rational scalar only; see RationalExpr for the rest
        if isinstance(other, (int, Fraction)) or isinstance(other, Rational):
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero")
            inv = Fraction(1) / _coerce_coeff(other)
            return self * inv
        return NotImplemented

    def scale(self, c) -> "Polynomial":
        return self * _coerce_coeff(c)

    # -- radical reduction --------------------------------------------------

    def _reduced(self) -> "Polynomial":
        rads = self.alphabet.radical_indices()
        if not rads or not self.terms:
            return self
        poly = self
        for i in reversed(rads):
            poly = poly._reduce_radical(i)
        return poly

    def _reduce_radical(self, i: int) -> "Polynomial":
        shift = SLOT_BITS * i
        if not any((k >> shift) & SLOT_MASK >= 2 for k in self.terms):
            return self
        radicand = self.alphabet.symbols[i].radicand
        keep: dict = {}
        by_power: dict[int, dict] = {}
        for k, c in self.terms.items():
            e = (k >> shift) & SLOT_MASK
            if e < 2:
                s = keep.get(k, 0) + c
                keep[k] = s
                continue
            half, rest = divmod(e, 2)
            base = k - ((e - rest) << shift)
            bucket = by_power.setdefault(half, {})
            bucket[base] = bucket.get(base, 0) + c
        result = Polynomial(self.alphabet, {k: c for k, c in keep.items() if c}, _trusted=True)
        power = Polynomial.constant(self.alphabet, 1)
        done = 0
        for half in sorted(by_power):
            while done < half:
                power = power * radicand
                done += 1
            part = Polynomial(self.alphabet, by_power[half], _trusted=True)
            result = result + part * power
        # radicand mentions only lower radicals, so slot i is now reduced
        return result

    # -- calculus -----------------------------------------------------------

    def derive(self, *, radicals_constant=False) -> "Polynomial":
        """d/du with the alphabet's derivative rules (Leibniz, linear).

        Radicals raise unless ``radicals_constant`` is set, in which case their
        contribution is dropped (the caller adds it back as a quotient).
        """
        alpha = self.alphabet
        res: dict = {}
        for k, c in self.terms.items():
            for i, sym in enumerate(alpha.symbols):
                e = (k >> (SLOT_BITS * i)) & SLOT_MASK
                if not e:
                    continue
                if sym.kind == PARAM:
                    continue
                if sym.kind == RADICAL:
                    if radicals_constant:
                        continue
                    raise RadicalDerivativeError(
                        f"radical {sym.name!r} has no polynomial derivative"
                    )
                base = k - (1 << (SLOT_BITS * i))
                if sym.kind == COORDINATE:
                    nk = base
                else:
                    if sym.derivative is None:
                        raise DerivativeDepthError(
                            f"derivative of {sym.name!r} exceeds the declared depth"
                        )
                    nk = base + (1 << (SLOT_BITS * sym.derivative))
                res[nk] = res.get(nk, 0) + c * e
        res = {k: v for k, v in res.items() if v}
        if res and reduce(or_, res) & guard_mask(len(alpha)):
            raise OverflowError("monomial exponent exceeds packed slot width")
        return Polynomial(alpha, res, _trusted=True)._reduced()

    def partial(self, name: str) -> "Polynomial":
        i = self.alphabet.resolve(name)
        shift = SLOT_BITS * i
        res: dict = {}
        for k, c in self.terms.items():
            e = (k >> shift) & SLOT_MASK
            if e:
                nk = k - (1 << shift)
                res[nk] = res.get(nk, 0) + c * e
        return Polynomial(self.alphabet, res, _trusted=True)

    # -- structure ----------------------------------------------------------

    def degree_in(self, name: str) -> int:
        i = self.alphabet.resolve(name)
        shift = SLOT_BITS * i
        return max(((k >> shift) & SLOT_MASK for k in self.terms), default=0)

    def coefficients_in(self, name: str) -> dict[int, "Polynomial"]:
        """Split into ``{k: coefficient of name**k}``."""
        i = self.alphabet.resolve(name)
        shift = SLOT_BITS * i
        parts: dict[int, dict] = {}
        for k, c in self.terms.items():
            e = (k >> shift) & SLOT_MASK
            parts.setdefault(e, {})[k - (e << shift)] = c
        return {e: Polynomial(self.alphabet, t, _trusted=True) for e, t in parts.items()}

    def coefficient_in(self, name: str, power: int) -> "Polynomial":
        return self.coefficients_in(name).get(power, Polynomial(self.alphabet))

    def used_symbols(self) -> set[str]:
        acc = reduce(or_, self.terms, 0)
        return {s.name for i, s in enumerate(self.alphabet.symbols)
                if (acc >> (SLOT_BITS * i)) & SLOT_MASK}

    def total_degree(self) -> int:
        n = len(self.alphabet)
        return max((sum(unpack(k, n)) for k in self.terms), default=0)

    def monomial_content(self) -> int:
        """Packed key of the gcd of all monomials (0 if none in common)."""
        if not self.terms:
            return 0
        n = len(self.alphabet)
        mins = None
        for k in self.terms:
            e = unpack(k, n)
            mins = e if mins is None else tuple(map(min, mins, e))
        return pack(mins)

    def divide_monomial(self, key: int) -> "Polynomial":
        n = len(self.alphabet)
        div = unpack(key, n)
        out = {}
        for k, c in self.terms.items():
            e = unpack(k, n)
            if any(x < y for x, y in zip(e, div)):
                raise ArithmeticError("monomial does not divide every term")
            out[k - key] = c
        return Polynomial(self.alphabet, out, _trusted=True)

    def divide_exact(self, divisor: "Polynomial") -> "Polynomial | None":
        """Quotient ``self / divisor`` if it divides exactly, else ``None``.

        Radicals are treated as free variables, so a quotient that only exists
        modulo a rewrite rule is not found.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        alpha = self.alphabet.join(divisor.alphabet)
        n = len(alpha)
        order = self.sort_keys() if len(self.alphabet) == n else divisor.sort_keys()
        dkeys = sorted(divisor.terms, key=order)
        lead_k = dkeys[0]
        lead_c = Fraction(divisor.terms[lead_k])
        lead_e = unpack(lead_k, n)
        rem = dict(self.terms)
        quot: dict = {}
        while rem:
            k = min(rem, key=order)
            e = unpack(k, n)
            if any(x < y for x, y in zip(e, lead_e)):
                return None
            qk = k - lead_k
            qc = Fraction(rem[k]) / lead_c
            quot[qk] = qc
            for dk, dc in divisor.terms.items():
                nk = qk + dk
                v = rem.get(nk, 0) - qc * dc
                if v:
                    rem[nk] = v
                else:
                    rem.pop(nk, None)
        return Polynomial(alpha, {k: _coerce_coeff(c) for k, c in quot.items()}, _trusted=True)

    def numeric_content(self) -> Fraction:
        """Positive rational c with self/c having coprime integer coefficients."""
        if not self.terms:
            return Fraction(1)
        nums = [Fraction(c) for c in self.terms.values()]
        g = 0
        l = 1
        for q in nums:
            g = math.gcd(g, q.numerator)
            l = l * q.denominator // math.gcd(l, q.denominator)
        return Fraction(g, l)

    def leading_coefficient(self):
        if not self.terms:
            return 0
        return self.terms[self.sorted_keys()[0]]

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, values: dict, *, radicals: dict | None = None):
        """Numeric value at ``values`` (name -> number).

        Radicals not given explicitly are evaluated as ``sign*sqrt(radicand)``.
        """
        alpha = self.alphabet
        n = len(alpha)
        vec = [None] * n
        for name, x in values.items():
            if name in alpha:
                vec[alpha.resolve(name)] = x
        for i in alpha.radical_indices():
            sym = alpha.symbols[i]
            if radicals and sym.name in radicals:
                vec[i] = radicals[sym.name]
            elif vec[i] is None:
                q = sym.radicand.evaluate(values, radicals=radicals)
                vec[i] = sym.sign * (q ** 0.5 if q >= 0 else complex(q) ** 0.5)
        acc = reduce(or_, self.terms, 0)
        for i in range(n):
            if vec[i] is None and (acc >> (SLOT_BITS * i)) & SLOT_MASK:
                raise KeyError(f"no value for symbol {alpha.symbols[i].name!r}")
        total = 0.0
        for k, c in self.terms.items():
            term = float(c) if not isinstance(c, int) else c
            i = 0
            while k:
                e = k & SLOT_MASK
                if e:
                    term = term * vec[i] ** e
                k >>= SLOT_BITS
                i += 1
            total += term
        return total

    # -- canonical text -----------------------------------------------------

    def sort_keys(self):
        """Graded lexicographic order over the declared alphabet order."""
        n = len(self.alphabet)

        def key(k):
            e = unpack(k, n)
            return (-sum(e), tuple(-x for x in e))

        return key

    def sorted_keys(self) -> list[int]:
        return sorted(self.terms, key=self.sort_keys())

    def monomial_text(self, k: int) -> str:
        parts = []
        for i, sym in enumerate(self.alphabet.symbols):
            e = (k >> (SLOT_BITS * i)) & SLOT_MASK
            if e == 1:
                parts.append(sym.name)
            elif e:
                parts.append(f"{sym.name}^{e}")
        return "*".join(parts)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for idx, k in enumerate(self.sorted_keys()):
            c = Fraction(self.terms[k])
            mono = self.monomial_text(k)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            if idx == 0:
                out.append(body if sign == "+" else f"-{body}")
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    __str__ = to_text

    def __repr__(self):
        return f"Polynomial({self.to_text()!r})"


def symbols(alphabet: SymbolAlphabet, names: str):
    """``symbols(A, "kappa r r'")`` -> tuple of generator polynomials."""
    return tuple(Polynomial.symbol(alphabet, n) for n in names.split())


def poly_arith(p: Polynomial, q: Polynomial, op: str) -> Polynomial:
    if not isinstance(p, Polynomial) or (op != "neg" and not isinstance(q, Polynomial)):
        raise TypeError("poly_arith expects Polynomial operands")
    if op != "neg":
        p.alphabet.join(q.alphabet)
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "neg":
        return -p
    raise ValueError(f"unknown operation {op!r}")


def poly_derive(p: Polynomial) -> Polynomial:
    return p.derive()


