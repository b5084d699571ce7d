"""Closed symbol alphabets for the polynomial layer.

Every polynomial lives over a :class:`SymbolAlphabet`.  Symbols come in four
kinds:

``param``
    a constant (``a``, ``b``, ``c``, ``lambda``, ...); its u-derivative is 0.
``function``
    a function of ``u``.  Each one carries a chain ``r, r', r'', r'''`` up to a
    declared depth; differentiating the deepest entry is an error.
``coordinate``
    the parameter ``u`` itself, with derivative 1.
``radical``
    an adjoined square root ``s`` with rewrite rule ``s^2 -> radicand``.

Alphabets are immutable.  Adjoining a radical returns a *new* alphabet whose
symbol list extends the old one, so polynomials built over the parent remain
valid over the child without any re-encoding.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .polynomial import Polynomial

#: Bits reserved per symbol in a packed monomial key; the top bit of each
#: slot is a guard used to detect exponent overflow.
SLOT_BITS = 9
SLOT_MASK = (1 << SLOT_BITS) - 1
MAX_EXPONENT = (1 << (SLOT_BITS - 1)) - 1

PARAM = "param"
FUNCTION = "function"
COORDINATE = "coordinate"
RADICAL = "radical"

DEFAULT_DEPTH = 3


class AlphabetError(ValueError):
    """Raised for malformed alphabets or mixing incompatible alphabets."""


class DerivativeDepthError(ArithmeticError):
    """Raised when differentiating past the declared derivative depth."""


@dataclass(frozen=True)
class Symbol:
    name: str
    kind: str
    # index of the derivative symbol for functions; None past the chain end
    derivative: int | None = None
    radicand: "Polynomial | None" = field(default=None, compare=False)
    sign: int = 1
    differentiable: bool = False


def prime_name(base: str, order: int) -> str:
    return base + "'" * order


class SymbolAlphabet:
    """An ordered, closed alphabet of symbols.

    Use :meth:`build` rather than the constructor.  ``aliases`` maps alternate
    spellings onto declared names (torsion is written both ``sigma`` and
    ``tau``).
    """

    def __init__(self, symbols, aliases=None, parent=None):
        self.symbols: tuple[Symbol, ...] = tuple(symbols)
        self.index: dict[str, int] = {}
        for i, s in enumerate(self.symbols):
            if s.name in self.index:
                raise AlphabetError(f"duplicate symbol {s.name!r}")
            self.index[s.name] = i
        self.aliases: dict[str, str] = dict(aliases or {})
        for alias, target in self.aliases.items():
            if target not in self.index:
                raise AlphabetError(f"alias {alias!r} targets unknown {target!r}")
        self.parent = parent
        for s in self.symbols:
            if s.derivative is not None and not 0 <= s.derivative < len(self.symbols):
                raise AlphabetError(f"derivative of {s.name!r} not in alphabet")

    @classmethod
    def build(cls, params=(), functions=(), coordinate=None, depth=DEFAULT_DEPTH,
              aliases=None) -> "SymbolAlphabet":
        """Declare an alphabet.

        ``functions`` is a sequence of base names or ``(name, depth)`` pairs;
        each expands to the chain ``name, name', ...`` in declaration order.
        """
        symbols: list[Symbol] = []
        for p in params:
            symbols.append(Symbol(p, PARAM))
        if coordinate is not None:
            symbols.append(Symbol(coordinate, COORDINATE))
        for entry in functions:
            name, d = (entry, depth) if isinstance(entry, str) else entry
            start = len(symbols)
            for k in range(d + 1):
                deriv = start + k + 1 if k < d else None
                symbols.append(Symbol(prime_name(name, k), FUNCTION, deriv))
        return cls(symbols, aliases)

    def __len__(self):
        return len(self.symbols)

    def __contains__(self, name):
        return name in self.index or name in self.aliases

    def __repr__(self):
        return f"SymbolAlphabet({[s.name for s in self.symbols]})"

    def resolve(self, name: str) -> int:
        name = self.aliases.get(name, name)
        try:
            return self.index[name]
        except KeyError:
            raise AlphabetError(f"unknown symbol {name!r}") from None

    def symbol(self, name: str) -> Symbol:
        return self.symbols[self.resolve(name)]

    def names(self) -> list[str]:
        return [s.name for s in self.symbols]

    def radical_indices(self) -> list[int]:
        return [i for i, s in enumerate(self.symbols) if s.kind == RADICAL]

    def extends(self, other: "SymbolAlphabet") -> bool:
        """True when ``other`` is this alphabet or one of its ancestors."""
        a = self
        while a is not None:
            if a is other:
                return True
            a = a.parent
        return False

    def join(self, other: "SymbolAlphabet") -> "SymbolAlphabet":
        if self.extends(other):
            return self
        if other.extends(self):
            return other
        raise AlphabetError("polynomials live over unrelated alphabets")

    def with_radical(self, name: str, radicand: "Polynomial", sign: int = 1,
                     differentiable: bool = False) -> "SymbolAlphabet":
        if name in self:
            raise AlphabetError(f"symbol name {name!r} already in use")
        if sign not in (1, -1):
            raise ValueError("sign branch must be +1 or -1")
        # stratified: the radicand may only use symbols already present
        if not self.extends(radicand.alphabet):
            raise AlphabetError("radicand must live over the alphabet being extended")
        sym = Symbol(name, RADICAL, None, radicand, sign, differentiable)
        return SymbolAlphabet(self.symbols + (sym,), self.aliases, parent=self)
