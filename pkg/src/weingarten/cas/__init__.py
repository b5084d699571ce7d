"""Exact computer-algebra substrate: polynomials, radicals, Fourier series."""

from .alphabet import (
    AlphabetError,
    DerivativeDepthError,
    Symbol,
    SymbolAlphabet,
)
from .fourier import FourierSeries, fourier_coeff, fourier_derive, fourier_mul
from .parse import FormulaSyntaxError, parse
from .polynomial import (
    Polynomial,
    RadicalDerivativeError,
    poly_arith,
    poly_derive,
    symbols,
)
from .rational import RadicalSymbol, RationalExpr, adjoin_radical, derive
from .subst import (
    CyclicBindingError,
    SquareRule,
    UnresolvedRadicalError,
    poly_substitute,
    substitute,
)

__all__ = [
    "AlphabetError",
    "CyclicBindingError",
    "DerivativeDepthError",
    "FormulaSyntaxError",
    "FourierSeries",
    "Polynomial",
    "RadicalDerivativeError",
    "RadicalSymbol",
    "RationalExpr",
    "SquareRule",
    "Symbol",
    "SymbolAlphabet",
    "UnresolvedRadicalError",
    "adjoin_radical",
    "derive",
    "fourier_coeff",
    "fourier_derive",
    "fourier_mul",
    "parse",
    "poly_arith",
    "poly_derive",
    "poly_substitute",
    "substitute",
    "symbols",
]
