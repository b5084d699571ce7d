"""Parse formula text into polynomials or rational expressions.

The grammar is ordinary arithmetic: ``+ - * /``, ``^`` (or ``**``) with
non-negative integer exponents, integer literals, parentheses, and symbol
names from an alphabet.  Primes are part of names (``r''``).  Division by a
non-constant yields a :class:`RationalExpr`.
"""

from __future__ import annotations

import ast
import re
from fractions import Fraction

from .polynomial import Polynomial
from .rational import RationalExpr

_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*'*")


class FormulaSyntaxError(ValueError):
    pass


def _mangle(text: str) -> tuple[str, dict[str, str]]:
    # every name becomes a placeholder: primes and keywords ("lambda") parse
    names: dict[str, str] = {}
    seen: dict[str, str] = {}

    def repl(m):
        name = m.group(0)
        if name not in seen:
            seen[name] = f"_v{len(seen)}"
            names[seen[name]] = name
        return seen[name]

    out = _NAME.sub(repl, text).replace("^", "**")
    return out, names


def parse(text: str, alphabet):
    """``parse("1/16*beta*gamma*kappa^2*r^8", A)`` -> Polynomial."""
    src, mangled = _mangle(text)
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise FormulaSyntaxError(f"cannot parse {text!r}: {exc.msg}") from None

    def build(node):
        if isinstance(node, ast.Expression):
            return build(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return Polynomial.constant(alphabet, node.value)
        if isinstance(node, ast.Name):
            return Polynomial.symbol(alphabet, mangled.get(node.id, node.id))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            val = build(node.operand)
            return -val if isinstance(node.op, ast.USub) else val
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                exp = node.right
                if not (isinstance(exp, ast.Constant) and isinstance(exp.value, int)):
                    raise FormulaSyntaxError("exponents must be integer literals")
                return build(node.left) ** exp.value
            left, right = build(node.left), build(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            if isinstance(node.op, ast.Div):
                if isinstance(right, Polynomial) and right.is_constant():
                    return left * (Fraction(1) / Fraction(right.constant_value()))
                return RationalExpr.lift(left) / RationalExpr.lift(right)
        raise FormulaSyntaxError(f"unsupported syntax in {text!r}: {ast.dump(node)[:60]}")

    result = build(tree)
    if isinstance(result, RationalExpr) and result.is_polynomial():
        return result.to_polynomial()
    return result
