"""Transcriptions of the printed coefficient formulas, with branch preconditions.

Every entry is entered exactly as printed (after mechanical transliteration
to the parser's syntax).  Suspected typos stay in ``transcription``; the
machine-confirmed correction, when one is known, lives in ``erratum``.

Transcriptions and step bindings may contain the sign tokens ``PM`` and
``MP``.  Each branch of an entry fixes ``PM`` to +1 or -1 (``MP`` is its
negative), so "gamma = ±kappa r" is one entry with two branches.  Macros are
written ``{name}`` and expand to a parenthesised formula before parsing.
"""

from __future__ import annotations

import fnmatch
import re
from dataclasses import dataclass, field
from fractions import Fraction

from ..cas import Polynomial, RationalExpr, SquareRule, parse, substitute
from .frames import FRENET, PARALLEL
from .table import RadicalSpec, Step
from .weingarten import WeingartenRelation

EQUAL = "equal"          # machine quantity == transcription
FACTOR = "factor"        # machine == cofactor * transcription (cofactor declared)
DIVIDES = "divides"      # transcription divides the machine numerator
VANISHES = "vanishes"    # machine quantity is identically zero
ZERO_TABLE = "zero-table"  # every A_j, B_j vanishes
DEGREE = "degree"        # degree of the machine quantity in ``variable``

CLAIMS = (EQUAL, FACTOR, DIVIDES, VANISHES, ZERO_TABLE, DEGREE)


class CatalogError(KeyError):
    pass


@dataclass(frozen=True)
class Erratum:
    """Machine-confirmed correction of a printed formula.

    ``transcription`` replaces the printed text, ``quantity`` replaces the
    machine quantity (for a mislabelled coefficient), ``cofactor`` replaces the
    declared factor.  Any of them may be ``None``.
    """

    note: str
    transcription: str | None = None
    quantity: str | None = None
    cofactor: str | None = None


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    location: str
    anchor: str
    kind: str
    relation: WeingartenRelation
    steps: tuple[Step, ...]
    quantity: str
    claim: str
    transcription: str | None = None
    cofactor: str | None = None
    variable: str | None = None
    post_steps: tuple[Step, ...] = ()
    branches: tuple[str, ...] = ("main",)
    macros: tuple[tuple[str, str], ...] = ()
    suspected_defect: bool = False
    erratum: Erratum | None = None
    note: str = ""

    def sign(self, branch: str) -> int:
        if branch not in self.branches:
            raise CatalogError(f"entry {self.id!r} has no branch {branch!r}; "
                               f"choose from {', '.join(self.branches)}")
        return -1 if branch in ("minus", "-") else 1

    def expand(self, text: str | None, branch: str) -> str | None:
        if text is None:
            return None
        for name, body in self.macros:
            text = text.replace("{" + name + "}", f"({body})")
        s = self.sign(branch)
        text = re.sub(r"\bPM\b", f"({s})", text)
        text = re.sub(r"\bMP\b", f"({-s})", text)
        return text

    def _expand_step(self, step: Step, branch: str) -> Step:
        binds = tuple((k, self.expand(v, branch)) for k, v in step.bindings)
        rads = tuple(
            RadicalSpec(r.name, self.expand(r.radicand, branch), r.sign, r.differentiable)
            for r in step.radicals
        )
        return Step(step.label, binds, rads, step.induce)

    def steps_for(self, branch: str) -> tuple[Step, ...]:
        return tuple(self._expand_step(s, branch) for s in self.steps)

    def post_steps_for(self, branch: str) -> tuple[Step, ...]:
        return tuple(self._expand_step(s, branch) for s in self.post_steps)

    def to_dict(self) -> dict:
        out = {
            "id": self.id,
            "location": self.location,
            "anchor": self.anchor,
            "parametrization": self.kind,
            "relation": self.relation.to_dict(),
            "quantity": self.quantity,
            "claim": self.claim,
            "transcription": self.transcription,
            "branches": list(self.branches),
            "suspected_defect": self.suspected_defect,
        }
        if self.cofactor:
            out["cofactor"] = self.cofactor
        if self.erratum:
            out["erratum"] = {k: v for k, v in vars(self.erratum).items() if v is not None}
        if self.note:
            out["note"] = self.note
        return out


# ---------------------------------------------------------------------------
# machine quantities: functions of a (substituted) coefficient table


def _p(table, text):
    return parse(text, table.alphabet)


def _exact(num, den, what):
    if isinstance(num, RationalExpr):
        q = num.num.divide_exact(den)
        if q is None:
            raise ArithmeticError(f"{what}: not divisible")
        return RationalExpr(q, num.den).simplify()
    q = num.divide_exact(den)
    if q is None:
        raise ArithmeticError(f"{what}: not divisible by {den.to_text()}")
    return q


def q_x1(t):
    return _exact(t["A8"], _p(t, "-1/32*r^8"), "x1")


def q_x2(t):
    return _exact(t["B8"], _p(t, "1/16*beta*gamma*r^8"), "x2")


def q_x4(t):
    x1, x2 = q_x1(t), q_x2(t)
    x3 = x1 * 4 + _p(t, "beta^2") * x2
    return x3 * 4 - _p(t, "84*gamma^2+kappa^2*(a^2+2*b-4*r^2)") * x2


def _x4_coeffs(t):
    cs = q_x4(t).coefficients_in("beta")
    zero = Polynomial(t.alphabet)
    return cs.get(4, zero), cs.get(2, zero), cs.get(0, zero)


# x4 = k (eta B^2 - 2 xi B + lambda zeta) with B = beta^2; the scale k = -1 is
# fixed by the printed leading term 1344 gamma^4 of eta.
def q_eta(t):
    return -_x4_coeffs(t)[0]


def q_xi(t):
    return _x4_coeffs(t)[1] * Fraction(1, 2)


def q_zeta(t):
    return _exact(-_x4_coeffs(t)[2], _p(t, "gamma^2-kappa^2*r^2"), "zeta")


def q_x4_root_lambda0(t):
    """Nonzero root in beta^2 of x4 once gamma^2 = kappa^2 r^2 kills its constant term."""
    c4, c2, c0 = _x4_coeffs(t)
    rule = {"gamma": SquareRule(_p(t, "kappa^2*r^2"))}
    c4, c2, c0 = (substitute(c, rule) for c in (c4, c2, c0))
    if not c0.is_zero():
        raise ArithmeticError("x4 has a nonzero constant term on this branch")
    return RationalExpr.lift(c2) / RationalExpr.lift(-c4)


def q_x2_root_identity(t):
    """x2 evaluated at the x4 root (gamma^2 = kappa^2 r^2); must vanish."""
    root = q_x4_root_lambda0(t)
    x2 = substitute(q_x2(t), {"gamma": SquareRule(_p(t, "kappa^2*r^2"))})
    return substitute(x2, {"beta": SquareRule(root)})


def q_x2_norm(t):
    """Norm of eta^3 x2 at beta^2 = (xi + D)/eta, D^2 = xi^2 - eta lambda zeta."""
    c4, c2, c0 = _x4_coeffs(t)
    eta, xi, lz = -c4, c2 * Fraction(1, 2), -c0
    dsq = xi * xi - eta * lz
    coeffs = q_x2(t).coefficients_in("beta")
    one = Polynomial.constant(t.alphabet, 1)
    zero = Polynomial(t.alphabet)
    acc_p, acc_q = zero, zero
    pw_p, pw_q = one, zero
    for k in range(4):
        c = coeffs.get(2 * k, zero) * eta ** (3 - k)
        acc_p, acc_q = acc_p + c * pw_p, acc_q + c * pw_q
        pw_p, pw_q = pw_p * xi + pw_q * dsq, pw_p + pw_q * xi
    return acc_p * acc_p - acc_q * acc_q * dsq


def q_x1_beta0(t):
    lam = _p(t, "gamma^2-kappa^2*r^2")
    return _exact(t["A8"], _p(t, "-1/32*r^8") * lam * lam, "x1")


def q_y1_beta0(t):
    lam = _p(t, "gamma^2-kappa^2*r^2")
    return _exact(t["A7"], _p(t, "-1/16*alpha*kappa*r^9") * lam, "y1")


def q_8x1_y1(t):
    return q_x1_beta0(t) * 8 - q_y1_beta0(t)


def q_A8_over_k2r8(t):
    return _exact(t["A8"], _p(t, "kappa^2*r^8"), "A8")


def q_A8_radical_norm(t):
    """(P0 + P1 A)(P0 - P1 A) for A8/(kappa^2 r^8) = P0 + P1 A."""
    q = q_A8_over_k2r8(t)
    parts = q.coefficients_in("A")
    if set(parts) - {0, 1}:
        raise ArithmeticError("A8 is not linear in A")
    zero = Polynomial(t.alphabet)
    p0, p1 = parts.get(0, zero), parts.get(1, zero)
    radicand = t.alphabet.symbol("A").radicand
    return p0 * p0 - p1 * p1 * radicand


QUANTITIES = {
    "x1": q_x1,
    "x2": q_x2,
    "x4": q_x4,
    "xi": q_xi,
    "eta": q_eta,
    "zeta": q_zeta,
    "x2-norm": q_x2_norm,
    "x4-root": q_x4_root_lambda0,
    "x2-at-x4-root": q_x2_root_identity,
    "x1|beta=0": q_x1_beta0,
    "y1|beta=0": q_y1_beta0,
    "8x1-y1": q_8x1_y1,
    "A8/(kappa^2 r^8)": q_A8_over_k2r8,
    "A8-radical-norm": q_A8_radical_norm,
}


def machine_quantity(name: str, table):
    """Table key, registered derived quantity, or ``=formula`` evaluated on the table's alphabet."""
    if name.startswith("="):
        return parse(name[1:], table.alphabet)
    if name in table.entries:
        return table[name]
    try:
        fn = QUANTITIES[name]
    except KeyError:
        raise CatalogError(f"unknown machine quantity {name!r}") from None
    return fn(table)


# ---------------------------------------------------------------------------
# the catalog

FC0 = WeingartenRelation(1, "b", 0)
FC1 = WeingartenRelation("a", "b", 1)
PC0 = WeingartenRelation("a", "b", 0)
PC = WeingartenRelation("a", "b", "c")

PLUS_MINUS = ("plus", "minus")


def S(label, bindings, radicals=(), induce=True):
    return Step.of(label, bindings, radicals, induce)


# Frenet, c = 0 chain
BETA0 = S("beta=0", {"beta": "0"})
GAMMA_KR = S("gamma=PM*kappa*r", {"gamma": "PM*kappa*r"})
CONST_R = S("alpha=0,r'=0", {"alpha": "0", "r'": "0"})
RAD_S = RadicalSpec("S", "r^2-b^2", 1, True)
GAMMA_KS = S("gamma=PM*kappa*S", {"gamma": "PM*kappa*S"}, (RAD_S,))
FLAT = S("tau=0", {"sigma": "0"})
GAMMA0 = S("gamma=0", {"gamma": "0"})
RAD_T = RadicalSpec("T", "b^2-r^2", 1, True)
BETA_KT = S("beta=kappa*T", {"beta": "kappa*T"}, (RAD_T,))
ALPHA_T = S("alpha=-r*r'/T", {"alpha": "-r*r'/T"})
RAD_A = RadicalSpec("A", "16*gamma^4+4*b^2*gamma^2*kappa^2+b^4*kappa^4-12*gamma^2*kappa^2*r^2")
BETA2_ROOT = S("beta^2=(5gamma^2+b^2kappa^2-3kappa^2r^2 PM A)/3",
               {"beta^2": "1/3*(5*gamma^2+b^2*kappa^2-3*kappa^2*r^2+PM*A)"}, (RAD_A,))
RAD_S0 = RadicalSpec("S", "r^2-b^2", 1)
QUARTIC = S("gamma^2,beta^2 from the quartic",
            {"gamma^2": "kappa^2/4*(r+PM*S)^2",
             "beta^2": "1/12*kappa^2*(-5*b^2+2*r^2+PM*14*r*S)"}, (RAD_S0,))

# Frenet, c = 1 chain
RAD_H = RadicalSpec("s", "a^2+4*b", 1, True)
GAMMA0_ROOT = S("beta^2=(a^2+2b-2r^2 PM a s)kappa^2/2",
                {"beta^2": "1/2*kappa^2*(a^2+2*b-2*r^2+PM*a*s)"}, (RAD_H,))
HOPF0 = S("b=-a^2/4", {"b": "-a^2/4"})
RAD_P = RadicalSpec("P", "a^2-4*r^2", 1, True)
BETA_KP = S("beta=kappa*P/2", {"beta": "kappa*P/2"}, (RAD_P,))
ALPHA_P = S("alpha=-2r r'/P", {"alpha": "-2*r*r'/P"})
RAD_Q = RadicalSpec("Q", "1/2*(a^2+2*b-2*r^2+a*s)", 1, True)
BETA_KQ = S("beta=kappa*Q", {"beta": "kappa*Q"}, (RAD_H, RAD_Q))
ALPHA_Q = S("alpha=(beta/kappa)'", {"alpha": "-2*r*r'*Q/(a^2+2*b-2*r^2+a*s)"})
ALPHA0 = S("alpha=0", {"alpha": "0"})
X1_ROOT = S("gamma^2=(PM a s-(a^2+2b-2r^2))kappa^2/2",
            {"gamma^2": "1/2*kappa^2*(PM*a*s-(a^2+2*b-2*r^2))"}, (RAD_H,))
RAD_G = RadicalSpec("G", "4*r^2-a^2", 1, True)
GAMMA_KG = S("gamma=kappa*G/2", {"gamma": "kappa*G/2"}, (RAD_G,))
R_CONST = S("r'=0", {"r'": "0"})
RAD_GM = RadicalSpec("Gm", "1/2*(a*s-(a^2+2*b-2*r^2))", 1, True)
GAMMA_KGM = S("gamma=kappa*Gm", {"gamma": "kappa*Gm"}, (RAD_H, RAD_GM))
GAMMA2_X1Y1 = S("gamma^2 from 8x1-y1=0",
                {"gamma^2": "kappa^2*((a^2+2*b)*r^2-2*b^2)/(a^2+2*b)"})
LAMBDA0 = S("gamma^2=kappa^2 r^2", {"gamma^2": "kappa^2*r^2"})
R2A = "-a^2*(a^2+4*b)/(8*(a^2+2*b))"
RAD_BC = RadicalSpec("Bc", "1/2*(a^2+2*b)", 1, True)
LAMBDA0_R2A = (
    S("beta=kappa*Bc,gamma=kappa*r", {"beta": "kappa*Bc", "gamma": "kappa*r"}, (RAD_BC,)),
    R_CONST,
    S("r^2=-a^2(a^2+4b)/(8(a^2+2b))", {"r^2": R2A}),
)

# parallel chain
F0 = S("f'=0", {"f'": "0"})
G_LAMBDA = S("g'=lambda*r^2", {"g'": "lambda*r^2"})
R_INV = S("r=alpha/(u+beta)", {"r": "alpha/(u+beta)"})
F2_17 = S("f''=f'(4g'r'-rg'')/(rg')", {"f''": "f'*(4*g'*r'-r*g'')/(r*g')"})
F2_B = S("f''=(2f'^2r'-g'(2g'r'-rg''))/(rf')", {"f''": "(2*f'^2*r'-g'*(2*g'*r'-r*g''))/(r*f')"})
FG_LM = S("f'=mu*r^2,g'=lambda*r^2", {"f'": "mu*r^2", "g'": "lambda*r^2"})

A_F0 = "1+lambda^2*r^4+r'^2-r*r''"
A_FG = "1+(lambda^2+mu^2)*r^4+r'^2-r*r''"

X1_PRINTED = (
    "beta^8 - (28*gamma^2 + kappa^2*(a^2+2*b-4*r^2))*beta^6"
    " + (70*gamma^4 + 15*gamma^2*kappa^2*(a^2+2*b-4*r^2)"
    " + kappa^4*(b^3 - 3*(a^2+2*b)*r^2 + 6*r^4))*beta^4"
    " + (-28*gamma^6 - 15*gamma^4*kappa^2*(a^2+2*b-4*r^2)"
    " + kappa^6*r^2*(2*b^2-3*(a^2+2*b)*r^2+4*r^4)"
    " - 6*gamma^2*kappa^4*(b^2-3*(a^2+2*b)*r^2+6*r^4))*beta^2"
    " + (gamma^2-kappa^2*r^2)^2*(gamma^4+gamma^2*kappa^2*(a^2+2*b-2*r^2)"
    "+kappa^4*(b^2-(a^2+2*b)*r^2+r^4))"
)
X2_PRINTED = (
    "-4*beta^6 + (28*gamma^2+3*kappa^2*(a^2+2*b-4*r^2))*beta^4"
    " - 2*(14*gamma^4+5*gamma^2*kappa^2*(a^2+2*b-4*r^2)"
    "+kappa^4*(b^2-3*(a^2+2*b)*r^2+6*r^4))*beta^2"
    " + (gamma^2-kappa^2*r^2)*(4*gamma^4+gamma^2*kappa^2*(3*a^2+6*b-8*r^2)"
    "+kappa^4*(2*b^2-3*(a^2+2*b)*r^2+4*r^4))"
)
XI_PRINTED = (
    "960*gamma^6+320*gamma^4*kappa^2*(a^2+2*b-4*r^2)"
    "+kappa^6*(b^2*(a^2+2*b)-(3*a^4+12*a^2*b+4*b^2)*r^2)"
    "+5*gamma^2*kappa^4*(a^4+4*a^2*b+12*b^2-32*r^2*(a^2+2*b-2*r^2))"
)
ETA_PRINTED = "1344*gamma^4+(3*a^4+12*a^2*b+4*a^2)*kappa^4+80*gamma^2*kappa^2*(a^2+2*b-4*r^2)"
ETA_FIXED = "1344*gamma^4+(3*a^4+12*a^2*b+4*b^2)*kappa^4+80*gamma^2*kappa^2*(a^2+2*b-4*r^2)"
ZETA_PRINTED = (
    "320*gamma^6+80*gamma^4*kappa^2*(3*a^2+6*b-6*r^2)"
    "+kappa^6*(2*b^2*(a^2+2*b)-(3*a^4+12*a^2*b+4*b^2)*r^2)"
    "+gamma^2*kappa^4*(3*a^4+12*a^2*b+164*b^2-240*(a^2+2*b)*r^2+320*r^4)"
)
MU_PRINTED = "16*gamma^4+a^2*(a^2+4*b)*kappa^4+8*gamma^2*kappa^2*(a^2+2*b-2*r^2)"
RHO_PRINTED = (
    "(16*gamma^4+32*kappa*r*gamma^3+4*kappa^2*(a^2+2*b+4*r^2)*gamma^2"
    "+4*(a^2+2*b)*kappa^3*r*gamma+b^2*kappa^4)"
    "*(16*gamma^4-32*kappa*r*gamma^3+4*kappa^2*(a^2+2*b+4*r^2)*gamma^2"
    "-4*(a^2+2*b)*kappa^3*r*gamma+b^2*kappa^4)"
)
LAM_AUX = "gamma^2-kappa^2*r^2"

EQ8_VERBATIM = (
    "1/32*kappa^2*r^8*(beta^6 - (15*gamma^2 + kappa^2*(b^2-3*r^2))*beta^4"
    " - (15*gamma^4 + 6*gamma^2*kappa^2*(b^2-3*r^2) + kappa^4*r^2*(-2*b^2+3*r^2))*beta^2"
    " + (gamma^2-kappa^2*r^2)*(gamma^2+kappa^2*(b^2-r^2))"
)
EQ8_MACHINE = (
    "1/32*kappa^2*r^8*(beta^6 - (15*gamma^2 + kappa^2*(b^2-3*r^2))*beta^4"
    " + (15*gamma^4 + 6*gamma^2*kappa^2*(b^2-3*r^2) + kappa^4*r^2*(-2*b^2+3*r^2))*beta^2"
    " - (gamma^2-kappa^2*r^2)^2*(gamma^2+kappa^2*(b^2-r^2)))"
)

ENTRIES: list[CatalogEntry] = [
    # ---- Frenet foliation, c = 0, a = 1
    CatalogEntry(
        "frenet-c0-A8", "Frenet foliation, c = 0: leading cosine coefficient",
        "The coefficients A8 and B8 are  A8 = 1/32 κ²r⁸(β⁶ − (15γ² + κ²(b² − 3r²))β⁴ − …",
        FRENET, FC0, (), "A8", EQUAL, EQ8_VERBATIM + ")", suspected_defect=True,
        note="printed text has one unclosed parenthesis; balanced by appending ')' at the end",
        erratum=Erratum("beta^2 bracket enters with +, constant term is "
                        "-(gamma^2-kappa^2 r^2)^2 (gamma^2+kappa^2(b^2-r^2))", EQ8_MACHINE),
    ),
    CatalogEntry(
        "frenet-c0-B8", "Frenet foliation, c = 0: leading sine coefficient",
        "B8 = 1/16 βγκ²r⁸(3β⁴ − 2β²(5γ² + κ²(b² − 3r²)) + (γ² − κ²r²)(3γ² + κ²(2b² − 3r²)))",
        FRENET, FC0, (), "B8", EQUAL,
        "1/16*beta*gamma*kappa^2*r^8*(3*beta^4-2*beta^2*(5*gamma^2+kappa^2*(b^2-3*r^2))"
        "+(gamma^2-kappa^2*r^2)*(3*gamma^2+kappa^2*(2*b^2-3*r^2)))",
    ),
    CatalogEntry(
        "frenet-c0-beta0-A8", "Frenet, c = 0, case beta = 0",
        "Case β = 0 in some sub-interval of I. Then A8 = −1/32 κ²r⁸(γ² − κ²r²)²(γ² + κ²(b² − r²))",
        FRENET, FC0, (BETA0,), "A8", EQUAL,
        "-1/32*kappa^2*r^8*(gamma^2-kappa^2*r^2)^2*(gamma^2+kappa^2*(b^2-r^2))",
    ),
    CatalogEntry(
        "frenet-c0-beta0-gkr-A6", "Frenet, c = 0, beta = 0, gamma = ±kappa r",
        "If γ² = κ²r², then A6 = −9/8 b²κ⁶r¹⁰(α² − r′²)",
        FRENET, FC0, (BETA0, GAMMA_KR), "A6", EQUAL,
        "-9/8*b^2*kappa^6*r^10*(alpha^2-r'^2)", branches=PLUS_MINUS,
    ),
    CatalogEntry(
        "frenet-c0-beta0-gkr-B6", "Frenet, c = 0, beta = 0, gamma = ±kappa r",
        "B6 = ±9/4 b²ακ⁶r¹⁰r′",
        FRENET, FC0, (BETA0, GAMMA_KR), "B6", EQUAL,
        "PM*9/4*b^2*alpha*kappa^6*r^10*r'", branches=PLUS_MINUS,
    ),
    CatalogEntry(
        "frenet-c0-beta0-gkr-const-A4", "Frenet, c = 0, beta = 0, gamma = ±kappa r, alpha = 0, r constant",
        "But then A4 = −2r¹²b²κ⁸",
        FRENET, FC0, (BETA0, GAMMA_KR, CONST_R), "A4", EQUAL,
        "-2*r^12*b^2*kappa^8", branches=PLUS_MINUS,
    ),
    CatalogEntry(
        "frenet-c0-beta0-gks-A8", "Frenet, c = 0, beta = 0, gamma = ±kappa sqrt(r^2-b^2)",
        "from A8 = 0, we have that γ = ±κ√(r² − b²)",
        FRENET, FC0, (BETA0, GAMMA_KS), "A8", VANISHES, branches=PLUS_MINUS,
    ),
    CatalogEntry(
        "frenet-c0-beta0-gks-A7", "Frenet, c = 0, beta = 0, gamma = ±kappa sqrt(r^2-b^2)",
        "A7 = −1/16 b⁴ακ⁷r⁹",
        FRENET, FC0, (BETA0, GAMMA_KS), "A7", EQUAL,
        "-1/16*b^4*alpha*kappa^7*r^9", branches=PLUS_MINUS,
    ),
    CatalogEntry(
        "frenet-c0-beta0-gks-B7", "Frenet, c = 0, beta = 0, gamma = ±kappa sqrt(r^2-b^2)",
        "B7 = ±b⁴κ⁷r¹⁰r′/(16√(r² − b²))",
        FRENET, FC0, (BETA0, GAMMA_KS), "B7", EQUAL,
        "PM*b^4*kappa^7*r^10*r'/(16*S)", branches=PLUS_MINUS,
    ),
    CatalogEntry(
        "frenet-c0-beta0-gks-const-A5", "Frenet, c = 0, beta = 0, gamma = ±kappa S, alpha = 0, r constant",
        "Then A5 = ±r⁹κ⁷b⁴τ√(r² − b²)/4",
        FRENET, FC0, (BETA0, GAMMA_KS, CONST_R), "A5", EQUAL,
        "PM*r^9*kappa^7*b^4*tau*S/4", branches=PLUS_MINUS, suspected_defect=True,
        note="the printed ± is read as the sign of the gamma branch",
        erratum=Erratum("sign is opposite to the gamma branch (∓)", "MP*r^9*kappa^7*b^4*tau*S/4"),
    ),
    CatalogEntry(
        "frenet-c0-beta0-gks-const-flat-A4",
        "Frenet, c = 0, beta = 0, gamma = ±kappa S, alpha = 0, r constant, tau = 0",
        "If τ = 0, A4 = r⁸b²(r² − b²)(5r² + 3b²)κ⁸/8",
        FRENET, FC0, (BETA0, GAMMA_KS, CONST_R, FLAT), "A4", EQUAL,
        "r^8*b^2*(r^2-b^2)*(5*r^2+3*b^2)*kappa^8/8", branches=PLUS_MINUS,
    ),
    CatalogEntry(
        "frenet-c0-gamma0-A8", "Frenet, c = 0, case gamma = 0",
        "Case γ = 0 in some sub-interval of I. The coefficient A8 is 1/32 κ²r⁸(β² + κ²r²)²(β² + κ²(r² − b²))",
        FRENET, FC0, (GAMMA0,), "A8", EQUAL,
        "1/32*kappa^2*r^8*(beta^2+kappa^2*r^2)^2*(beta^2+kappa^2*(r^2-b^2))",
    ),
    CatalogEntry(
        "frenet-c0-gamma0-bkt-A8", "Frenet, c = 0, gamma = 0, beta = kappa sqrt(b^2-r^2)",
        "Then β² = κ²(b² − r²). Without loss of generality, we assume that β = κ√(b² − r²)",
        FRENET, FC0, (GAMMA0, BETA_KT), "A8", VANISHES,
    ),
    CatalogEntry(
        "frenet-c0-gamma0-bkt-A7", "Frenet, c = 0, gamma = 0, beta = kappa sqrt(b^2-r^2)",
        "A7 = −1/16 b⁴κ⁷r⁹(α + rr′/√(b² − r²))",
        FRENET, FC0, (GAMMA0, BETA_KT), "A7", EQUAL,
        "-1/16*b^4*kappa^7*r^9*(alpha+r*r'/T)",
    ),
    CatalogEntry(
        "frenet-c0-gamma0-sphere", "Frenet, c = 0, gamma = 0: sphere of radius |b|",
        "Then α = −rr′/√(b² − r²) … S is again a piece of a sphere of radius |b|",
        FRENET, FC0, (GAMMA0, BETA_KT, ALPHA_T), "table", ZERO_TABLE,
    ),
    CatalogEntry(
        "frenet-c0-generic-B8", "Frenet, c = 0, beta gamma != 0: beta^2 root of B8",
        "From B8 = 0 in (9), we can calculate β²: β² = 1/3(5γ² + b²κ² − 3κ²r² ± A)",
        FRENET, FC0, (BETA2_ROOT,), "B8", VANISHES, branches=PLUS_MINUS,
    ),
    CatalogEntry(
        "frenet-c0-generic-A8-identity", "Frenet, c = 0, beta gamma != 0: A8 at the beta^2 root",
        "416γ⁶ + b⁶κ⁶ + 96γ⁴κ²(b² − 3r²) + 18γ²κ⁴b⁴ = −(b⁴γ⁴ + 112γ⁴ + 16γ²κ²(b² − 3r²))A",
        FRENET, FC0, (BETA2_ROOT,), "A8/(kappa^2 r^8)", FACTOR,
        "416*gamma^6+b^6*kappa^6+96*gamma^4*kappa^2*(b^2-3*r^2)+18*gamma^2*kappa^4*b^4"
        "+PM*(b^4*gamma^4+112*gamma^4+16*gamma^2*kappa^2*(b^2-3*r^2))*A",
        cofactor="-1/432", branches=PLUS_MINUS, suspected_defect=True,
        note="identity L = -R A restated as L + R A = 0; left/right sides carry the beta^2 sign",
        erratum=Erratum("first term of the right-hand factor is b^4 kappa^4, not b^4 gamma^4",
                        "416*gamma^6+b^6*kappa^6+96*gamma^4*kappa^2*(b^2-3*r^2)+18*gamma^2*kappa^4*b^4"
                        "+PM*(b^4*kappa^4+112*gamma^4+16*gamma^2*kappa^2*(b^2-3*r^2))*A"),
    ),
    CatalogEntry(
        "frenet-c0-generic-resultant", "Frenet, c = 0, beta gamma != 0: squared identity",
        "Squaring both sides … (γ² − κ²r²)((4γ² + b²κ²)² − 16γ²κ²r²) = 0",
        FRENET, FC0, (BETA2_ROOT,), "A8-radical-norm", DIVIDES,
        "(gamma^2-kappa^2*r^2)*((4*gamma^2+b^2*kappa^2)^2-16*gamma^2*kappa^2*r^2)",
        branches=PLUS_MINUS,
    ),
    CatalogEntry(
        "frenet-c0-generic-gkr-A8", "Frenet, c = 0, beta gamma != 0, gamma^2 = kappa^2 r^2",
        "Using (10), β² = 2κ²(b² + 2r²)/3 … A8 = −1/216 κ⁸r⁸(b² + 2r²)(b² + 8r²)²",
        FRENET, FC0, (S("gamma^2=kappa^2 r^2,beta^2=2kappa^2(b^2+2r^2)/3",
                        {"gamma^2": "kappa^2*r^2", "beta^2": "2*kappa^2*(b^2+2*r^2)/3"}),),
        "A8", EQUAL, "-1/216*kappa^8*r^8*(b^2+2*r^2)*(b^2+8*r^2)^2",
    ),
    CatalogEntry(
        "frenet-c0-generic-gkr-beta2", "Frenet, c = 0, beta gamma != 0, gamma^2 = kappa^2 r^2",
        "Using (10), β² = 2κ²(b² + 2r²)/3",
        FRENET, FC0, (S("gamma^2=kappa^2 r^2,beta^2=2kappa^2(b^2+2r^2)/3",
                        {"gamma^2": "kappa^2*r^2", "beta^2": "2*kappa^2*(b^2+2*r^2)/3"}),),
        "B8", VANISHES,
    ),
    CatalogEntry(
        "frenet-c0-generic-quartic-gamma2", "Frenet, c = 0, beta gamma != 0, second factor",
        "γ² = κ²/4(r ± √(r² − b²))²",
        FRENET, FC0, (QUARTIC,),
        "=(4*gamma^2+b^2*kappa^2)^2-16*gamma^2*kappa^2*r^2", VANISHES, branches=PLUS_MINUS,
    ),
    CatalogEntry(
        "frenet-c0-generic-quartic-B8", "Frenet, c = 0, beta gamma != 0, second factor",
        "Then the value of β² in (10) is β² = 1/12 κ²(−5b² + 2r² + 14r√(r² − b²))",
        FRENET, FC0, (QUARTIC,), "B8", VANISHES, branches=PLUS_MINUS,
        note="the printed '+14 r S' is read with the gamma^2 branch sign",
    ),
    CatalogEntry(
        "frenet-c0-generic-quartic-A8", "Frenet, c = 0, beta gamma != 0, second factor",
        "(r² − b²)(b⁴ − 14b²r² + 16r⁴ + (16r³ − 6rb²)√(r² − b²)) = 0",
        FRENET, FC0, (QUARTIC,), "A8", FACTOR,
        "(r^2-b^2)*(b^4-14*b^2*r^2+16*r^4+PM*(16*r^3-6*r*b^2)*S)",
        cofactor="-1/54*kappa^8*r^8", branches=PLUS_MINUS,
    ),
    CatalogEntry(
        "frenet-c0-generic-quartic-rb", "Frenet, c = 0, beta gamma != 0, r^2 = b^2",
        "Thus r² = b². But then β² = −κ²b²/4",
        FRENET, FC0, (QUARTIC,), "=1/12*kappa^2*(-5*b^2+2*r^2+PM*14*r*S)", EQUAL,
        "-kappa^2*b^2/4", branches=PLUS_MINUS,
        post_steps=(S("r^2=b^2", {"S": "0", "r^2": "b^2"}, induce=False),),
    ),
    # ---- Frenet foliation, c = 1
    CatalogEntry(
        "frenet-c1-x1", "Frenet foliation, c = 1: A8 = -1/32 r^8 x1",
        "x1 = β⁸ − (28γ² + κ²(a² + 2b − 4r²))β⁶ + (70γ⁴ + … + κ⁴(b³ − 3(a² + 2b)r² + 6r⁴))β⁴ + …",
        FRENET, FC1, (), "x1", EQUAL, X1_PRINTED, suspected_defect=True,
        erratum=Erratum("b^3 in the beta^4 bracket should read b^2",
                        X1_PRINTED.replace("b^3", "b^2")),
    ),
    CatalogEntry(
        "frenet-c1-x2", "Frenet foliation, c = 1: B8 = 1/16 beta gamma r^8 x2",
        "x2 = −4β⁶ + (28γ² + 3κ²(a² + 2b − 4r²))β⁴ − …",
        FRENET, FC1, (), "x2", EQUAL, X2_PRINTED,
    ),
    CatalogEntry(
        "frenet-c1-gamma0-quartic", "Frenet, c = 1, case gamma = 0",
        "From A8 = 0, β⁴ − κ²(a² + 2b − 2r²)β² + κ⁴(b² − (a² + 2b)r² + r⁴) = 0",
        FRENET, FC1, (GAMMA0,), "A8", FACTOR,
        "beta^4-kappa^2*(a^2+2*b-2*r^2)*beta^2+kappa^4*(b^2-(a^2+2*b)*r^2+r^4)",
        cofactor="-1/32*r^8*(beta^2+kappa^2*r^2)^2",
    ),
    CatalogEntry(
        "frenet-c1-gamma0-root-A8", "Frenet, c = 1, gamma = 0, beta^2 root",
        "β² = 1/2 κ²(a² + 2b − 2r² ± a√(a² + 4b))",
        FRENET, FC1, (GAMMA0, GAMMA0_ROOT), "A8", VANISHES, branches=PLUS_MINUS,
    ),
    CatalogEntry(
        "frenet-c1-gamma0-hopf0-B5", "Frenet, c = 1, gamma = 0, a^2 + 4b = 0",
        "B5 = 1/128 a⁴κ⁵r⁷√(a² − 4r²)(α√(a² − 4r²) + 2rr′)² = 0",
        FRENET, FC1, (GAMMA0, HOPF0, BETA_KP), "B5", EQUAL,
        "1/128*a^4*kappa^5*r^7*P*(alpha*P+2*r*r')^2", suspected_defect=True,
        note="the text then offers 'or tau = 0' as an alternative",
        erratum=Erratum("a factor tau is missing", cofactor=None,
                        transcription="tau*1/128*a^4*kappa^5*r^7*P*(alpha*P+2*r*r')^2"),
    ),
    CatalogEntry(
        "frenet-c1-gamma0-hopf0-flat-B5", "Frenet, c = 1, gamma = 0, a^2 + 4b = 0, tau = 0",
        "In the second case, the computation of the coefficient B5 = 0 implies … or τ = 0",
        FRENET, FC1, (GAMMA0, HOPF0, BETA_KP, FLAT), "B5", VANISHES,
    ),
    CatalogEntry(
        "frenet-c1-gamma0-hopf0-sphere", "Frenet, c = 1, gamma = 0, a^2 + 4b = 0: sphere of radius |a|/2",
        "α = −2rr′/√(a² − 4r²) … the surface is a open of a sphere of radius |a|/2",
        FRENET, FC1, (GAMMA0, HOPF0, BETA_KP, ALPHA_P), "table", ZERO_TABLE,
    ),
    CatalogEntry(
        "frenet-c1-gamma0-root-B7", "Frenet, c = 1, gamma = 0, a^2 + 4b > 0",
        "The coefficient A7 is B7 = 1/64 aABκ⁵r⁹(ακ² − κβ′ + κ′β) = 0",
        FRENET, FC1, (GAMMA0, GAMMA0_ROOT), "B7", EQUAL,
        "1/64*a*{A}*{B}*kappa^5*r^9*(alpha*kappa^2-kappa*beta'+kappa'*beta)",
        macros=(("A", "2*b+a*(a+PM*s)"), ("B", "a^3+4*a*b+(a^2+2*b)*PM*s")),
        branches=PLUS_MINUS, suspected_defect=True,
        note="A and B are printed for the '+' root; the '-' branch flips the sign of s",
        erratum=Erratum("the formula is A7 (as the sentence says); B7 vanishes on this branch",
                        quantity="A7"),
    ),
    CatalogEntry(
        "frenet-c1-gamma0-root-sphere", "Frenet, c = 1, gamma = 0, a^2 + 4b > 0: sphere",
        "α = (β/κ)′ … X(u, v) = c0 + β/κ t + r(cos(v)n + sin(v)b)",
        FRENET, FC1, (GAMMA0, BETA_KQ, ALPHA_Q), "table", ZERO_TABLE,
        note="beta = kappa Q with Q^2 = (a^2+2b-2r^2+a s)/2, the '+' root",
    ),
    CatalogEntry(
        "frenet-c1-gamma0-root-radius", "Frenet, c = 1, gamma = 0, a^2 + 4b > 0: sphere radius",
        "|X(u, v) − c0|² = β²/κ² + r² = 1/2 a² + b + a/2 √(a² + 4b)",
        FRENET, FC1, (GAMMA0, GAMMA0_ROOT), "=beta^2/kappa^2+r^2", EQUAL,
        "1/2*a^2+b+PM*a/2*s", branches=PLUS_MINUS,
    ),
    CatalogEntry(
        "frenet-c1-beta0-x1", "Frenet, c = 1, case beta = 0",
        "A8 = −1/32 r⁸(γ² − κ²r²)²x1, x1 = γ⁴ + κ²γ²(a² + 2b − 2r²) + κ⁴(b² − (a² + 2b)r² + r⁴)",
        FRENET, FC1, (BETA0,), "x1|beta=0", EQUAL,
        "gamma^4+kappa^2*gamma^2*(a^2+2*b-2*r^2)+kappa^4*(b^2-(a^2+2*b)*r^2+r^4)",
    ),
    CatalogEntry(
        "frenet-c1-beta0-y1", "Frenet, c = 1, case beta = 0",
        "A7 = −1/16 ακr⁹(γ² − κ²r²)y1, y1 = 8γ⁴ + (7(a² + 2b) − 16r²)κ²γ² + κ⁴(6b² − 7(a² + 2b)r² + 8r⁴)",
        FRENET, FC1, (BETA0,), "y1|beta=0", EQUAL,
        "8*gamma^4+(7*(a^2+2*b)-16*r^2)*kappa^2*gamma^2+kappa^4*(6*b^2-7*(a^2+2*b)*r^2+8*r^4)",
    ),
    CatalogEntry(
        "frenet-c1-beta0-8x1-y1", "Frenet, c = 1, beta = 0, x1 = y1 = 0",
        "Then 8x1 − y1 = 0 means (a² + 2b)γ² + κ²(2b² − (a² + 2b)r²) = 0",
        FRENET, FC1, (BETA0,), "8x1-y1", FACTOR,
        "(a^2+2*b)*gamma^2+kappa^2*(2*b^2-(a^2+2*b)*r^2)", cofactor="kappa^2",
        note="the printed equation is the machine identity divided by kappa^2",
    ),
    CatalogEntry(
        "frenet-c1-beta0-x1-value", "Frenet, c = 1, beta = 0, x1 = y1 = 0",
        "With this value of γ², x1 = −a²b²(a² + 4b)κ⁴/(a² + 2b)² = 0",
        FRENET, FC1, (BETA0,), "x1|beta=0", EQUAL,
        "-a^2*b^2*(a^2+4*b)*kappa^4/(a^2+2*b)^2", post_steps=(GAMMA2_X1Y1,),
    ),
    CatalogEntry(
        "frenet-c1-beta0-gkr-A6", "Frenet, c = 1, beta = 0, gamma^2 = kappa^2 r^2",
        "Case γ² = κ²r². Then A6 = ±9/8 b²κ⁶r¹⁰(α² − r′²)",
        FRENET, FC1, (BETA0, GAMMA_KR), "A6", EQUAL,
        "PM*9/8*b^2*kappa^6*r^10*(alpha^2-r'^2)", branches=PLUS_MINUS, suspected_defect=True,
        erratum=Erratum("no sign branch: A6 = -9/8 b^2 kappa^6 r^10 (alpha^2 - r'^2) on both",
                        "-9/8*b^2*kappa^6*r^10*(alpha^2-r'^2)"),
    ),
    CatalogEntry(
        "frenet-c1-beta0-gkr-B6", "Frenet, c = 1, beta = 0, gamma^2 = kappa^2 r^2",
        "B6 = ±9/8 b²ακ⁶r¹⁰r′",
        FRENET, FC1, (BETA0, GAMMA_KR), "B6", EQUAL,
        "PM*9/8*b^2*alpha*kappa^6*r^10*r'", branches=PLUS_MINUS, suspected_defect=True,
        erratum=Erratum("prefactor is 9/4, as in the c = 0 chain",
                        "PM*9/4*b^2*alpha*kappa^6*r^10*r'"),
    ),
    CatalogEntry(
        "frenet-c1-beta0-gkr-const-A4", "Frenet, c = 1, beta = 0, gamma^2 = kappa^2 r^2, r constant",
        "Then A4 = −2r¹²b²κ⁸, giving a contradiction",
        FRENET, FC1, (BETA0, GAMMA_KR, CONST_R), "A4", EQUAL,
        "-2*r^12*b^2*kappa^8", branches=PLUS_MINUS,
    ),
    CatalogEntry(
        "frenet-c1-beta0-x1root-B7", "Frenet, c = 1, beta = 0, x1 = alpha = 0",
        "B7 = 1/32 ar⁹Cκ³(γ² − κ²r²)(κγ′ − κ′γ), C = a³ + 4ab − (a² + 2b)√(a² + 4b)",
        FRENET, FC1, (BETA0, ALPHA0, X1_ROOT), "B7", EQUAL,
        "1/32*a*r^9*{C}*kappa^3*(gamma^2-kappa^2*r^2)*(kappa*gamma'-kappa'*gamma)",
        macros=(("C", "a^3+4*a*b-(a^2+2*b)*PM*s"),), branches=PLUS_MINUS,
    ),
    CatalogEntry(
        "frenet-c1-beta0-x1root-hopf0-A4", "Frenet, c = 1, beta = 0, x1 = alpha = 0, a^2 + 4b = 0",
        "Equation A4 = 0 implies 16r⁴ + 8a²r² − 3a⁴ = 0",
        FRENET, FC1, (BETA0, ALPHA0, HOPF0, GAMMA_KG, R_CONST), "A4", DIVIDES,
        "16*r^4+8*a^2*r^2-3*a^4",
    ),
    CatalogEntry(
        "frenet-c1-beta0-x1root-A5", "Frenet, c = 1, beta = 0, x1 = alpha = 0, a^2 + 4b > 0",
        "Now A5 = 0 implies τ = 0",
        FRENET, FC1, (BETA0, ALPHA0, GAMMA_KGM, R_CONST), "A5", DIVIDES, "tau",
    ),
    CatalogEntry(
        "frenet-c1-generic-x4-degree", "Frenet, c = 1, beta gamma != 0",
        "Now x4 is a 2-degree polynomial on β²",
        FRENET, FC1, (), "x4", DEGREE, "4", variable="beta",
    ),
    CatalogEntry(
        "frenet-c1-generic-xi", "Frenet, c = 1, beta gamma != 0: x4 = -(eta B^2 - 2 xi B + lambda zeta)",
        "ξ = 960γ⁶ + 320γ⁴κ²(a² + 2b − 4r²) + …",
        FRENET, FC1, (), "xi", EQUAL, XI_PRINTED,
    ),
    CatalogEntry(
        "frenet-c1-generic-eta", "Frenet, c = 1, beta gamma != 0: x4 = -(eta B^2 - 2 xi B + lambda zeta)",
        "η = 1344γ⁴ + (3a⁴ + 12a²b + 4a²)κ⁴ + 80γ²κ²(a² + 2b − 4r²)",
        FRENET, FC1, (), "eta", EQUAL, ETA_PRINTED, suspected_defect=True,
        erratum=Erratum("4a^2 kappa^4 should read 4b^2 kappa^4", ETA_FIXED),
    ),
    CatalogEntry(
        "frenet-c1-generic-zeta", "Frenet, c = 1, beta gamma != 0: x4 = -(eta B^2 - 2 xi B + lambda zeta)",
        "ζ = 320γ⁶ + 80γ⁴κ²(3a² + 6b − 6r²) + …",
        FRENET, FC1, (), "zeta", EQUAL, ZETA_PRINTED, suspected_defect=True,
        erratum=Erratum("the gamma^4 bracket should read 3a^2 + 6b - 8r^2",
                        ZETA_PRINTED.replace("3*a^2+6*b-6*r^2", "3*a^2+6*b-8*r^2")),
    ),
    CatalogEntry(
        "frenet-c1-generic-x2-norm", "Frenet, c = 1, beta gamma != 0: x2 at the beta^2 roots",
        "For each one of the two values of β², we return to x2 = 0 obtaining λμη³ρ = 0",
        FRENET, FC1, (), "x2-norm", DIVIDES,
        f"({LAM_AUX})*({MU_PRINTED})*({ETA_PRINTED})^3*({RHO_PRINTED})", suspected_defect=True,
        note="the norm over both roots is -4096 gamma^2 lambda mu eta^3 rho^2",
        erratum=Erratum("holds with the corrected eta",
                        f"({LAM_AUX})*({MU_PRINTED})*({ETA_FIXED})^3*({RHO_PRINTED})"),
    ),
    CatalogEntry(
        "frenet-c1-generic-lambda0-beta2", "Frenet, c = 1, beta gamma != 0, lambda = 0",
        "β² = 2κ² (2r²(a⁴ + 2a²b + 28b² + 80(a² + 2b)r²) + b²(a² + 2b)) / "
        "(3a⁴ + 12a² + b + 4b² + 80(a² + 2b)r² + 1024r⁴)",
        FRENET, FC1, (), "x4-root", EQUAL,
        "2*kappa^2*(2*r^2*(a^4+2*a^2*b+28*b^2+80*(a^2+2*b)*r^2)+b^2*(a^2+2*b))"
        "/(3*a^4+12*a^2+b+4*b^2+80*(a^2+2*b)*r^2+1024*r^4)",
        suspected_defect=True,
        erratum=Erratum("numerator reads 4a^2b (not 2a^2b); denominator reads 12a^2 b (not 12a^2 + b)",
                        "2*kappa^2*(2*r^2*(a^4+4*a^2*b+28*b^2+80*(a^2+2*b)*r^2)+b^2*(a^2+2*b))"
                        "/(3*a^4+12*a^2*b+4*b^2+80*(a^2+2*b)*r^2+1024*r^4)"),
    ),
    CatalogEntry(
        "frenet-c1-generic-lambda0-x2", "Frenet, c = 1, beta gamma != 0, lambda = 0",
        "x2 writes now as x2 = β²(−4β⁴ + β²κ²(3a² + 6b + 16r²) − 2κ⁴(b² + 2(a² + 2b)r²))",
        FRENET, FC1, (), "x2", EQUAL,
        "beta^2*(-4*beta^4+beta^2*kappa^2*(3*a^2+6*b+16*r^2)-2*kappa^4*(b^2+2*(a^2+2*b)*r^2))",
        post_steps=(LAMBDA0,),
    ),
    CatalogEntry(
        "frenet-c1-generic-lambda0-x2-root", "Frenet, c = 1, beta gamma != 0, lambda = 0",
        "β² = κ²/8(3a² + 6b + 16r² ± √(9a⁴ + 36a²b + 4b² + 32a²r² + 64br² + 256r⁴))",
        FRENET, FC1, (), "x2", VANISHES, branches=PLUS_MINUS,
        post_steps=(LAMBDA0, S("beta^2 root of x2/beta^2",
                               {"beta^2": "kappa^2/8*(3*a^2+6*b+16*r^2+PM*D)"},
                               (RadicalSpec("D", "9*a^4+36*a^2*b+4*b^2+32*a^2*r^2+64*b*r^2+256*r^4"),))),
    ),
    CatalogEntry(
        "frenet-c1-generic-lambda0-r2", "Frenet, c = 1, beta gamma != 0, lambda = 0",
        "r² = −a²(a² + 4b)/(8(a² + 2b))",
        FRENET, FC1, (), "x2-at-x4-root", VANISHES,
        post_steps=(S("r^2 value", {"r^2": R2A}),),
    ),
    CatalogEntry(
        "frenet-c1-generic-lambda0-r2-alt", "Frenet, c = 1, beta gamma != 0, lambda = 0",
        "r² = −1/16(a² + 2b ± √(a²(a² + 4b)))",
        FRENET, FC1, (), "x2-at-x4-root", VANISHES, branches=PLUS_MINUS,
        post_steps=(S("r^2 value", {"r^2": "-1/16*(a^2+2*b+PM*h)"},
                      (RadicalSpec("h", "a^4+4*a^2*b"),)),),
    ),
    CatalogEntry(
        "frenet-c1-generic-lambda0-r2-beta2", "Frenet, c = 1, lambda = 0, first r^2 value",
        "β² = 1/2(a² + 2b)κ²",
        FRENET, FC1, (), "x4-root", EQUAL, "1/2*(a^2+2*b)*kappa^2",
        post_steps=(S("r^2 value", {"r^2": R2A}),),
    ),
    CatalogEntry(
        "frenet-c1-generic-lambda0-r2-A7", "Frenet, c = 1, lambda = 0, first r^2 value",
        "Now A7 = 0 implies ακ⁷ = 0",
        FRENET, FC1, LAMBDA0_R2A, "A7", DIVIDES, "alpha*kappa^7",
    ),
    CatalogEntry(
        "frenet-c1-generic-lambda0-r2-A5", "Frenet, c = 1, lambda = 0, first r^2 value, alpha = 0",
        "Equations A5 = 0 and B5 = 0 give τκ⁷ = 0",
        FRENET, FC1, LAMBDA0_R2A + (ALPHA0,), "A5", DIVIDES, "tau*kappa^7",
    ),
    CatalogEntry(
        "frenet-c1-generic-lambda0-r2-B5", "Frenet, c = 1, lambda = 0, first r^2 value, alpha = 0",
        "Equations A5 = 0 and B5 = 0 give τκ⁷ = 0",
        FRENET, FC1, LAMBDA0_R2A + (ALPHA0,), "B5", DIVIDES, "tau*kappa^7",
    ),
    CatalogEntry(
        "frenet-c1-generic-lambda0-r2-A4", "Frenet, c = 1, lambda = 0, first r^2 value, alpha = tau = 0",
        "A4 = (21a⁶ + 130a⁴b + 240a²b² + 96b³)κ⁸ = 0",
        FRENET, FC1, LAMBDA0_R2A + (ALPHA0, FLAT), "A4", DIVIDES,
        "(21*a^6+130*a^4*b+240*a^2*b^2+96*b^3)*kappa^8",
    ),
    CatalogEntry(
        "frenet-c1-generic-lambda0-r2-B4", "Frenet, c = 1, lambda = 0, first r^2 value, alpha = tau = 0",
        "B4 = (21a⁴ + 88a²b + 96b²)κ⁸ = 0",
        FRENET, FC1, LAMBDA0_R2A + (ALPHA0, FLAT), "B4", DIVIDES,
        "(21*a^4+88*a^2*b+96*b^2)*kappa^8",
    ),
    # ---- parallel planes, c = 0
    CatalogEntry(
        "parallel-c0-f0-A4", "Parallel planes, c = 0, f' = 0",
        "For simplicity, we shall consider f′ = 0 in some interval. Then A4 = 1/8 a²r⁶g′²(rg″ − 2r′g′)",
        PARALLEL, PC0, (F0,), "A4", EQUAL, "1/8*a^2*r^6*g'^2*(r*g''-2*r'*g')",
        suspected_defect=True,
        erratum=Erratum("the last factor is squared", "1/8*a^2*r^6*g'^2*(r*g''-2*r'*g')^2"),
    ),
    CatalogEntry(
        "parallel-c0-f0-g-A2", "Parallel planes, c = 0, f' = 0, g' = lambda r^2",
        "A2 = −1/2 λ²r⁸(a²r²A² − 16b²r′²), A = 1 + λ²r⁴ + r′² − rr″",
        PARALLEL, PC0, (F0, G_LAMBDA), "A2", EQUAL,
        "-1/2*lambda^2*r^8*(a^2*r^2*{A}^2-16*b^2*r'^2)", macros=(("A", A_F0),),
    ),
    CatalogEntry(
        "parallel-c0-f0-g-B1", "Parallel planes, c = 0, f' = 0, g' = lambda r^2",
        "B1 = 2λr⁷r′(a²rA² − 8b²r″)",
        PARALLEL, PC0, (F0, G_LAMBDA), "B1", EQUAL,
        "2*lambda*r^7*r'*(a^2*r*{A}^2-8*b^2*r'')", macros=(("A", A_F0),),
    ),
    CatalogEntry(
        "parallel-c0-f0-g-ode", "Parallel planes, c = 0, f' = 0: r r'' - 2 r'^2 = 0",
        "the function r satisfies the ordinary differential equation rr″ − 2r′² = 0. Then r(u) = α/(u + β)",
        PARALLEL, PC0, (R_INV,), "=r*r''-2*r'^2", VANISHES,
    ),
    CatalogEntry(
        "parallel-c0-f0-g-rinv-A2", "Parallel planes, c = 0, f' = 0, g' = lambda r^2, r = alpha/(u+beta)",
        "16b²(u + β)⁶ − a²((u + β)⁴ − α² + λ²α⁴)² = 0",
        PARALLEL, PC0, (F0, G_LAMBDA, R_INV), "A2", DIVIDES,
        "16*b^2*(u+beta)^6-a^2*((u+beta)^4-alpha^2+lambda^2*alpha^4)^2",
    ),
    CatalogEntry(
        "parallel-c0-B4", "Parallel planes, c = 0, f and g not constant",
        "B4 = 1/4 a²r⁶(rg′f″ + f′(−4g′r′ + rg″))(−2f′²r′ + rf′f″ + g′(2g′r′ − rg″))",
        PARALLEL, PC0, (), "B4", EQUAL,
        "1/4*a^2*r^6*(r*g'*f''+f'*(-4*g'*r'+r*g''))*(-2*f'^2*r'+r*f'*f''+g'*(2*g'*r'-r*g''))",
    ),
    CatalogEntry(
        "parallel-c0-first-A4", "Parallel planes, c = 0, first factor of B4 vanishes",
        "A4 = a²r⁶(f′² + g′²)²/(8g′²) (rg″ − 2g′r′)²",
        PARALLEL, PC0, (F2_17,), "A4", EQUAL,
        "a^2*r^6*(f'^2+g'^2)^2/(8*g'^2)*(r*g''-2*g'*r')^2",
    ),
    CatalogEntry(
        "parallel-c0-first-f2", "Parallel planes, c = 0, first factor of B4 vanishes",
        "Using (17), the same occurs for f′: f′ = μr²",
        PARALLEL, PC0, (FG_LM,), "=r*g'*f''-f'*(4*g'*r'-r*g'')", VANISHES,
    ),
    CatalogEntry(
        "parallel-c0-first-A2", "Parallel planes, c = 0, f' = mu r^2, g' = lambda r^2",
        "A2 = −1/2(λ² − μ²)r⁸(a²r²A² − 16b²r′²), A = 1 + (λ² + μ²)r⁴ + r′² − rr″",
        PARALLEL, PC0, (FG_LM,), "A2", EQUAL,
        "-1/2*(lambda^2-mu^2)*r^8*(a^2*r^2*{A}^2-16*b^2*r'^2)", macros=(("A", A_FG),),
    ),
    CatalogEntry(
        "parallel-c0-first-A1", "Parallel planes, c = 0, f' = mu r^2, g' = lambda r^2",
        "A1 = 2μr⁷r′(−8b²r″ + a²rA²)",
        PARALLEL, PC0, (FG_LM,), "A1", EQUAL,
        "2*mu*r^7*r'*(-8*b^2*r''+a^2*r*{A}^2)", macros=(("A", A_FG),),
    ),
    CatalogEntry(
        "parallel-c0-second-A4", "Parallel planes, c = 0, second factor of B4 vanishes",
        "A4 = −a²r⁶(f′² + g′²)²/(8f′²) (rg″ − 2g′r′)²",
        PARALLEL, PC0, (F2_B,), "A4", EQUAL,
        "-a^2*r^6*(f'^2+g'^2)^2/(8*f'^2)*(r*g''-2*g'*r')^2",
    ),
    # ---- parallel planes, c != 0
    CatalogEntry(
        "parallel-c-A8", "Parallel planes, c != 0",
        "A8 = −1/32 c²r⁸(f′⁸ − 28f′⁶g′² + 70f′⁴g′⁴ − 28f′²g′⁶ + g′⁸)",
        PARALLEL, PC, (), "A8", EQUAL,
        "-1/32*c^2*r^8*(f'^8-28*f'^6*g'^2+70*f'^4*g'^4-28*f'^2*g'^6+g'^8)",
    ),
    CatalogEntry(
        "parallel-c-B8", "Parallel planes, c != 0",
        "B8 = 1/4 c²r⁸f′g′(−f′⁶ + 7f′⁴g′² − 7f′²g′⁴ + g′⁶)",
        PARALLEL, PC, (), "B8", EQUAL,
        "1/4*c^2*r^8*f'*g'*(-f'^6+7*f'^4*g'^2-7*f'^2*g'^4+g'^6)",
    ),
    # ---- concluding ODE systems
    CatalogEntry(
        "parallel-riemann", "Parallel planes, b = c = 0: Riemann examples (first-order centres)",
        "g′ = λr² … f′ = μr² … 1 + (λ² + μ²)r⁴ + r′² − rr″ = 0",
        PARALLEL, WeingartenRelation(1, 0, 0),
        (S("f'=mu r^2,g'=lambda r^2,r''", {"f'": "mu*r^2", "g'": "lambda*r^2",
                                           "r''": "(1+(lambda^2+mu^2)*r^4+r'^2)/r"}),),
        "table", ZERO_TABLE,
    ),
    CatalogEntry(
        "parallel-riemann-second-order", "Parallel planes, b = c = 0: concluding comment",
        "f″ = λr², g″ = μr²  1 + (λ² + μ²)r⁴ + r′² − rr″ = 0",
        PARALLEL, WeingartenRelation(1, 0, 0),
        (S("f''=lambda r^2,g''=mu r^2,r''", {"f''": "lambda*r^2", "g''": "mu*r^2",
                                             "r''": "(1+(lambda^2+mu^2)*r^4+r'^2)/r"}),),
        "table", ZERO_TABLE, suspected_defect=True,
        note="second-order centre equations, as printed in the closing remark",
        erratum=Erratum("the centre equations are first order: f' = mu r^2, g' = lambda r^2"),
    ),
    CatalogEntry(
        "parallel-cone", "Parallel planes, a = c = 0: generalized cones",
        "f″ = g″ = r″ = 0, that is, the functions f, g and r are linear on u",
        PARALLEL, WeingartenRelation(0, 1, 0),
        (S("f''=g''=r''=0", {"f''": "0", "g''": "0", "r''": "0"}),),
        "table", ZERO_TABLE,
    ),
]

CATALOG: dict[str, CatalogEntry] = {e.id: e for e in ENTRIES}
if len(CATALOG) != len(ENTRIES):  # pragma: no cover - guards against copy/paste ids
    raise RuntimeError("duplicate catalog ids")

#: entries whose transcription as printed is expected to disagree with the machine
ERRATA_GOLDEN = ("frenet-c0-A8", "frenet-c1-x1", "frenet-c1-generic-eta")


def get_entry(entry_id: str) -> CatalogEntry:
    try:
        return CATALOG[entry_id]
    except KeyError:
        raise CatalogError(f"unknown catalog id {entry_id!r}") from None


def select(patterns) -> list[CatalogEntry]:
    """Entries whose id matches any of the glob ``patterns`` (catalog order)."""
    if isinstance(patterns, str):
        patterns = [patterns]
    out = []
    for pat in patterns:
        hits = [e for e in ENTRIES if fnmatch.fnmatchcase(e.id, pat)]
        if not hits:
            raise CatalogError(f"no catalog entry matches {pat!r}")
        out.extend(h for h in hits if h not in out)
    return out
