import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weingarten.cas import (
    AlphabetError,
    CyclicBindingError,
    DerivativeDepthError,
    FourierSeries,
    Polynomial,
    RadicalDerivativeError,
    SquareRule,
    SymbolAlphabet,
    adjoin_radical,
    derive,
    fourier_coeff,
    fourier_derive,
    fourier_mul,
    parse,
    poly_arith,
    poly_derive,
    poly_substitute,
    substitute,
)
from weingarten.framecalc.frames import FRENET_ALPHABET, PARALLEL_ALPHABET

A = FRENET_ALPHABET


def P(text, alpha=A):
    return parse(text, alpha)


# ---- examples


def test_square_of_symbol():
    p = poly_arith(P("r'"), P("r'"), "mul")
    assert p == P("r'^2")
    assert p.terms and list(p.terms.values()) == [1]


def test_annihilator():
    assert poly_arith(P("kappa*r+1"), Polynomial(A), "mul").terms == {}


def test_difference_of_squares():
    p = poly_arith(P("beta^2-kappa^2*r^2"), P("beta^2+kappa^2*r^2"), "mul")
    assert p == P("beta^4-kappa^4*r^4")


def test_alphabet_mismatch():
    other = SymbolAlphabet.build(params=["z"])
    with pytest.raises(AlphabetError):
        poly_arith(P("r"), parse("z", other), "add")


def test_derive_examples():
    assert poly_derive(P("r")) == P("r'")
    assert poly_derive(P("r^2")) == P("2*r*r'")
    assert poly_derive(P("kappa*beta")) == P("kappa'*beta+kappa*beta'")
    assert poly_derive(P("a*b^2")).is_zero()


def test_derivative_depth_is_an_error():
    with pytest.raises(DerivativeDepthError):
        poly_derive(P("r'''"))


def test_tau_aliases_sigma():
    assert P("tau") == P("sigma")


def test_substitute_beta_gamma_sends_a8_factor_to_zero():
    p = P("(gamma^2-kappa^2*r^2)^2*(gamma^2+kappa^2*(b^2-r^2))")
    assert substitute(p, {"beta": P("0"), "gamma": P("kappa*r")}).is_zero()


def test_induced_binding():
    alpha = PARALLEL_ALPHABET
    p = parse("r*g''-2*r'*g'", alpha)
    assert poly_substitute(p, {"g'": parse("lambda*r^2", alpha)}).is_zero()


def test_square_rule_keeps_odd_factor():
    s = adjoin_radical("s", P("a^2+4*b"))
    s3 = parse("s^3", s.alphabet)
    assert s3 == parse("(a^2+4*b)*s", s.alphabet)
    assert substitute(parse("s^3", s.alphabet), {"s": SquareRule(parse("a^2+4*b", s.alphabet))}) == s3


def test_cyclic_bindings_rejected():
    with pytest.raises(CyclicBindingError):
        substitute(P("alpha"), {"alpha": P("beta"), "beta": P("alpha")}, induce=False)


def test_radical_defining_relation():
    rad = P("16*gamma^4+4*b^2*gamma^2*kappa^2+b^4*kappa^4-12*gamma^2*kappa^2*r^2")
    h = adjoin_radical("A", rad)
    assert (parse("A^2", h.alphabet) - rad).is_zero()


def test_radical_conjugate_product():
    h = adjoin_radical("s", P("a^2+4*b"))
    assert parse("(a+s)*(a-s)", h.alphabet) == parse("-4*b", h.alphabet)


def test_stratified_radical():
    s = adjoin_radical("s", P("a^2+4*b"))
    q = adjoin_radical("Q", parse("a^2+2*b+a*s", s.alphabet))
    x = parse("Q^2-(a^2+2*b+a*s)", q.alphabet)
    assert x.is_zero()


def test_radical_name_collision():
    s = adjoin_radical("s", P("a^2+4*b"))
    with pytest.raises(AlphabetError):
        adjoin_radical("s", parse("a", s.alphabet))


def test_radical_derivative_disabled_by_default():
    s = adjoin_radical("s", P("r^2-b^2"))
    with pytest.raises(RadicalDerivativeError):
        derive(parse("s", s.alphabet))


def test_radical_derivative_quotient_form():
    s = adjoin_radical("S", P("r^2-b^2"), differentiable=True)
    d = derive(parse("S", s.alphabet))
    # S' = r r' / S, so S S' = r r'
    assert d * parse("S", s.alphabet) == parse("r*r'", s.alphabet)


def _fs(a0="0", cos=(), sin=(), alpha=A):
    return FourierSeries(P(a0, alpha), [P(c, alpha) for c in cos], [P(s, alpha) for s in sin])


def test_cos_squared():
    c = _fs(cos=["1"])
    assert fourier_mul(c, c) == _fs("1/2", ["0", "1/2"])


def test_cos_sin():
    assert fourier_mul(_fs(cos=["1"]), _fs(sin=["1"])) == _fs(sin=["0", "1/2"])


def test_square_with_coefficients_numeric_oracle():
    F = _fs(cos=["r"], sin=["1"])
    G = fourier_mul(F, F)
    assert G == _fs("(r^2+1)/2", ["0", "(r^2-1)/2"], ["0", "r"])
    for k in range(16):
        v = 2 * math.pi * k / 16
        want = (1.7 * math.cos(v) + math.sin(v)) ** 2
        assert G.evaluate({"r": 1.7}, v) == pytest.approx(want, rel=1e-13)


def test_derive_v_examples():
    assert fourier_derive(_fs(cos=["0", "0", "1"]), "v") == _fs(sin=["0", "0", "-3"])
    assert fourier_derive(_fs(cos=["r"]), "u") == _fs(cos=["r'"])
    for j in (1, 4):
        s = FourierSeries.basis(A, j, "sin")
        assert fourier_derive(fourier_derive(s, "v"), "v") == FourierSeries.basis(A, j, "sin", P(str(-j * j)))


def test_coeff_examples():
    F = _fs("1/2", ["0", "1/2"])
    assert fourier_coeff(F, 2, "cos") == P("1/2")
    assert fourier_coeff(F, 0, "const") == P("1/2")
    assert fourier_coeff(F, 7, "sin").is_zero()
    with pytest.raises(ValueError):
        fourier_coeff(F, 0, "sin")


def test_canonical_text_is_deterministic():
    p = P("b*kappa^2 + a + kappa*r'^2 - 3")
    assert p.to_text() == P("-3 + kappa*r'^2 + a + b*kappa^2").to_text()


# ---- properties

NAMES = ["a", "b", "kappa", "r", "r'", "beta", "gamma'"]


@st.composite
def polys(draw, max_terms=4):
    terms = draw(st.lists(
        st.tuples(st.fractions(min_value=-5, max_value=5, max_denominator=6),
                  st.lists(st.integers(0, 2), min_size=len(NAMES), max_size=len(NAMES))),
        max_size=max_terms))
    out = Polynomial(A)
    for c, exps in terms:
        out = out + Polynomial.monomial(A, dict(zip(NAMES, exps)), c)
    return out


@settings(max_examples=500)
@given(polys(), polys(), polys())
def test_ring_laws(p, q, s):
    assert (p + q) + s == p + (q + s)
    assert p * (q + s) == p * q + p * s
    assert p * q == q * p


@settings(max_examples=500)
@given(polys(), polys())
def test_leibniz(p, q):
    assert poly_derive(p * q) == poly_derive(p) * q + p * poly_derive(q)


@st.composite
def series(draw, max_degree=3):
    d = draw(st.integers(0, max_degree))
    return FourierSeries(draw(polys(2)), [draw(polys(2)) for _ in range(d)],
                         [draw(polys(2)) for _ in range(d)])


@settings(max_examples=150)
@given(series(), series(), st.floats(0, 2 * math.pi, exclude_max=True), st.integers(0, 10_000))
def test_fourier_bridge(F, G, v, seed):
    rng = random.Random(seed)
    values = {n: rng.uniform(-1.5, 1.5) for n in NAMES}
    H = fourier_mul(F, G)
    want = F.evaluate(values, v) * G.evaluate(values, v)
    got = H.evaluate(values, v)
    assert got == pytest.approx(want, rel=1e-12, abs=1e-12 * (1 + abs(want)))


@settings(max_examples=150)
@given(series(), series())
def test_degree_additivity(F, G):
    H = fourier_mul(F, G)
    assert H.degree <= F.degree + G.degree


def test_degree_equality_on_generic_input():
    F = _fs("1", ["r", "kappa"], ["a", "b"])
    G = _fs("2", ["beta", "0", "gamma'"], ["1", "r'", "a"])
    assert fourier_mul(F, G).degree == 5


@settings(max_examples=100)
@given(polys(3), st.integers(0, 10_000))
def test_radical_soundness(p, seed):
    rng = random.Random(seed)
    h = adjoin_radical("s", P("a^2+4*b+r^2"))
    s = parse("s", h.alphabet)
    q = parse("a^2+4*b+r^2", h.alphabet)
    assert (s * s - q).is_zero()
    # (p s)^2 - p^2 Q normalises to zero and evaluates to ~0 with numeric s
    expr = (p * s) ** 2 - p * p * q
    assert expr.is_zero()
    values = {n: rng.uniform(-1, 1) for n in NAMES}
    val = (p * s * p * s).evaluate(values) - (p * p * q).evaluate(values)
    assert abs(val) < 1e-10 * (1 + abs((p * p * q).evaluate(values)))


def test_exact_division():
    x = P("(a^2-b*r+3)*(kappa-r)^3")
    assert x.divide_exact(P("(kappa-r)^2")) == P("(a^2-b*r+3)*(kappa-r)")
    assert x.divide_exact(P("kappa+b")) is None


def test_rationals_stay_exact():
    p = P("1/3*a") * Fraction(3, 7)
    assert list(p.terms.values()) == [Fraction(1, 7)]
