import math
import random

import pytest

from weingarten.cas import FourierSeries, Polynomial, parse
from weingarten.framecalc import (
    CATALOG,
    ENTRIES,
    ERRATUM,
    EXACT,
    FRENET,
    MISMATCH,
    PARALLEL,
    CatalogError,
    FrameMismatchError,
    FrameVector,
    PreconditionError,
    RelationError,
    Step,
    WeingartenRelation,
    arclength_identity_check,
    assemble_weingarten,
    audit_entry,
    audit_formula,
    base_table,
    build_cyclic_parametrization,
    case_substitute,
    replay,
    triple_product,
)
from weingarten.framecalc.catalog import ERRATA_GOLDEN
from weingarten.framecalc.frames import FRENET_ALPHABET, PARALLEL_ALPHABET
from weingarten.numgeom import SurfaceJet, fundamental_forms, squared_identity


def FS(alpha, a0="0", cos="0", sin="0"):
    return FourierSeries(parse(a0, alpha), [parse(cos, alpha)], [parse(sin, alpha)])


def test_frenet_xv():
    par = build_cyclic_parametrization(FRENET)
    A = FRENET_ALPHABET
    assert par.Xv.coords[0].is_zero()
    assert par.Xv.coords[1] == FS(A, sin="-r")
    assert par.Xv.coords[2] == FS(A, cos="r")


def test_frenet_xu_tangent_component():
    par = build_cyclic_parametrization(FRENET)
    assert par.Xu.coords[0] == FS(FRENET_ALPHABET, "alpha", cos="-r*kappa")


def test_parallel_xvv():
    par = build_cyclic_parametrization(PARALLEL)
    A = PARALLEL_ALPHABET
    assert par.Xvv.coords[0] == FS(A, cos="-r")
    assert par.Xvv.coords[1] == FS(A, sin="-r")
    assert par.Xvv.coords[2].is_zero()


def test_triple_product_examples():
    A = FRENET_ALPHABET
    one = FourierSeries(Polynomial.constant(A, 1))
    zero = FourierSeries(Polynomial(A))
    t = FrameVector((one, zero, zero), FRENET)
    n = FrameVector((zero, one, zero), FRENET)
    b = FrameVector((zero, zero, one), FRENET)
    assert triple_product(t, n, b) == one
    par = build_cyclic_parametrization(FRENET)
    assert triple_product(par.Xu, par.Xv, par.Xv).is_zero()
    assert triple_product(par.Xu, par.Xv, par.Xvv) == FS(A, "r^2*alpha", cos="-r^3*kappa")


def test_frame_mismatch():
    f = build_cyclic_parametrization(FRENET).Xv
    p = build_cyclic_parametrization(PARALLEL).Xv
    with pytest.raises(FrameMismatchError):
        triple_product(f, p, p)


def test_relation_hypothesis():
    with pytest.raises(RelationError):
        WeingartenRelation(0, 0, 1)
    assert WeingartenRelation(1, "b", 0).normalization == "a=1"
    assert WeingartenRelation("a", "b", 1).normalization == "c=1"


@pytest.mark.parametrize("kind,rel,bound", [
    (FRENET, ("a", "b", "c"), 8),
    (PARALLEL, ("a", "b", "c"), 8),
    (PARALLEL, ("a", "b", 0), 4),
])
def test_degree_bounds(kind, rel, bound):
    assert assemble_weingarten(WeingartenRelation(*rel), kind).degree <= bound
    assert replay(kind, WeingartenRelation(*rel)).degree == bound


def test_revolution_only_a0():
    t = case_substitute(base_table(PARALLEL, WeingartenRelation("a", "b", "c")),
                        Step.of("f'=g'=0", {"f'": "0", "g'": "0"}))
    assert t.nonzero() == ["A0"]


def test_squaring_invariance():
    for kind in (FRENET, PARALLEL):
        rel = WeingartenRelation("a", "b", "c")
        assert assemble_weingarten(rel, kind) == assemble_weingarten(rel.negated(), kind)


def test_provenance_determinism():
    e = CATALOG["frenet-c0-gamma0-bkt-A7"]
    t1 = replay(e.kind, e.relation, e.steps_for("main"))
    t2 = case_substitute(base_table(e.kind, e.relation), e.steps_for("main"))
    assert t1.to_text() == t2.to_text()
    assert t1.provenance() == t2.provenance()


def test_extract_examples():
    b8 = audit_entry("frenet-c0-B8")
    assert b8.verdict == EXACT
    assert audit_entry("frenet-c0-beta0-A8").verdict == EXACT


def test_case_substitute_examples():
    for br in ("plus", "minus"):
        assert audit_entry("frenet-c0-beta0-gkr-A6", br).verdict == EXACT
        assert audit_entry("frenet-c0-beta0-gkr-B6", br).verdict == EXACT
        assert audit_entry("frenet-c0-beta0-gkr-const-A4", br).verdict == EXACT
    assert audit_entry("parallel-c0-f0-g-A2").verdict == EXACT


def test_sphere_annihilation_symbolic():
    e = CATALOG["frenet-c0-gamma0-sphere"]
    assert replay(e.kind, e.relation, e.steps_for("main")).is_zero()


def test_satellite_identity_exact_match():
    r = audit_entry("frenet-c1-beta0-8x1-y1")
    assert r.verdict == EXACT


def test_eq8_mismatch_reports_diff():
    r = audit_entry("frenet-c0-A8")
    assert r.verdict == MISMATCH
    assert r.diff and r.erratum_verified is True
    assert audit_entry("frenet-c0-A8", accept_errata=True).verdict == ERRATUM


# ---- the whole catalog, per branch

CASES = [(e.id, b) for e in ENTRIES for b in e.branches]


@pytest.mark.parametrize("entry_id,branch", CASES, ids=[f"{i}[{b}]" for i, b in CASES])
def test_catalog_entry(entry_id, branch):
    e = CATALOG[entry_id]
    r = audit_entry(entry_id, branch)
    if not e.suspected_defect:
        assert r.verdict == EXACT, r.diff
        return
    if r.verdict == EXACT:
        return
    assert r.verdict == MISMATCH
    has_fix = e.erratum and any((e.erratum.transcription, e.erratum.quantity, e.erratum.cofactor))
    if has_fix:
        assert r.erratum_verified is True
        assert audit_entry(entry_id, branch, accept_errata=True).verdict == ERRATUM


def test_flags_match_errata():
    for e in ENTRIES:
        assert bool(e.erratum) == e.suspected_defect, e.id
        assert e.anchor and e.location


@pytest.mark.parametrize("entry_id", ERRATA_GOLDEN)
def test_errata_diffs_are_golden(entry_id, golden):
    r = audit_entry(entry_id)
    assert r.verdict == MISMATCH
    golden(f"{entry_id}.diff", r.diff + "\n")


def test_table_golden(golden):
    t = replay(PARALLEL, WeingartenRelation("a", "b", "c"))
    golden("parallel-abc.table", t.to_text())
    e = CATALOG["frenet-c0-beta0-A8"]
    golden("frenet-c0-beta0.table", replay(e.kind, e.relation, e.steps_for("main")).to_text())


def test_precondition_mismatch():
    table = replay(FRENET, WeingartenRelation(1, "b", 0))
    with pytest.raises(PreconditionError):
        audit_formula(table, "frenet-c0-beta0-A8")
    with pytest.raises(PreconditionError):
        audit_formula(replay(PARALLEL, WeingartenRelation("a", "b", 0)), "frenet-c0-B8")
    with pytest.raises(CatalogError):
        audit_formula(table, "no-such-entry")
    with pytest.raises(CatalogError):
        audit_entry("frenet-c0-B8", "plus")


def test_report_json_shape():
    d = audit_entry("frenet-c0-B8").to_dict()
    assert {"entry-id", "branch", "verdict", "diff", "timing"} <= set(d)


def test_arclength_identity():
    r = arclength_identity_check()
    assert r.verdict == EXACT, r.details


def test_symbolic_numeric_bridge():
    rel = WeingartenRelation(1, 1, 1)
    F = assemble_weingarten(rel, PARALLEL)
    rng = random.Random(7)
    for _ in range(20):
        u, v = rng.uniform(-2, 2), rng.uniform(0, 2 * math.pi)
        r, r1, r2 = 2 + u * u / 4, u / 2, 0.5
        vals = {"f": u, "f'": 1.0, "f''": 0.0, "f'''": 0.0, "g": u * u / 2, "g'": u, "g''": 1.0,
                "g'''": 0.0, "r": r, "r'": r1, "r''": r2, "r'''": 0.0, "u": u}
        sym = F.evaluate(vals, v)
        c, s = math.cos(v), math.sin(v)
        jet = SurfaceJet.of((u + r * c, u * u / 2 + r * s, u), (1 + r1 * c, u + r1 * s, 1),
                            (-r * s, r * c, 0), (r2 * c, 1 + r2 * s, 0), (-r1 * s, r1 * c, 0),
                            (-r * c, -r * s, 0))
        num = squared_identity(fundamental_forms(jet), (1, 1, 1))
        assert sym == pytest.approx(num, rel=1e-9)
