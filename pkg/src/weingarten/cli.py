"""Command-line front end: ``weingarten audit|generate|residual|expand``.

Exit codes: 0 verified, 1 verification failure (mismatch, residual above
tolerance, failed certification), 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .framecalc import (
    ENTRIES,
    CatalogError,
    PreconditionError,
    RelationError,
    WeingartenRelation,
    arclength_identity_check,
    audit_entry,
    get_entry,
    replay,
    select,
)
from .numgeom import DegenerateSampleError, Grid, weingarten_residual
from .surfaces import (
    CertificationError,
    NonpositiveRadiusError,
    OutOfDomainError,
    from_params,
)

OK, FAIL, USAGE = 0, 1, 2

#: relation each kind satisfies by construction, used for generate metadata
NATURAL_RELATION = {
    "catenoid": (1, 0, 0),
    "riemann": (1, 0, 0),
    "cylinder": (0, 1, 0),
    "cone": (0, 1, 0),
    "generalized-cone": (0, 1, 0),
}


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    subcommand: str
    relation: tuple | None = None
    kind: str | None = None
    params: dict = field(default_factory=dict)
    entries: list = field(default_factory=list)
    branch: str | None = None
    grid: tuple[int, int] | None = None
    out: str | None = None
    tol: float | None = None

    def validate(self):
        if self.relation is not None:
            a, b = self.relation[0], self.relation[1]
            if a == 0 and b == 0:
                raise ConfigError("relation needs a^2 + b^2 != 0")
        if self.grid is not None and min(self.grid) < 2:
            raise ConfigError("grid counts must be at least 2")
        if self.tol is not None and not self.tol > 0:
            raise ConfigError("tolerance must be positive")
        return self


def parse_relation(text: str) -> tuple[Fraction, Fraction, Fraction]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise ConfigError(f"--relation wants 'a,b,c', got {text!r}")
    try:
        return tuple(Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"--relation entries must be exact rationals, got {text!r}") from None


def parse_grid(text: str) -> tuple[int, int]:
    try:
        nu, nv = (int(x) for x in text.lower().split("x"))
    except ValueError:
        raise ConfigError(f"--grid wants NUxNV, got {text!r}") from None
    return nu, nv


def parse_param(text: str):
    if "=" not in text:
        raise ConfigError(f"--param wants key=value, got {text!r}")
    key, raw = text.split("=", 1)
    try:
        if "," in raw:
            return key, [float(Fraction(x)) for x in raw.split(",")]
        return key, float(Fraction(raw))
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"--param {key}: not a number: {raw!r}") from None


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------


def cmd_audit(args) -> int:
    cfg = RunConfig("audit", entries=args.entries, branch=args.branch, out=args.out)
    if args.relation:
        # catalog relations may carry parameter names such as "1,b,0"
        cfg.relation = WeingartenRelation.parse(args.relation)
    if args.list:
        for e in ENTRIES:
            print(f"{e.id}  [{', '.join(e.branches)}]  {e.location}")
        return OK
    entries = select(cfg.entries) if cfg.entries else list(ENTRIES)
    if cfg.relation is not None:
        want = cfg.relation
        entries = [e for e in entries if e.relation == want]
        if not entries:
            raise ConfigError(f"no catalog entry uses relation ({want.label()})")
    reports = []
    for e in entries:
        branches = [cfg.branch] if cfg.branch else list(e.branches)
        for b in branches:
            rep = audit_entry(e.id, b, accept_errata=args.accept_errata)
            reports.append(rep)
            if not args.quiet:
                print(f"{rep.verdict:32s} {rep.entry_id} [{b}]", file=sys.stderr)
    if args.arclength:
        reports.append(arclength_identity_check())
    body = {
        "reports": [r.to_dict(timing=not args.no_timing) for r in reports],
        "summary": {
            "total": len(reports),
            "passed": sum(r.ok for r in reports),
            "failed": [f"{r.entry_id}[{r.branch}]" for r in reports if not r.ok],
        },
    }
    _emit(_dumps(body), cfg.out)
    return OK if all(r.ok for r in reports) else FAIL


def _build_surface(args):
    params = dict(parse_param(p) for p in args.param or [])
    if args.params:
        with open(args.params) as fh:
            spec = json.load(fh)
        spec.setdefault("parameters", {}).update(params)
        if args.kind:
            spec["kind"] = args.kind
    else:
        if not args.kind:
            raise ConfigError("give a surface kind or --params FILE")
        spec = {"kind": args.kind, "parameters": params}
    try:
        return from_params(spec)
    except TypeError as exc:
        raise ConfigError(f"bad parameters for {spec['kind']}: {exc}") from None


def _relation_for(surface, text):
    if text:
        return tuple(float(x) for x in parse_relation(text))
    if surface.kind == "sphere":
        return (1.0, -surface.params["R"], 0.0)
    if surface.kind == "revolution-profile":
        return tuple(surface.params["relation"])
    return tuple(float(x) for x in NATURAL_RELATION.get(surface.kind, (1, 0, 0)))


def write_obj(surface, nu: int, nv: int, path: str):
    us = [surface.u_range[0] + (surface.u_range[1] - surface.u_range[0]) * i / nu for i in range(nu + 1)]
    vs = [surface.v_range[0] + (surface.v_range[1] - surface.v_range[0]) * j / nv for j in range(nv + 1)]
    lines = [f"# {surface.kind} {nu}x{nv}"]
    for u in us:
        for v in vs:
            x, y, z = surface.point(u, v)
            lines.append(f"v {x:.12g} {y:.12g} {z:.12g}")
    w = nv + 1
    for i in range(nu):
        for j in range(nv):
            p = i * w + j + 1
            q, s, t = p + 1, p + w, p + w + 1
            lines.append(f"f {p} {s} {t}")
            lines.append(f"f {p} {t} {q}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    return (nu + 1) * (nv + 1), 2 * nu * nv


def cmd_generate(args) -> int:
    grid = parse_grid(args.grid) if args.grid else (32, 64)
    cfg = RunConfig("generate", grid=grid, out=args.out).validate()
    surface = _build_surface(args)
    relation = _relation_for(surface, args.relation)
    cfg.relation = relation
    cfg.validate()
    nu, nv = cfg.grid
    rep = weingarten_residual(surface, relation, Grid(surface.u_range, surface.v_range, nu + 1, nv + 1))
    meta = surface.to_dict()
    meta["mesh"] = {"nu": nu, "nv": nv}
    meta["residual"] = rep.to_dict()
    if cfg.out:
        nverts, nfaces = write_obj(surface, nu, nv, cfg.out)
        meta["mesh"].update(vertices=nverts, triangles=nfaces, path=cfg.out)
    if args.trajectory and surface.trajectory:
        from .surfaces import Trajectory

        Trajectory(surface.trajectory).write_csv(args.trajectory)
    if args.figure:
        from .plotting import surface_figure

        surface_figure(surface, min(nu, 48), min(nv, 64), path=args.figure)
    _emit(_dumps(meta), args.meta)
    return OK


def cmd_residual(args) -> int:
    grid = parse_grid(args.grid) if args.grid else (32, 32)
    cfg = RunConfig("residual", grid=grid, tol=args.tol, out=args.out).validate()
    surface = _build_surface(args)
    relation = _relation_for(surface, args.relation)
    cfg.relation = relation
    cfg.validate()
    rep = weingarten_residual(surface, relation, Grid(surface.u_range, surface.v_range, *cfg.grid))
    body = rep.to_dict()
    body["surface"] = surface.to_dict()
    body["tol"] = cfg.tol
    body["passed"] = rep.max < cfg.tol
    if args.csv:
        rep.write_csv(args.csv)
    if args.figure:
        from .plotting import residual_figure

        residual_figure(rep, path=args.figure)
    _emit(_dumps(body), cfg.out)
    return OK if body["passed"] else FAIL


def cmd_expand(args) -> int:
    if args.entry:
        e = get_entry(args.entry)
        branch = args.branch or e.branches[0]
        table = replay(e.kind, e.relation, e.steps_for(branch))
    else:
        try:
            rel = WeingartenRelation.parse(args.relation or "1,b,0")
        except RelationError as exc:
            raise ConfigError(str(exc)) from None
        table = replay(args.kind, rel)
    if args.format == "json":
        body = {"provenance": table.provenance(), "degree": table.degree,
                "entries": {k: table[k].to_text() for k in table.entries}}
        text = _dumps(body)
    else:
        text = table.to_text()
    _emit(text, args.out)
    return OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="weingarten", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("audit", help="audit printed coefficient formulas")
    a.add_argument("entries", nargs="*", help="catalog ids or glob patterns (default: all)")
    a.add_argument("--branch", help="sign branch (plus/minus/main)")
    a.add_argument("--relation", help="only entries for this relation a,b,c")
    a.add_argument("--accept-errata", action="store_true",
                   help="count a verified documented correction as a pass")
    a.add_argument("--arclength", action="store_true", help="also run the arclength identity")
    a.add_argument("--list", action="store_true", help="list catalog ids and exit")
    a.add_argument("--no-timing", action="store_true", help="omit timing fields")
    a.add_argument("--quiet", action="store_true")
    a.add_argument("--out")
    a.set_defaults(func=cmd_audit)

    def surface_args(sp):
        sp.add_argument("kind", nargs="?", help="sphere, cylinder, cone, catenoid, "
                        "generalized-cone, riemann, revolution-profile")
        sp.add_argument("--param", action="append", metavar="KEY=VALUE",
                        help="surface parameter; lists as comma-separated values")
        sp.add_argument("--params", metavar="FILE", help="JSON surface parameter file")
        sp.add_argument("--relation", help="a,b,c as exact rationals")
        sp.add_argument("--grid", help="NUxNV")
        sp.add_argument("--figure", metavar="PATH", help="write a static figure")

    g = sub.add_parser("generate", help="generate a surface mesh (OBJ) and metadata")
    surface_args(g)
    g.add_argument("--out", help="OBJ output path")
    g.add_argument("--meta", help="JSON metadata path (default stdout)")
    g.add_argument("--trajectory", help="CSV dump of the integrated profile")
    g.set_defaults(func=cmd_generate)

    r = sub.add_parser("residual", help="sample |aH + bK - c| on a grid")
    surface_args(r)
    r.add_argument("--tol", type=float, default=1e-8)
    r.add_argument("--csv", help="CSV dump of samples")
    r.add_argument("--out")
    r.set_defaults(func=cmd_residual)

    e = sub.add_parser("expand", help="dump a coefficient table")
    e.add_argument("--kind", choices=["frenet", "parallel"], default="frenet")
    e.add_argument("--relation", help="a,b,c; rationals or parameter names")
    e.add_argument("--entry", help="replay the substitutions of this catalog entry")
    e.add_argument("--branch")
    e.add_argument("--format", choices=["text", "json"], default="text")
    e.add_argument("--out")
    e.set_defaults(func=cmd_expand)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, CatalogError, PreconditionError, RelationError,
            NonpositiveRadiusError, OutOfDomainError) as exc:
        print(f"weingarten: error: {exc}", file=sys.stderr)
        return USAGE
    except (CertificationError, DegenerateSampleError) as exc:
        print(f"weingarten: verification failed: {exc}", file=sys.stderr)
        return FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
