"""Coefficient tables ``{A_j, B_j}`` and scripted case substitutions."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..cas import FourierSeries, Polynomial, RationalExpr, SquareRule, adjoin_radical, parse, substitute
from .frames import alphabet_for
from .weingarten import WeingartenRelation, assemble_weingarten

MAX_HARMONIC = 8
KEYS = ["A0"] + [f"{k}{j}" for j in range(1, MAX_HARMONIC + 1) for k in "AB"]


@dataclass(frozen=True)
class RadicalSpec:
    name: str
    radicand: str
    sign: int = 1
    differentiable: bool = False


@dataclass(frozen=True)
class Step:
    """One case-analysis substitution.

    ``bindings`` maps symbol names to formula text.  A key ``"beta^2"``
    installs the rewrite ``beta^2 -> value`` instead of replacing ``beta``.
    Radicals named in ``radicals`` are adjoined before the values are parsed.
    """

    label: str
    bindings: tuple[tuple[str, str], ...]
    radicals: tuple[RadicalSpec, ...] = ()
    induce: bool = True

    @classmethod
    def of(cls, label, bindings: dict, radicals=(), induce=True) -> "Step":
        return cls(label, tuple(bindings.items()), tuple(radicals), induce)

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "bindings": dict(self.bindings),
            "radicals": [
                {"name": r.name, "radicand": r.radicand, "sign": r.sign} for r in self.radicals
            ],
        }


def adjoin_specs(alphabet, specs):
    """Adjoin each radical in ``specs`` not already present; return the alphabet."""
    for spec in specs:
        if spec.name in alphabet:
            sym = alphabet.symbol(spec.name)
            if sym.radicand is None or sym.radicand != parse(spec.radicand, alphabet):
                raise ValueError(f"radical {spec.name!r} already bound to something else")
            continue
        radicand = parse(spec.radicand, alphabet)
        if not isinstance(radicand, Polynomial):
            raise ValueError(f"radicand of {spec.name!r} must be polynomial")
        alphabet = adjoin_radical(spec.name, radicand, spec.sign,
                                  differentiable=spec.differentiable).alphabet
    return alphabet


def resolve_bindings(step: Step, alphabet):
    alphabet = adjoin_specs(alphabet, step.radicals)
    out = {}
    for key, text in step.bindings:
        value = parse(text, alphabet)
        if key.endswith("^2"):
            out[key[:-2]] = SquareRule(value)
        else:
            out[key] = value
    return out, alphabet


@dataclass(frozen=True)
class CoefficientTable:
    parametrization: str
    relation: WeingartenRelation
    substitutions: tuple[Step, ...]
    entries: dict = field(compare=False)
    alphabet: object = field(compare=False, repr=False, default=None)

    def __getitem__(self, key: str):
        return self.entries[key]

    def labels(self) -> list[str]:
        return [s.label for s in self.substitutions]

    @property
    def degree(self) -> int:
        return max(
            (int(k[1:]) for k, v in self.entries.items() if not v.is_zero()), default=0
        )

    def nonzero(self) -> list[str]:
        return [k for k in KEYS if not self.entries[k].is_zero()]

    def is_zero(self) -> bool:
        return not self.nonzero()

    def provenance(self) -> dict:
        return {
            "parametrization": self.parametrization,
            "relation": self.relation.to_dict(),
            "substitutions": [s.to_dict() for s in self.substitutions],
        }

    def to_text(self) -> str:
        lines = [
            f"# parametrization: {self.parametrization}",
            f"# relation: {self.relation.label()}",
        ]
        for s in self.substitutions:
            binds = "; ".join(f"{k} -> {v}" for k, v in s.bindings)
            lines.append(f"# step {s.label}: {binds}")
        for k in KEYS:
            lines.append(f"{k} = {self.entries[k].to_text()}")
        return "\n".join(lines) + "\n"


def extract_table(expansion: FourierSeries, parametrization: str,
                  relation: WeingartenRelation, substitutions=()) -> CoefficientTable:
    if expansion.degree > MAX_HARMONIC:
        raise ValueError(f"expansion has degree {expansion.degree} > {MAX_HARMONIC}")
    entries = {"A0": expansion.a0}
    for j in range(1, MAX_HARMONIC + 1):
        entries[f"A{j}"] = expansion.coeff(j, "cos")
        entries[f"B{j}"] = expansion.coeff(j, "sin")
    return CoefficientTable(parametrization, relation, tuple(substitutions), entries,
                            expansion.alphabet)


def base_table(kind: str, relation: WeingartenRelation) -> CoefficientTable:
    return extract_table(assemble_weingarten(relation, kind), kind, relation)


def case_substitute(table: CoefficientTable, steps) -> CoefficientTable:
    """Apply one step or a sequence of steps, appending them to the provenance."""
    if isinstance(steps, Step):
        steps = [steps]
    for step in steps:
        bindings, alphabet = resolve_bindings(step, table.alphabet or alphabet_for(table.parametrization))
        entries = {}
        for k in KEYS:
            val = substitute(table.entries[k], bindings, induce=step.induce)
            if isinstance(val, RationalExpr):
                val = val.simplify()
            entries[k] = val
        table = CoefficientTable(table.parametrization, table.relation,
                                 table.substitutions + (step,), entries, alphabet)
    return table
