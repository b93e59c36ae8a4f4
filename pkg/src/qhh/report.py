"""Assemble ``dim HH^1(TA) = dim Z(A) + dim HH^1(A) + dim HH_1(A) + dim Alt(DA)``.

``HH_1`` and ``Alt`` come from the combinatorial formulas; ``Z(A)`` and
``HH^1(A)`` always come from linear algebra.  With the oracle switched on,
``HH_1``, ``Hom(DA, A)`` and ``Alt`` are recomputed by linear algebra as well
and every pair is compared.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from . import oracle
from .alt import dim_alt, neat_classes
from .basis import enumerate_basis
from .circuits import classify
from .errors import InternalCrossCheckFailure
from .fields import CharSpec, as_char
from .hh1 import dim_hh1, hh1_vanishes
from .presentation import (
    ValidatedPresentation,
    connected_components,
    is_tree_without_double_arrows,
)

FIELDS = (
    "dim_A", "dim_Z", "hh1", "hh1_cohomology", "alt",
    "r", "sym", "s", "e", "e_p_prime", "hh1_ta",
)


class ComponentAnalysis:
    """Characteristic-independent data for one connected component, computed lazily."""

    def __init__(self, p: ValidatedPresentation):
        self.presentation = p

    @cached_property
    def basis(self):
        return enumerate_basis(self.presentation)

    @cached_property
    def census(self):
        return classify(self.presentation, self.basis)

    @cached_property
    def table(self):
        return neat_classes(self.basis)

    @cached_property
    def cochains(self):
        return oracle.build_cochain_slice(self.presentation, self.basis)

    @cached_property
    def chain_slice(self):
        return oracle.build_chain_slice(self.presentation, self.basis)

    @cached_property
    def bimodule_system(self):
        return oracle.BimoduleSystem(self.basis)

    @cached_property
    def is_tree(self) -> bool:
        return is_tree_without_double_arrows(self.presentation)

    @property
    def is_point(self) -> bool:
        p = self.presentation
        return len(p.vertices) == 1 and not p.arrows

    def evaluate(self, ch: CharSpec, with_oracle: bool = False) -> ComponentReport:
        census, table = self.census, self.table
        hh1 = dim_hh1(census, ch)
        alt = dim_alt(table, ch)
        dim_z = oracle.center_dim(self.basis, ch.value)
        hh1_co = oracle.hh1_cohomology_dim(
            self.presentation, self.basis, ch.value, cochains=self.cochains
        )
        rep = ComponentReport(
            dim_A=len(self.basis),
            dim_Z=dim_z,
            hh1=hh1.dimension,
            hh1_cohomology=hh1_co,
            alt=alt,
            r=table.r,
            sym=table.sym,
            s=census.s,
            e=census.e,
            e_p_prime=None if ch.is_zero else census.e_p_prime(ch),
            hh1_ta=dim_z + hh1_co + hh1.dimension + alt,
        )
        rep.hh1_vanishes = hh1_vanishes(census, ch)[0]
        if with_oracle:
            hom_o, alt_o = oracle.hom_and_alt_dims(self.basis, ch.value, self.bimodule_system)
            checks = {
                "hh1": (hh1.dimension, oracle.hh1_homology_dim(self.chain_slice, ch.value)),
                "hom": (table.r, hom_o),
                "alt": (alt, alt_o),
                "center": (dim_z, oracle.hh0_cohomology_dim(self.cochains, ch.value)),
                "hh1_vanishes": (rep.hh1_vanishes, hh1.dimension == 0),
                "sum_w": (census.w, census.q1_b - census.q0_b + census.n_vertices),
                "d0_d1": (True, self.chain_slice.composite_is_zero()),
                "cochain_d1_d0": (True, self.cochains.composite_is_zero()),
            }
            rep.checks = checks
        return rep


@dataclass
class ComponentReport:
    dim_A: int
    dim_Z: int
    hh1: int
    hh1_cohomology: int
    alt: int
    r: int
    sym: int
    s: int
    e: int
    e_p_prime: int | None
    hh1_ta: int
    hh1_vanishes: bool | None = None
    checks: dict | None = None

    @property
    def oracle_agreement(self) -> bool | None:
        if self.checks is None:
            return None
        return all(a == b for a, b in self.checks.values())

    def mismatches(self) -> dict:
        if not self.checks:
            return {}
        return {k: v for k, v in self.checks.items() if v[0] != v[1]}

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in FIELDS}


@dataclass(frozen=True)
class MinimalityVerdict:
    """The four equivalent conditions for ``dim HH^1(TA) = 1``, evaluated independently.

    1. ``dim Z(A) = dim HH^1(TA)``   2. ``dim HH^1(TA) = 1``
    3. ``HH^1(A) = 0``               4. quiver is a tree without double arrows

    On a component that is a single vertex without arrows, characteristic 2
    gives ``TA = k[x]/(x^2)`` with ``dim HH^1 = 2`` although (3) and (4) hold;
    such components are listed in ``exceptions`` instead of raising.
    """

    conditions: dict
    per_component: tuple
    exceptions: tuple = ()

    @property
    def agree(self) -> bool:
        return len(set(self.conditions.values())) == 1

    @property
    def minimal(self) -> bool:
        return self.conditions[2]


@dataclass
class InvariantsReport:
    name: str
    characteristic: int
    components: list[ComponentReport]
    total: dict
    minimality: MinimalityVerdict
    with_oracle: bool = False

    @property
    def oracle_agreement(self) -> bool | None:
        if not self.with_oracle:
            return None
        return all(c.oracle_agreement for c in self.components)

    def to_json_obj(self) -> dict:
        return {
            "char": self.characteristic,
            "components": [c.as_dict() for c in self.components],
            "total": dict(self.total),
            "minimal": self.minimality.minimal,
            "oracle_agreement": self.oracle_agreement,
        }


def _total(components: list[ComponentReport], ch: CharSpec) -> dict:
    out = {}
    for k in FIELDS:
        if k == "e_p_prime" and ch.is_zero:
            out[k] = None
        else:
            out[k] = sum(getattr(c, k) for c in components)
    return out


def minimality_check(analyses, ch: CharSpec, components) -> MinimalityVerdict:
    per = []
    exceptions = []
    for an, rep in zip(analyses, components):
        conds = {
            1: rep.dim_Z == rep.hh1_ta,
            2: rep.hh1_ta == 1,
            3: rep.hh1_cohomology == 0,
            4: an.is_tree,
        }
        per.append(conds)
        if len(set(conds.values())) != 1:
            if an.is_point and ch.value == 2:
                exceptions.append(an.presentation.name)
            else:
                raise InternalCrossCheckFailure(
                    f"minimality conditions disagree on {an.presentation.name}",
                    {"conditions": conds, "report": rep.as_dict()},
                )
    overall = {i: all(c[i] for c in per) for i in (1, 2, 3, 4)}
    return MinimalityVerdict(overall, tuple(per), tuple(exceptions))


class Analysis:
    """All components of a validated presentation; reuses work across characteristics."""

    def __init__(self, p: ValidatedPresentation):
        self.presentation = p
        self.components = [ComponentAnalysis(c) for c in connected_components(p)]

    def report(self, ch: CharSpec | int = 0, with_oracle: bool = False, strict: bool = True):
        ch = as_char(ch)
        reps = [an.evaluate(ch, with_oracle) for an in self.components]
        for rep in reps:
            if rep.hh1_ta < 1:
                raise InternalCrossCheckFailure("dim HH^1(TA) < 1", rep.as_dict())
        if strict and with_oracle:
            bad = {i: r.mismatches() for i, r in enumerate(reps) if r.mismatches()}
            if bad:
                raise InternalCrossCheckFailure("formula and oracle disagree", bad)
        verdict = minimality_check(self.components, ch, reps)
        return InvariantsReport(
            self.presentation.name, ch.value, reps, _total(reps, ch), verdict, with_oracle
        )


def compute_report(
    p: ValidatedPresentation, ch: CharSpec | int = 0, with_oracle: bool = False, strict: bool = True
) -> InvariantsReport:
    return Analysis(p).report(ch, with_oracle, strict)


def serialize_report(r: InvariantsReport, format: str = "json") -> bytes:
    if format == "json":
        return (json.dumps(r.to_json_obj(), indent=2, sort_keys=False) + "\n").encode()
    if format != "text":
        raise ValueError(f"unknown format {format!r}")
    lines = [f"{r.name}  (characteristic {r.characteristic})"]
    labels = {
        "dim_A": "dim A",
        "dim_Z": "dim Z(A)            [linear algebra]",
        "hh1_cohomology": "dim HH^1(A)         [linear algebra]",
        "hh1": "dim HH_1(A)         [formula]",
        "alt": "dim Alt(DA)         [formula]",
        "hh1_ta": "dim HH^1(TA)",
        "r": "neat classes r",
        "sym": "symmetric classes",
        "s": "strong circuits s",
        "e": "efficient circuits e",
        "e_p_prime": "efficient p'-circuits",
    }
    cols = ["total"] if len(r.components) == 1 else [f"[{i}]" for i in range(len(r.components))] + ["total"]
    lines.append(f"{'':38}" + "".join(f"{c:>8}" for c in cols))
    for key, label in labels.items():
        vals = [c.as_dict()[key] for c in r.components] if len(r.components) > 1 else []
        vals.append(r.total[key])
        lines.append(f"{label:38}" + "".join(f"{'-' if v is None else v:>8}" for v in vals))
    lines.append(f"minimal (dim HH^1(TA) = 1): {'yes' if r.minimality.minimal else 'no'}")
    if r.minimality.exceptions:
        lines.append("  single-vertex components in characteristic 2: " + ", ".join(r.minimality.exceptions))
    if r.with_oracle:
        lines.append(f"oracle agreement: {'yes' if r.oracle_agreement else 'NO'}")
        for i, c in enumerate(r.components):
            for k, (f, o) in (c.checks or {}).items():
                mark = "ok" if f == o else "MISMATCH"
                lines.append(f"  [{i}] {k:14} formula={f} oracle={o} {mark}")
    return ("\n".join(lines) + "\n").encode()
