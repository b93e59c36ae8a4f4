"""Combinatorial dimension of the first Hochschild homology ``HH_1(A)``.

The homology splits over circuits.  Contributions per circuit ``C``:

* non-trivial strong: 1
* efficient: ``w_C - 1`` when the multiplicity of ``C`` is invertible in k,
  ``w_C`` otherwise
* anything else: 0

Summing gives ``s + sum(w_C) - e'`` where ``e'`` counts efficient circuits
with invertible multiplicity (all of them in characteristic 0).  Since
``sum(w_C) = |Q1.B| - |Q0.B| + |Q0|`` there is a second expression that
avoids ``w_C``; both are always evaluated and compared.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .circuits import CircuitCensus, CircuitKey, relation_occurrences
from .errors import InternalCrossCheckFailure
from .fields import CharSpec, as_char


@dataclass(frozen=True)
class HH1Result:
    dimension: int
    via_w: int
    via_pair_counts: int
    per_circuit: dict = field(default_factory=dict)
    characteristic: int = 0


def circuit_contribution(c, ch: CharSpec) -> int:
    if c.trivial:
        return 0
    if c.strong:
        return 1
    if c.efficient:
        return c.w - 1 if c.is_p_prime(ch) else c.w
    return 0


def dim_hh1(census: CircuitCensus, ch: CharSpec | int = 0) -> HH1Result:
    ch = as_char(ch)
    e_eff = census.e_p_prime(ch)
    s = census.s
    sum_w = sum(c.w for c in census.efficient)
    via_w = s + sum_w - e_eff
    via_pair_counts = census.q1_b - census.q0_b + census.n_vertices - e_eff + s
    per_circuit = {}
    for c in census.sorted_circuits():
        k = circuit_contribution(c, ch)
        if k:
            per_circuit[c.key] = k
    total = sum(per_circuit.values())
    if not via_w == via_pair_counts == total:
        raise InternalCrossCheckFailure(
            "HH_1 expressions disagree",
            {
                "via_w": via_w,
                "via_pair_counts": via_pair_counts,
                "per_circuit_sum": total,
                "s": s,
                "e_p_prime": e_eff,
                "sum_w": sum_w,
                "w": census.w,
                "|Q1.B|": census.q1_b,
                "|Q0.B|": census.q0_b,
            },
        )
    return HH1Result(total, via_w, via_pair_counts, per_circuit, ch.value)


@dataclass(frozen=True)
class VanishingWitness:
    """Why HH_1 does not vanish: the offending circuit and which condition failed."""

    circuit: CircuitKey
    reason: str
    count: int | None = None


def hh1_vanishes(
    census: CircuitCensus, ch: CharSpec | int = 0
) -> tuple[bool, VanishingWitness | None]:
    """Check the vanishing criterion directly on circuits, without computing a dimension."""
    ch = as_char(ch)
    for c in census.sorted_circuits():
        if not c.trivial and c.strong:
            return False, VanishingWitness(c.key, "non-trivial circuit without a zero cycle")
    for c in census.sorted_circuits():
        if not (c.q1_pairs and c.z_pairs):
            continue
        clean = 0
        for pair in c.z_pairs:
            cycle = pair.cycle()
            if relation_occurrences(cycle, census.relations) == [(0, pair.left)]:
                clean += 1
        if clean != 1:
            return False, VanishingWitness(
                c.key, "number of pairs whose cycle has no other relation is not 1", clean
            )
        if not c.is_p_prime(ch):
            return False, VanishingWitness(
                c.key, f"multiplicity {c.multiplicity} divisible by {ch.value}"
            )
    return True, None


def total_hh1(split, ch: CharSpec | int = 0) -> int:
    """Sum over connected components; raises InfiniteDimensional for infinite pieces."""
    from .basis import enumerate_basis
    from .circuits import classify

    total = 0
    for comp in split:
        b = enumerate_basis(comp)
        total += dim_hh1(classify(comp, b), ch).dimension
    return total
