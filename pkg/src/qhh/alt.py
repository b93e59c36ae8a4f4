"""Neat cyclic pairs, their equivalence classes, and ``dim Alt(DA)``.

Pairs ``(alpha, beta)`` in ``B . B`` are identified by the shift moves

    (a alpha, beta) ~ (alpha, beta a)        (alpha b, beta) ~ (alpha, b beta)

for arrows ``a``, ``b``.  A move exists only when both pairs lie in
``B . B``.  Each neat class N gives the bimodule map ``psi_N`` whose matrix is
the indicator of N; flipping pairs is an involution on classes, and
``dim Alt(DA)`` is ``(r - sym)/2`` away from characteristic 2 and
``(r + sym)/2`` in characteristic 2, where ``r`` counts neat classes and
``sym`` the flip-fixed ones.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._dsu import DisjointSet
from .basis import PathBasis
from .circuits import CircuitKey, CyclicPair, circuit_of, cyclic_pairs
from .errors import NotNeat
from .fields import CharSpec, as_char
from .presentation import Path, vertex_path


def drop_last(p: Path, b: PathBasis) -> Path:
    """Remove the arrow traversed last (the leftmost one)."""
    if len(p.arrows) == 1:
        return vertex_path(p.source)
    nxt = b.presentation.arrow(p.arrows[1])
    return Path(p.arrows[1:], p.source, nxt.target)


def drop_first(p: Path, b: PathBasis) -> Path:
    """Remove the arrow traversed first (the rightmost one)."""
    if len(p.arrows) == 1:
        return vertex_path(p.target)
    prev = b.presentation.arrow(p.arrows[-2])
    return Path(p.arrows[:-1], prev.source, p.target)


def _arrow_path(a) -> Path:
    return Path((a.id,), a.source, a.target)


def is_neat(pair: CyclicPair, b: PathBasis) -> bool:
    alpha, beta = pair
    for a in b.presentation.arrows:
        ap = _arrow_path(a)
        # i) extensions of beta must use the matching end arrow of alpha
        if b.mul(beta, ap) is not None and not (alpha.arrows and alpha.arrows[0] == a.id):
            return False
        if b.mul(ap, beta) is not None and not (alpha.arrows and alpha.arrows[-1] == a.id):
            return False
        # ii) same with the roles swapped
        if b.mul(alpha, ap) is not None and not (beta.arrows and beta.arrows[0] == a.id):
            return False
        if b.mul(ap, alpha) is not None and not (beta.arrows and beta.arrows[-1] == a.id):
            return False
    return True


@dataclass(frozen=True)
class PairClass:
    id: int
    members: tuple[CyclicPair, ...]
    neat: bool
    circuit: CircuitKey
    flip: int

    @property
    def symmetric(self) -> bool:
        return self.flip == self.id

    @property
    def representative(self) -> CyclicPair:
        return self.members[0]


@dataclass(frozen=True)
class NeatClassTable:
    classes: tuple[PairClass, ...]
    class_of: dict

    @property
    def neat_classes(self) -> list[PairClass]:
        return [c for c in self.classes if c.neat]

    @property
    def r(self) -> int:
        return len(self.neat_classes)

    @property
    def sym(self) -> int:
        return sum(1 for c in self.neat_classes if c.symmetric)

    def r_by_circuit(self) -> dict:
        out: dict = {}
        for c in self.neat_classes:
            out[c.circuit] = out.get(c.circuit, 0) + 1
        return out


def _moves(pair: CyclicPair, b: PathBasis):
    """Neighbours reached by shortening ``alpha`` at either end."""
    alpha, beta = pair
    if not alpha.arrows:
        return
    p = b.presentation
    a = _arrow_path(p.arrow(alpha.arrows[0]))
    moved = b.mul(beta, a)
    if moved is not None:
        yield CyclicPair(drop_last(alpha, b), moved)
    c = _arrow_path(p.arrow(alpha.arrows[-1]))
    moved = b.mul(c, beta)
    if moved is not None:
        yield CyclicPair(drop_first(alpha, b), moved)


def neat_classes(b: PathBasis) -> NeatClassTable:
    pairs = cyclic_pairs("B", "B", b)
    dsu = DisjointSet(pairs)
    for pair in pairs:
        for other in _moves(pair, b):
            dsu.union(pair, other)
    groups = sorted(
        (sorted(g, key=lambda q: (q.left.sort_key(), q.right.sort_key())) for g in dsu.groups().values()),
        key=lambda g: (g[0].left.sort_key(), g[0].right.sort_key()),
    )
    class_of = {}
    for i, g in enumerate(groups):
        for q in g:
            class_of[q] = i
    classes = []
    for i, g in enumerate(groups):
        rep = g[0]
        classes.append(
            PairClass(
                id=i,
                members=tuple(g),
                neat=all(is_neat(q, b) for q in g),
                circuit=circuit_of(rep.cycle()),
                flip=class_of[rep.flip()],
            )
        )
    return NeatClassTable(tuple(classes), class_of)


def dim_alt(table: NeatClassTable, ch: CharSpec | int = 0) -> int:
    ch = as_char(ch)
    r, sym = table.r, table.sym
    if ch.value == 2:
        return (r + sym) // 2
    return (r - sym) // 2


def dim_hom_da_a(table: NeatClassTable) -> int:
    return table.r


def psi_matrix(cls: PairClass, b: PathBasis) -> np.ndarray:
    """Matrix of ``psi_N`` with rows indexed by the dual basis and columns by B."""
    if not cls.neat:
        raise NotNeat(f"class of {cls.representative} contains non-neat pairs")
    m = np.zeros((len(b), len(b)), dtype=np.int64)
    for alpha, beta in cls.members:
        m[b.index[alpha], b.index[beta]] = 1
    return m
