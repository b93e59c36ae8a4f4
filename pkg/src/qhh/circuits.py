"""Cyclic pairs, circuits (rotation classes of cycles) and their classification.

A circuit is only ever discovered through a concrete finite pair set
(``Q_0 . B``, ``Q_1 . B``, ``Z . B``), never by enumerating all cycles, so the
census is finite even though the quiver may carry infinitely many cycles.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import NamedTuple

from .basis import PathBasis
from .errors import NotACycle
from .fields import CharSpec, as_char
from .presentation import Path, Presentation, vertex_path


class CyclicPair(NamedTuple):
    left: Path
    right: Path

    def cycle(self) -> Path:
        """``left right`` (right traversed first)."""
        return self.left * self.right

    def flip(self) -> CyclicPair:
        return CyclicPair(self.right, self.left)

    def __str__(self):
        return f"({self.left}, {self.right})"


def path_set(tag: str, b: PathBasis) -> list[Path]:
    p = b.presentation
    if tag == "Q0":
        return [vertex_path(v) for v in p.vertices]
    if tag == "Q1":
        return [Path((a.id,), a.source, a.target) for a in p.arrows]
    if tag == "Z":
        return list(p.relations)
    if tag == "B":
        return list(b.paths)
    raise ValueError(f"unknown path set {tag!r}")


def cyclic_pairs(x: str, y: str, b: PathBasis) -> list[CyclicPair]:
    """All ``(alpha, beta)`` with ``alpha`` in X, ``beta`` in Y and endpoints matching both ways."""
    out = []
    if y == "B":
        for alpha in path_set(x, b):
            for beta in b.between(alpha.target, alpha.source):
                out.append(CyclicPair(alpha, beta))
        return out
    ys = path_set(y, b)
    for alpha in path_set(x, b):
        for beta in ys:
            if beta.target == alpha.source and alpha.target == beta.source:
                out.append(CyclicPair(alpha, beta))
    return out


# --------------------------------------------------------- rotation classes


def least_rotation(seq: Sequence) -> int:
    """Booth's algorithm: start index of the lexicographically least rotation."""
    s = list(seq) * 2
    n = len(s)
    fail = [-1] * n
    k = 0
    for j in range(1, n):
        sj = s[j]
        i = fail[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = fail[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    return k


def canonical_word(word: Sequence[str]) -> tuple[str, ...]:
    w = tuple(word)
    if not w:
        return w
    k = least_rotation(w)
    return w[k:] + w[:k]


class CircuitKey(NamedTuple):
    word: tuple[str, ...]
    vertex: str | None  # set only for trivial circuits

    @property
    def is_trivial(self) -> bool:
        return not self.word

    def __str__(self):
        return " ".join(self.word) if self.word else f"[{self.vertex}]"


def circuit_of(cycle: Path) -> CircuitKey:
    if not cycle.is_cycle:
        raise NotACycle(f"{cycle} is not a cycle")
    if cycle.is_trivial:
        return CircuitKey((), cycle.source)
    return CircuitKey(canonical_word(cycle.arrows), None)


def period_multiplicity(word: Sequence[str]) -> tuple[int, int]:
    w = tuple(word)
    n = len(w)
    if n == 0:
        raise ValueError("trivial circuits have no period")
    for l in range(1, n + 1):
        if n % l == 0 and w[l:] + w[:l] == w:
            return l, n // l
    raise AssertionError("unreachable")


def rotations(word: Sequence[str]) -> list[tuple[str, ...]]:
    """Distinct rotations of a cyclic word (one per cycle in the circuit)."""
    w = tuple(word)
    l, _ = period_multiplicity(w)
    return [w[i:] + w[:i] for i in range(l)]


def relation_occurrences(path: Path, relations) -> list[tuple[int, Path]]:
    """Positions (index into ``path.arrows``) where a relation occurs as a subpath."""
    out = []
    arr = path.arrows
    for r in relations:
        n = r.length
        for i in range(len(arr) - n + 1):
            if arr[i : i + n] == r.arrows:
                out.append((i, r))
    return out


# ---------------------------------------------------------------- census


@dataclass
class Circuit:
    key: CircuitKey
    length: int
    period: int
    multiplicity: int
    strong: bool = False
    useful: bool = False
    efficient: bool = False
    q0_pairs: list = field(default_factory=list)
    q1_pairs: list = field(default_factory=list)
    z_pairs: list = field(default_factory=list)
    members_in_W: list = field(default_factory=list)

    @property
    def word(self):
        return self.key.word

    @property
    def trivial(self) -> bool:
        return self.key.is_trivial

    @property
    def w(self) -> int:
        return len(self.members_in_W)

    def is_p_prime(self, ch: CharSpec | int) -> bool:
        return not as_char(ch).divides(self.multiplicity)


@dataclass
class CircuitCensus:
    circuits: dict
    n_vertices: int
    q0_b: int
    q1_b: int
    z_b: int
    W: list
    relations: tuple = ()

    @property
    def strong(self) -> list[Circuit]:
        return [c for c in self.circuits.values() if c.strong and not c.trivial]

    @property
    def efficient(self) -> list[Circuit]:
        return [c for c in self.circuits.values() if c.efficient]

    @property
    def s(self) -> int:
        return len(self.strong)

    @property
    def e(self) -> int:
        return len(self.efficient)

    def e_p_prime(self, ch: CharSpec | int) -> int:
        ch = as_char(ch)
        return sum(1 for c in self.efficient if c.is_p_prime(ch))

    @property
    def w(self) -> int:
        return len(self.W)

    def sorted_circuits(self) -> list[Circuit]:
        return sorted(
            self.circuits.values(),
            key=lambda c: (c.length, c.key.word, c.key.vertex or ""),
        )


def _new_circuit(key: CircuitKey, p: Presentation, b: PathBasis) -> Circuit:
    if key.is_trivial:
        return Circuit(key, 0, 0, 1, strong=True)
    l, m = period_multiplicity(key.word)
    strong = all(p.path(rot, check=False) in b for rot in rotations(key.word))
    return Circuit(key, len(key.word), l, m, strong=strong)


def enumerate_W(p: Presentation, b: PathBasis) -> list[tuple[Path, CircuitKey]]:
    """Cycles ``xi alpha`` (xi in Z, alpha in B) whose only relation occurrence is xi at the end."""
    out = []
    for pair in cyclic_pairs("Z", "B", b):
        gamma = pair.cycle()
        occ = relation_occurrences(gamma, p.relations)
        if occ == [(0, pair.left)]:
            out.append((gamma, circuit_of(gamma)))
    return out


def classify(p: Presentation, b: PathBasis) -> CircuitCensus:
    circuits: dict[CircuitKey, Circuit] = {}

    def get(key):
        c = circuits.get(key)
        if c is None:
            c = circuits[key] = _new_circuit(key, p, b)
        return c

    q0 = cyclic_pairs("Q0", "B", b)
    q1 = cyclic_pairs("Q1", "B", b)
    zb = cyclic_pairs("Z", "B", b)
    for pair in q0:
        get(circuit_of(pair.right)).q0_pairs.append(pair)
    for pair in q1:
        get(circuit_of(pair.cycle())).q1_pairs.append(pair)
    for pair in zb:
        get(circuit_of(pair.cycle())).z_pairs.append(pair)
    W = enumerate_W(p, b)
    for gamma, key in W:
        get(key).members_in_W.append(gamma)
    for c in circuits.values():
        c.useful = bool(c.q1_pairs)
        c.efficient = c.useful and not c.strong and bool(c.z_pairs)
    return CircuitCensus(
        circuits, len(p.vertices), len(q0), len(q1), len(zb), W, tuple(p.relations)
    )
