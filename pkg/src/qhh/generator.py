"""Small random and exhaustive monomial presentations for property tests.

Random quivers lean towards loops and 2-cycles so that strong and efficient
circuits actually show up.  Finiteness is reached by a repair loop: while
the avoidance automaton has a live cycle, a window of that cycle (of length
between 2 and the relation bound) becomes a new relation and superpaths are
dropped.  Instances whose basis exceeds ``max_basis`` are rejected.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterator
from dataclasses import dataclass

from .basis import build_automaton, enumerate_basis, is_finite_dimensional
from .presentation import (
    Arrow,
    Path,
    Presentation,
    ValidatedPresentation,
    is_tree_without_double_arrows,
    validate,
)


@dataclass(frozen=True)
class GenConfig:
    max_vertices: int = 4
    max_arrows: int = 6
    max_relation_length: int = 4
    relation_density: float = 0.5
    seed: int = 0
    require_finite: bool = True
    connected: bool = True
    max_basis: int | None = 60
    kind: str = "any"  # "any", "tree" or "nontree"
    max_attempts: int = 1000

    def __post_init__(self):
        if self.max_vertices < 1 or self.max_arrows < 0 or self.max_relation_length < 2:
            raise ValueError("bounds must be positive and relations have length >= 2")
        if not 0 <= self.relation_density <= 1:
            raise ValueError("relation_density must lie in [0, 1]")
        if self.kind not in ("any", "tree", "nontree"):
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.kind == "tree" and (self.max_vertices < 2 or self.max_arrows < 1):
            raise ValueError("trees need at least two vertices and one arrow")
        # with connected=False, kind="tree" yields forests (isolated vertices included)
        if self.kind == "nontree" and self.max_arrows < 1:
            raise ValueError("a non-tree needs at least one arrow")


def _random_quiver(rng: random.Random, cfg: GenConfig, name: str) -> Presentation:
    lo = 2 if cfg.kind == "tree" else 1
    hi = cfg.max_vertices
    if cfg.connected:
        # a spanning tree needs n - 1 arrows, a non-tree one more
        hi = min(hi, cfg.max_arrows + (1 if cfg.kind != "nontree" else 0))
    n = rng.randint(lo, max(lo, hi))
    vs = [str(i) for i in range(n)]
    edges: list[tuple[str, str]] = []
    if cfg.connected or cfg.kind == "tree":
        for i in range(1, n):
            j = rng.randrange(i)
            edges.append((vs[i], vs[j]) if rng.random() < 0.5 else (vs[j], vs[i]))
    if cfg.kind == "tree" and not cfg.connected:
        edges = [e for e in edges if rng.random() < 0.7]
    if cfg.kind != "tree":
        base = len(edges)
        target = rng.randint(base, max(base, cfg.max_arrows))
        if cfg.kind == "nontree":
            target = max(target, base + 1)
        while len(edges) < target:
            x = rng.random()
            if x < 0.3:
                v = rng.choice(vs)
                edges.append((v, v))
            elif x < 0.6 and edges:
                s, t = rng.choice(edges)
                edges.append((t, s))
            else:
                edges.append((rng.choice(vs), rng.choice(vs)))
    arrows = tuple(Arrow(f"a{k}", s, t) for k, (s, t) in enumerate(edges))
    q = Presentation(tuple(vs), arrows, (), name)
    if cfg.kind == "nontree" and is_tree_without_double_arrows(q):
        last = arrows[-1]
        q = Presentation(q.vertices, arrows[:-1] + (Arrow(last.id, last.source, last.source),), (), name)
    return q


def _random_walk(rng: random.Random, q: Presentation, length: int) -> Path | None:
    """Random path with ``length`` arrows, returned in composition order."""
    a = rng.choice(q.arrows)
    walk = [a]
    while len(walk) < length:
        outs = q.out_arrows(walk[-1].target)
        if not outs:
            return None
        walk.append(rng.choice(outs))
    return Path(tuple(x.id for x in reversed(walk)), walk[0].source, walk[-1].target)


def _is_factor(small: tuple, big: tuple) -> bool:
    n = len(small)
    return any(big[i : i + n] == small for i in range(len(big) - n + 1))


def minimalize(relations) -> list[Path]:
    """Deduplicate and drop every relation that contains a shorter one."""
    uniq = {r.arrows: r for r in relations}
    out: list[Path] = []
    for r in sorted(uniq.values(), key=lambda r: (r.length, r.arrows)):
        if not any(_is_factor(k.arrows, r.arrows) for k in out):
            out.append(r)
    return out


def _repair(rng: random.Random, q: Presentation, rels: list[Path], max_len: int) -> list[Path]:
    while True:
        cyc = build_automaton(q.with_relations(rels)).find_cycle()
        if cyc is None:
            return rels
        k = rng.randint(2, max_len)
        off = rng.randrange(len(cyc))
        window = [cyc[(off + i) % len(cyc)] for i in range(k)]
        new = q.path(list(reversed(window)))
        rels = minimalize(rels + [new])


def _random_relations(rng: random.Random, q: Presentation, cfg: GenConfig) -> list[Path]:
    if not q.arrows:
        return []
    budget = round(cfg.relation_density * len(q.arrows) * 2)
    rels = []
    for _ in range(rng.randint(0, max(budget, 0))):
        w = _random_walk(rng, q, rng.randint(2, cfg.max_relation_length))
        if w is not None:
            rels.append(w)
    return minimalize(rels)


def generate(cfg: GenConfig, count: int | None = None) -> Iterator[ValidatedPresentation]:
    """Deterministic stream of valid presentations; infinite unless ``count`` is given."""
    rng = random.Random(cfg.seed)
    produced = 0
    while count is None or produced < count:
        for _ in range(cfg.max_attempts):
            q = _random_quiver(rng, cfg, f"g{cfg.seed}_{produced}")
            rels = _random_relations(rng, q, cfg)
            if cfg.require_finite:
                rels = _repair(rng, q, rels, cfg.max_relation_length)
            p = validate(q.with_relations(rels))
            if cfg.max_basis is not None and cfg.require_finite:
                if len(enumerate_basis(p)) > cfg.max_basis:
                    continue
            break
        else:
            raise RuntimeError(f"no instance within {cfg.max_attempts} attempts")
        produced += 1
        yield p


def all_paths(q: Presentation, min_len: int, max_len: int) -> list[Path]:
    out = []
    frontier = [[a] for a in q.arrows]
    for length in range(1, max_len + 1):
        if length >= min_len:
            for w in frontier:
                out.append(Path(tuple(x.id for x in reversed(w)), w[0].source, w[-1].target))
        frontier = [w + [b] for w in frontier for b in q.out_arrows(w[-1].target)]
    return out


def exhaustive(
    quiver: Presentation, max_relation_length: int, require_finite: bool = True
) -> Iterator[ValidatedPresentation]:
    """Every minimal relation set of paths with lengths 2..max_relation_length."""
    cands = sorted(all_paths(quiver, 2, max_relation_length), key=lambda r: (r.length, r.arrows))

    def rec(i: int, chosen: list[Path]):
        if i == len(cands):
            yield list(chosen)
            return
        yield from rec(i + 1, chosen)
        c = cands[i]
        if not any(_is_factor(k.arrows, c.arrows) for k in chosen):
            chosen.append(c)
            yield from rec(i + 1, chosen)
            chosen.pop()

    for k, rels in enumerate(rec(0, [])):
        p = quiver.with_relations(rels)
        if require_finite and not is_finite_dimensional(build_automaton(p)):
            continue
        yield validate(
            Presentation(p.vertices, p.arrows, p.relations, f"{quiver.name}#{k}")
        )


def two_nilpotent(quiver: Presentation) -> ValidatedPresentation:
    """``Z`` = all paths of length 2, so the radical squares to zero."""
    return validate(quiver.with_relations(all_paths(quiver, 2, 2)))


def random_quiver(
    seed: int, max_vertices: int = 4, max_arrows: int = 6, loops: bool = True, min_vertices: int = 1
) -> Presentation:
    """A connected random quiver with no relations; ``loops=False`` forbids loops."""
    rng = random.Random(seed)
    cfg = GenConfig(max_vertices=max_vertices, max_arrows=max_arrows, seed=seed)
    for _ in range(1000):
        q = _random_quiver(rng, cfg, f"q{seed}")
        if len(q.vertices) < min_vertices:
            continue
        if loops or all(a.source != a.target for a in q.arrows):
            return q
    raise RuntimeError("could not draw a loop-free quiver")


@dataclass
class Coverage:
    total: int = 0
    s_positive: int = 0
    e_positive: int = 0
    e_differs_from_e_p_prime: int = 0
    sym_positive: int = 0

    def buckets(self) -> dict:
        return {
            "s>0": self.s_positive,
            "e>0": self.e_positive,
            "e!=e_p'": self.e_differs_from_e_p_prime,
            "sym>0": self.sym_positive,
        }


def coverage(instances, primes=(2, 3, 5)) -> Coverage:
    from .alt import neat_classes
    from .circuits import classify

    cov = Coverage()
    for p in instances:
        b = enumerate_basis(p)
        census, table = classify(p, b), neat_classes(b)
        cov.total += 1
        cov.s_positive += census.s > 0
        cov.e_positive += census.e > 0
        cov.e_differs_from_e_p_prime += any(census.e != census.e_p_prime(q) for q in primes)
        cov.sym_positive += table.sym > 0
    return cov


def take(cfg: GenConfig, n: int) -> list[ValidatedPresentation]:
    return list(itertools.islice(generate(cfg), n))
