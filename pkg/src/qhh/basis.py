"""The path basis ``B`` of ``kQ/<Z>``: all paths with no relation as a subpath.

Z-avoidance is decided by a deterministic automaton over the arrow alphabet
(Aho-Corasick with failure links).  Paths are fed to it in traversal order,
i.e. ``reversed(path.arrows)``.  Finite dimensionality is the absence of a
cycle among reachable live states, so :class:`InfiniteDimensional` is a
definite answer and no length cutoff is ever used.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import InfiniteDimensional
from .presentation import Path, Presentation, vertex_path

ROOT = 0


class AvoidanceAutomaton:
    """States are ``(vertex, node)``; ``node`` indexes the longest suffix read so
    far that is a proper prefix (in traversal order) of some relation."""

    def __init__(self, p: Presentation):
        self.presentation = p
        self.children: list[dict[str, int]] = [{}]
        self.word: list[tuple[str, ...]] = [()]  # traversal order
        self.terminal = [False]
        for r in p.relations:
            node = ROOT
            for a in reversed(r.arrows):
                nxt = self.children[node].get(a)
                if nxt is None:
                    nxt = len(self.children)
                    self.children[node][a] = nxt
                    self.children.append({})
                    self.word.append(self.word[node] + (a,))
                    self.terminal.append(False)
                node = nxt
            self.terminal[node] = True

        n = len(self.children)
        self.fail = [ROOT] * n
        self.dead = list(self.terminal)
        queue = deque(self.children[ROOT].values())
        while queue:
            node = queue.popleft()
            for a, child in self.children[node].items():
                f = self.fail[node]
                while f != ROOT and a not in self.children[f]:
                    f = self.fail[f]
                cand = self.children[f].get(a, ROOT)
                self.fail[child] = cand if cand != child else ROOT
                self.dead[child] = self.dead[child] or self.dead[self.fail[child]]
                queue.append(child)
        self._delta: dict[tuple[int, str], int] = {}

    def delta(self, node: int, arrow_id: str) -> int:
        key = (node, arrow_id)
        hit = self._delta.get(key)
        if hit is not None:
            return hit
        n = node
        while n != ROOT and arrow_id not in self.children[n]:
            n = self.fail[n]
        res = self.children[n].get(arrow_id, ROOT)
        self._delta[key] = res
        return res

    def start(self, v: str) -> tuple[str, int]:
        return (v, ROOT)

    def step(self, state: tuple[str, int], arrow_id: str) -> tuple[str, int] | None:
        """Next state after traversing ``arrow_id``; None if composability fails or Z is hit."""
        v, node = state
        a = self.presentation.arrow(arrow_id)
        if a.source != v:
            return None
        nxt = self.delta(node, arrow_id)
        if self.dead[nxt]:
            return None
        return (a.target, nxt)

    def transitions(self, state):
        for a in self.presentation.out_arrows(state[0]):
            nxt = self.step(state, a.id)
            if nxt is not None:
                yield a.id, nxt

    def suffix(self, state) -> tuple[str, ...]:
        """The tracked relation prefix, in composition order."""
        return tuple(reversed(self.word[state[1]]))

    def accepts(self, path: Path) -> bool:
        state = self.start(path.source)
        for a in reversed(path.arrows):
            state = self.step(state, a)
            if state is None:
                return False
        return True

    def live_states(self) -> set:
        seen = set()
        stack = [self.start(v) for v in self.presentation.vertices]
        while stack:
            s = stack.pop()
            if s in seen:
                continue
            seen.add(s)
            stack.extend(n for _, n in self.transitions(s))
        return seen

    def find_cycle(self) -> list[str] | None:
        """Arrow ids (traversal order) of a cycle among live states, or None."""
        WHITE, GREY, BLACK = 0, 1, 2
        color: dict = {}
        for v in self.presentation.vertices:
            root = self.start(v)
            if color.get(root, WHITE) != WHITE:
                continue
            color[root] = GREY
            stack = [(root, iter(list(self.transitions(root))))]
            trail: list[str] = []
            while stack:
                state, it = stack[-1]
                advanced = False
                for a, nxt in it:
                    c = color.get(nxt, WHITE)
                    if c == GREY:
                        # walk back along the DFS stack to nxt
                        idx = next(i for i, (s, _) in enumerate(stack) if s == nxt)
                        return trail[idx:] + [a]
                    if c == WHITE:
                        color[nxt] = GREY
                        stack.append((nxt, iter(list(self.transitions(nxt)))))
                        trail.append(a)
                        advanced = True
                        break
                if not advanced:
                    color[state] = BLACK
                    stack.pop()
                    if trail:
                        trail.pop()
        return None


def build_automaton(p: Presentation) -> AvoidanceAutomaton:
    return AvoidanceAutomaton(p)


def is_finite_dimensional(aut: AvoidanceAutomaton) -> bool:
    return aut.find_cycle() is None


@dataclass(frozen=True)
class PathBasis:
    presentation: Presentation
    paths: tuple[Path, ...]
    index: dict = field(repr=False)
    by_endpoints: dict = field(repr=False)
    by_length: dict = field(repr=False)
    max_length: int = 0

    def __len__(self):
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)

    def __contains__(self, path: Path) -> bool:
        return path in self.index

    def between(self, source: str, target: str) -> list[Path]:
        """Basis paths from ``source`` to ``target``."""
        return self.by_endpoints.get((source, target), [])

    def cycles_at(self, v: str) -> list[Path]:
        return self.by_endpoints.get((v, v), [])

    def mul(self, alpha: Path, beta: Path) -> Path | None:
        """``alpha beta`` in A: the basis path, or None when it is zero."""
        if beta.target != alpha.source:
            return None
        prod = alpha * beta
        return prod if prod in self.index else None

    def positive(self) -> list[Path]:
        return [b for b in self.paths if b.arrows]


def enumerate_basis(p: Presentation, aut: AvoidanceAutomaton | None = None) -> PathBasis:
    aut = aut or build_automaton(p)
    cycle = aut.find_cycle()
    if cycle is not None:
        word = " ".join(reversed(cycle))
        raise InfiniteDimensional(
            f"{p.name}: the cycle {word} can be repeated forever without hitting a relation",
            cycle=tuple(reversed(cycle)),
        )
    found: list[Path] = []
    for v in p.vertices:
        stack = [(vertex_path(v), aut.start(v))]
        while stack:
            path, state = stack.pop()
            found.append(path)
            for a, nxt in aut.transitions(state):
                arrow = p.arrow(a)
                stack.append((Path((a,) + path.arrows, path.source, arrow.target), nxt))
    found.sort(key=Path.sort_key)
    index = {q: i for i, q in enumerate(found)}
    by_endpoints: dict = {}
    by_length: dict = {}
    for q in found:
        by_endpoints.setdefault((q.source, q.target), []).append(q)
        by_length.setdefault(q.length, []).append(q)
    return PathBasis(
        p,
        tuple(found),
        index,
        by_endpoints,
        by_length,
        max(by_length) if by_length else 0,
    )


def is_nonzero(path: Path, b: PathBasis) -> bool:
    """Whether ``path`` survives in A.  B holds every nonzero path, so this is membership."""
    return path in b
