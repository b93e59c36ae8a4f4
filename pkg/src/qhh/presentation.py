"""Quiver presentations ``(Q, Z)`` of monomial algebras ``kQ/<Z>``.

Paths are written in composition order, the usual algebraic convention:
``a3 a2 a1 a0`` traverses ``a0`` first and ``a3`` last.  The file format and
every public function use this order; there is no switch to flip it.

File format (UTF-8, line oriented, ``#`` starts a comment)::

    quiver <name>
    vertex <id> [<id> ...]
    arrow <id> <source-vertex> <target-vertex>
    relation <arrow-id> <arrow-id> ...

Exactly one ``quiver`` line per file; blank lines are ignored.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from ._dsu import DisjointSet
from .errors import (
    DuplicateRelation,
    NonComposableRelation,
    NonMinimalZ,
    PresentationSyntaxError,
    RelationTooShort,
)


@dataclass(frozen=True, slots=True)
class Arrow:
    id: str
    source: str
    target: str


@dataclass(frozen=True, slots=True)
class Path:
    """A path ``a_l ... a_1``; ``arrows[0]`` is traversed last.

    A trivial path has ``arrows == ()`` and ``source == target``.
    """

    arrows: tuple[str, ...]
    source: str
    target: str

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    @property
    def is_cycle(self) -> bool:
        return self.source == self.target

    def __mul__(self, other: Path) -> Path:
        """Concatenation ``self other``: ``other`` is traversed first."""
        if other.target != self.source:
            raise ValueError(f"cannot compose {self} after {other}")
        if not other.arrows:
            return self
        if not self.arrows:
            return other
        return Path(self.arrows + other.arrows, other.source, self.target)

    def __str__(self) -> str:
        return " ".join(self.arrows) if self.arrows else self.source

    def sort_key(self):
        return (len(self.arrows), self.source, self.arrows)


def vertex_path(v: str) -> Path:
    return Path((), v, v)


@dataclass(frozen=True)
class Presentation:
    """Quiver plus relation set; structurally consistent but not yet validated."""

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    relations: tuple[Path, ...] = ()
    name: str = "Q"
    _arrow_map: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_arrow_map", {a.id: a for a in self.arrows})

    @classmethod
    def build(
        cls,
        vertices: Iterable[str],
        arrows: Iterable[tuple[str, str, str]],
        relations: Iterable[str | Sequence[str]] = (),
        name: str = "Q",
    ) -> Presentation:
        """Convenience constructor; relations are strings like ``"a b"`` or id sequences."""
        arrow_objs = tuple(Arrow(*a) for a in arrows)
        base = cls(tuple(vertices), arrow_objs, (), name)
        rels = []
        for r in relations:
            ids = r.split() if isinstance(r, str) else list(r)
            rels.append(base.path(ids, check=False))
        return cls(base.vertices, arrow_objs, tuple(rels), name)

    def arrow(self, arrow_id: str) -> Arrow:
        return self._arrow_map[arrow_id]

    def has_arrow(self, arrow_id: str) -> bool:
        return arrow_id in self._arrow_map

    def path(self, arrow_ids: Sequence[str], check: bool = True) -> Path:
        """Build the path ``arrow_ids[0] ... arrow_ids[-1]`` (last id traversed first)."""
        ids = tuple(arrow_ids)
        if not ids:
            raise ValueError("use vertex_path() for trivial paths")
        arrows = [self._arrow_map[i] for i in ids]
        if check:
            for later, earlier in zip(arrows, arrows[1:]):
                if earlier.target != later.source:
                    raise ValueError(
                        f"arrows {earlier.id} and {later.id} are not composable"
                    )
        return Path(ids, arrows[-1].source, arrows[0].target)

    def is_composable(self, p: Path) -> bool:
        arrows = [self._arrow_map[i] for i in p.arrows]
        return all(e.target == l.source for l, e in zip(arrows, arrows[1:]))

    def out_arrows(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def in_arrows(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.target == v]

    def with_relations(self, relations: Iterable[Path]) -> Presentation:
        return Presentation(self.vertices, self.arrows, tuple(relations), self.name)


class ValidatedPresentation(Presentation):
    """A presentation that passed :func:`validate`."""


# ---------------------------------------------------------------- parsing

_KEYWORDS = ("quiver", "vertex", "arrow", "relation")


def _tokens(line: str) -> list[tuple[str, int]]:
    out = []
    i, n = 0, len(line)
    while i < n:
        if line[i].isspace():
            i += 1
            continue
        j = i
        while j < n and not line[j].isspace():
            j += 1
        out.append((line[i:j], i + 1))
        i = j
    return out


def parse_presentation(text: str) -> Presentation:
    """Parse the line-oriented presentation format.

    Raises :class:`PresentationSyntaxError` carrying line and column for
    unknown keywords, undeclared references and duplicate ids.
    """
    name = None
    vertices: list[str] = []
    seen_vertices: dict[str, int] = {}
    arrows: list[Arrow] = []
    arrow_line: dict[str, int] = {}
    pending_arrows = []
    pending_relations = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = _tokens(line)
        if not toks:
            continue
        (kw, col), args = toks[0], toks[1:]
        if kw not in _KEYWORDS:
            raise PresentationSyntaxError(f"unknown keyword {kw!r}", lineno, col)
        if kw == "quiver":
            if name is not None:
                raise PresentationSyntaxError("more than one quiver in file", lineno, col)
            if len(args) != 1:
                raise PresentationSyntaxError("expected: quiver <name>", lineno, col)
            name = args[0][0]
        elif kw == "vertex":
            if not args:
                raise PresentationSyntaxError("vertex line declares nothing", lineno, col)
            for vid, vcol in args:
                if vid in seen_vertices:
                    raise PresentationSyntaxError(
                        f"duplicate vertex id {vid!r}", lineno, vcol
                    )
                seen_vertices[vid] = lineno
                vertices.append(vid)
        elif kw == "arrow":
            if len(args) != 3:
                raise PresentationSyntaxError(
                    "expected: arrow <id> <source> <target>", lineno, col
                )
            (aid, acol), src, tgt = args
            if aid in arrow_line:
                raise PresentationSyntaxError(f"duplicate arrow id {aid!r}", lineno, acol)
            arrow_line[aid] = lineno
            pending_arrows.append((lineno, aid, src, tgt))
        else:
            if not args:
                raise PresentationSyntaxError("relation lists no arrows", lineno, col)
            pending_relations.append((lineno, args))

    if name is None:
        raise PresentationSyntaxError("missing 'quiver <name>' line", 1, 1)

    for lineno, aid, (src, scol), (tgt, tcol) in pending_arrows:
        for vid, vcol in ((src, scol), (tgt, tcol)):
            if vid not in seen_vertices:
                raise PresentationSyntaxError(
                    f"arrow {aid!r} references undeclared vertex {vid!r}", lineno, vcol
                )
        if aid in seen_vertices:
            raise PresentationSyntaxError(
                f"id {aid!r} used for both a vertex and an arrow", lineno, 1
            )
        arrows.append(Arrow(aid, src, tgt))

    base = Presentation(tuple(vertices), tuple(arrows), (), name)
    relations = []
    for lineno, args in pending_relations:
        for aid, acol in args:
            if not base.has_arrow(aid):
                raise PresentationSyntaxError(
                    f"relation references undeclared arrow {aid!r}", lineno, acol
                )
        relations.append(base.path([a for a, _ in args], check=False))
    return Presentation(base.vertices, base.arrows, tuple(relations), name)


def serialize_presentation(p: Presentation) -> str:
    lines = [f"quiver {p.name}"]
    if p.vertices:
        lines.append("vertex " + " ".join(p.vertices))
    lines.extend(f"arrow {a.id} {a.source} {a.target}" for a in p.arrows)
    lines.extend("relation " + " ".join(r.arrows) for r in p.relations)
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------- validation


def _is_subword(small: tuple, big: tuple) -> bool:
    n, m = len(small), len(big)
    return any(big[i : i + n] == small for i in range(m - n + 1))


def validate(p: Presentation) -> ValidatedPresentation:
    """Check composability, length >= 2, no duplicates, and minimality of Z."""
    seen = set()
    for r in p.relations:
        if not p.is_composable(r):
            raise NonComposableRelation(f"relation {r} is not a path in the quiver")
        if r.length < 2:
            raise RelationTooShort(f"relation {r} has length {r.length} < 2")
        if r.arrows in seen:
            raise DuplicateRelation(f"relation {r} listed twice")
        seen.add(r.arrows)
    rels = sorted(p.relations, key=lambda r: r.length)
    for i, small in enumerate(rels):
        for big in rels[i + 1 :]:
            if big.length > small.length and _is_subword(small.arrows, big.arrows):
                raise NonMinimalZ(small, big)
    return ValidatedPresentation(p.vertices, p.arrows, p.relations, p.name)


# ------------------------------------------------------------- structure


@dataclass(frozen=True)
class ComponentSplit:
    components: tuple[ValidatedPresentation, ...]

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)


def connected_components(p: ValidatedPresentation) -> ComponentSplit:
    """Split along connected components of the underlying undirected graph."""
    dsu = DisjointSet(p.vertices)
    for a in p.arrows:
        dsu.union(a.source, a.target)
    order: dict[str, int] = {}
    for v in p.vertices:
        order.setdefault(dsu.find(v), len(order))
    buckets: list[tuple[list, list, list]] = [([], [], []) for _ in order]
    for v in p.vertices:
        buckets[order[dsu.find(v)]][0].append(v)
    for a in p.arrows:
        buckets[order[dsu.find(a.source)]][1].append(a)
    for r in p.relations:
        buckets[order[dsu.find(r.source)]][2].append(r)
    if len(buckets) == 1:
        return ComponentSplit((p,))
    comps = tuple(
        ValidatedPresentation(tuple(vs), tuple(arr), tuple(rel), f"{p.name}[{i}]")
        for i, (vs, arr, rel) in enumerate(buckets)
    )
    return ComponentSplit(comps)


def is_tree_without_double_arrows(p: Presentation) -> bool:
    """True iff every component's underlying multigraph is a tree.

    A tree has no loops and no two arrows with the same unordered endpoints,
    so both conditions are checked explicitly and then with an edge count.
    """
    pairs = set()
    for a in p.arrows:
        if a.source == a.target:
            return False
        key = frozenset((a.source, a.target))
        if key in pairs:
            return False
        pairs.add(key)
    dsu = DisjointSet(p.vertices)
    for a in p.arrows:
        if dsu.find(a.source) == dsu.find(a.target):
            return False
        dsu.union(a.source, a.target)
    return True
