"""Dimensions by exact linear algebra, independent of the circuit combinatorics.

* ``HH_1(A)``: homology of ``k(Z.B) -> k(Q1.B) -> k(Q0.B)`` with
  ``d0(a, b) = (t(a), a b) - (s(a), b a)`` and
  ``d1(a_n...a_1, b) = sum_i (a_i, a_{i-1}...a_1 b a_n...a_{i+1})``,
  terms with a zero second component dropped.
* ``HH^0(A) = Z(A)`` and ``HH^1(A)``: cochains ``Hom(P_n, A)`` for the
  minimal bimodule resolution in degrees 0, 1, 2, i.e. spaces
  ``(+)_u uAu``, ``(+)_a t(a)As(a)``, ``(+)_xi t(xi)As(xi)``.
* ``Hom_{A-A}(DA, A)`` and ``Alt(DA)``: a map ``phi`` is a |B| x |B| matrix
  ``M`` with ``phi(g*) = sum_d M[g, d] d``; bimodule linearity against every
  vertex and arrow is a linear system in the entries of ``M``, and ``Alt``
  adds ``M + M^T = 0``.

Every matrix has integer entries; ranks are taken over Q or GF(p).
"""

from __future__ import annotations

from dataclasses import dataclass

from .basis import PathBasis
from .circuits import CyclicPair, cyclic_pairs
from .fields import ExactField
from .linalg import SparseMatrix, rank
from .presentation import Path, vertex_path


def _arrow_paths(b: PathBasis) -> list[Path]:
    return [Path((a.id,), a.source, a.target) for a in b.presentation.arrows]


# ------------------------------------------------------------ homology


@dataclass
class ChainComplexSlice:
    z_b: list[CyclicPair]
    q1_b: list[CyclicPair]
    q0_b: list[CyclicPair]
    d1: SparseMatrix  # rows: Q1.B, columns: Z.B
    d0: SparseMatrix  # rows: Q0.B, columns: Q1.B

    def composite_is_zero(self) -> bool:
        return self.d0.matmul(self.d1).is_zero()


def build_chain_slice(p, b: PathBasis) -> ChainComplexSlice:
    z_b = cyclic_pairs("Z", "B", b)
    q1_b = cyclic_pairs("Q1", "B", b)
    q0_b = cyclic_pairs("Q0", "B", b)
    d0 = SparseMatrix.from_labels(q0_b, q1_b)
    for pair in q1_b:
        a, beta = pair
        first = b.mul(a, beta)
        if first is not None:
            d0.add_labeled(CyclicPair(vertex_path(a.target), first), pair, 1)
        second = b.mul(beta, a)
        if second is not None:
            d0.add_labeled(CyclicPair(vertex_path(a.source), second), pair, -1)
    d1 = SparseMatrix.from_labels(q1_b, z_b)
    pres = b.presentation
    for pair in z_b:
        xi, beta = pair
        arrows = xi.arrows
        n = len(arrows)
        # xi = a_n ... a_1 with a_1 traversed first, so a_i is arrows[n - i]
        for i in range(1, n + 1):
            a_i = arrows[n - i]
            after = arrows[n - i + 1 :]  # a_{i-1} ... a_1
            before = arrows[: n - i]  # a_n ... a_{i+1}
            word = after + beta.arrows + before
            if word:
                comp = Path(word, pres.arrow(word[-1]).source, pres.arrow(word[0]).target)
            else:
                comp = vertex_path(beta.source)
            if comp in b:
                a_path = Path((a_i,), pres.arrow(a_i).source, pres.arrow(a_i).target)
                d1.add_labeled(CyclicPair(a_path, comp), pair, 1)
    return ChainComplexSlice(z_b, q1_b, q0_b, d1, d0)


def hh1_homology_dim(slice_: ChainComplexSlice, field: ExactField | int = 0) -> int:
    ch = field.characteristic if isinstance(field, ExactField) else field
    kernel = len(slice_.q1_b) - rank(slice_.d0, ch)
    return kernel - rank(slice_.d1, ch)


# ----------------------------------------------------------- cohomology


@dataclass
class CochainSlice:
    c0: list[tuple[Path, Path]]  # (vertex u, cycle at u)
    c1: list[tuple[Path, Path]]  # (arrow a, path parallel to a)
    c2: list[tuple[Path, Path]]  # (relation xi, path parallel to xi)
    d0: SparseMatrix  # rows: c1, columns: c0
    d1: SparseMatrix  # rows: c2, columns: c1

    def composite_is_zero(self) -> bool:
        return self.d1.matmul(self.d0).is_zero()


def build_cochain_slice(p, b: PathBasis) -> CochainSlice:
    pres = b.presentation
    c0 = [(vertex_path(u), g) for u in pres.vertices for g in b.cycles_at(u)]
    arrows = _arrow_paths(b)
    c1 = [(a, beta) for a in arrows for beta in b.between(a.source, a.target)]
    c2 = [(xi, beta) for xi in pres.relations for beta in b.between(xi.source, xi.target)]
    d0 = SparseMatrix.from_labels(c1, c0)
    for u, g in c0:
        for a in arrows:
            # (d0 x)_a = a x_{s(a)} - x_{t(a)} a
            if a.source == u.source:
                prod = b.mul(a, g)
                if prod is not None:
                    d0.add_labeled((a, prod), (u, g), 1)
            if a.target == u.source:
                prod = b.mul(g, a)
                if prod is not None:
                    d0.add_labeled((a, prod), (u, g), -1)
    d1 = SparseMatrix.from_labels(c2, c1)
    arrow_of = {a.arrows[0]: a for a in arrows}
    for a, beta in c1:
        aid = a.arrows[0]
        for xi in pres.relations:
            w = xi.arrows
            for pos, x in enumerate(w):
                if x != aid:
                    continue
                # replace this occurrence of a in xi by beta
                word = w[:pos] + beta.arrows + w[pos + 1 :]
                if word:
                    path = Path(word, arrow_of[word[-1]].source, arrow_of[word[0]].target)
                else:
                    path = vertex_path(beta.source)
                if path in b:
                    d1.add_labeled((xi, path), (a, beta), 1)
    return CochainSlice(c0, c1, c2, d0, d1)


def hh0_cohomology_dim(cs: CochainSlice, field: ExactField | int = 0) -> int:
    ch = field.characteristic if isinstance(field, ExactField) else field
    return len(cs.c0) - rank(cs.d0, ch)


def hh1_cohomology_dim(p, b: PathBasis, field: ExactField | int = 0, cochains=None) -> int:
    ch = field.characteristic if isinstance(field, ExactField) else field
    cs = cochains or build_cochain_slice(p, b)
    return len(cs.c1) - rank(cs.d1, ch) - rank(cs.d0, ch)


# --------------------------------------------------------------- center


def center_system(b: PathBasis) -> SparseMatrix:
    """Rows: coefficients of ``x g - g x`` for generators g; columns: basis coordinates of x."""
    gens = [vertex_path(v) for v in b.presentation.vertices] + _arrow_paths(b)
    keys: dict = {}
    rows: list[dict[int, int]] = []

    def bump(key, j, v):
        i = keys.get(key)
        if i is None:
            i = keys[key] = len(rows)
            rows.append({})
        r = rows[i]
        nv = r.get(j, 0) + v
        if nv:
            r[j] = nv
        else:
            r.pop(j, None)

    for j, beta in enumerate(b.paths):
        for gi, g in enumerate(gens):
            right = b.mul(beta, g)
            if right is not None:
                bump((gi, right), j, 1)
            left = b.mul(g, beta)
            if left is not None:
                bump((gi, left), j, -1)
    return SparseMatrix.from_rows(rows, len(b))


def center_dim(b: PathBasis, field: ExactField | int = 0) -> int:
    ch = field.characteristic if isinstance(field, ExactField) else field
    m = center_system(b)
    return m.ncols - rank(m, ch)


# ------------------------------------------------------- Hom(DA, A), Alt


class BimoduleSystem:
    """Linear constraints on |B| x |B| matrices M for phi: DA -> A to be bilinear.

    The dual basis acts by ``x g* y = h*`` when ``g = y h x`` and 0 otherwise.
    Variable ``(i, j)`` is ``M[B[i], B[j]]`` at column ``i * |B| + j``.
    """

    def __init__(self, b: PathBasis):
        self.basis = b
        n = len(b)
        self.n = n
        idx = b.index
        pres = b.presentation
        rows: set[tuple] = set()

        def emit(entries: dict[int, int]):
            entries = {k: v for k, v in entries.items() if v}
            if entries:
                rows.add(tuple(sorted(entries.items())))

        paths = b.paths
        # vertices: phi(u g*) = u phi(g*) and phi(g* u) = phi(g*) u
        for u in pres.vertices:
            for i, g in enumerate(paths):
                left_src = 1 if g.source == u else 0
                right_tgt = 1 if g.target == u else 0
                for j, d in enumerate(paths):
                    var = i * n + j
                    emit({var: left_src - (1 if d.target == u else 0)})
                    emit({var: right_tgt - (1 if d.source == u else 0)})
        # arrows: phi(a g*) = a phi(g*) and phi(g* a) = phi(g*) a
        for arrow in pres.arrows:
            a = Path((arrow.id,), arrow.source, arrow.target)
            for i, g in enumerate(paths):
                # a g* = h* when g = h a
                h_left = None
                if g.arrows and g.arrows[-1] == arrow.id:
                    h_left = idx[Path(g.arrows[:-1], arrow.target, g.target)] if len(g.arrows) > 1 else idx[vertex_path(arrow.target)]
                # g* a = h* when g = a h
                h_right = None
                if g.arrows and g.arrows[0] == arrow.id:
                    h_right = idx[Path(g.arrows[1:], g.source, arrow.source)] if len(g.arrows) > 1 else idx[vertex_path(arrow.source)]
                for k, eps in enumerate(paths):
                    # coefficient of eps in phi(a g*) - a phi(g*)
                    entries: dict[int, int] = {}
                    if h_left is not None:
                        entries[h_left * n + k] = entries.get(h_left * n + k, 0) + 1
                    if eps.arrows and eps.arrows[0] == arrow.id:
                        d = idx[Path(eps.arrows[1:], eps.source, arrow.source)] if len(eps.arrows) > 1 else idx[vertex_path(arrow.source)]
                        entries[i * n + d] = entries.get(i * n + d, 0) - 1
                    emit(entries)
                    # coefficient of eps in phi(g* a) - phi(g*) a
                    entries = {}
                    if h_right is not None:
                        entries[h_right * n + k] = entries.get(h_right * n + k, 0) + 1
                    if eps.arrows and eps.arrows[-1] == arrow.id:
                        d = idx[Path(eps.arrows[:-1], arrow.target, eps.target)] if len(eps.arrows) > 1 else idx[vertex_path(arrow.target)]
                        entries[i * n + d] = entries.get(i * n + d, 0) - 1
                    emit(entries)
        self.hom_rows = [dict(r) for r in sorted(rows)]
        alt_rows = []
        for i in range(n):
            for j in range(i, n):
                if i == j:
                    alt_rows.append({i * n + i: 2})
                else:
                    alt_rows.append({i * n + j: 1, j * n + i: 1})
        self.alt_rows = alt_rows

    @property
    def nvars(self) -> int:
        return self.n * self.n

    def hom_matrix(self) -> SparseMatrix:
        return SparseMatrix.from_rows(self.hom_rows, self.nvars)

    def alt_matrix(self) -> SparseMatrix:
        return SparseMatrix.from_rows(self.hom_rows + self.alt_rows, self.nvars)

    def satisfied_by(self, m) -> bool:
        """Whether the dense |B| x |B| matrix ``m`` meets every linearity constraint."""
        flat = [int(x) for x in m.reshape(-1)]
        return all(sum(v * flat[c] for c, v in row.items()) == 0 for row in self.hom_rows)


def hom_and_alt_dims(b: PathBasis, field: ExactField | int = 0, system=None) -> tuple[int, int]:
    ch = field.characteristic if isinstance(field, ExactField) else field
    sys_ = system or BimoduleSystem(b)
    hom = sys_.nvars - rank(sys_.hom_matrix(), ch)
    alt = sys_.nvars - rank(sys_.alt_matrix(), ch)
    return hom, alt


def rank_over(m: SparseMatrix, field: ExactField | int = 0) -> int:
    ch = field.characteristic if isinstance(field, ExactField) else field
    return rank(m, ch)
