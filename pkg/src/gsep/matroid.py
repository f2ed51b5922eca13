"""Regular matroids given by full-rank weakly unimodular matrices.

Ground elements are addressed by 0-based column index throughout the
library.  ``RegularRep.ground_labels`` carries the user-facing names (1..n by
default, original edge numbers for graph input) and is what the CLI prints.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Optional, Sequence

from .errors import (
    InvalidArgumentError,
    NotABasisError,
    NotStandardFormError,
    ParseError,
    RankError,
    UnimodularityError,
    ZeroRankError,
)
from .linalg import IntMatrix, column_rank, det, rank, solve_integral, wu_witness
from .vectors import SIGNED_CIRCUIT, SignedVector


@dataclass(frozen=True, eq=False)
class RegularRep:
    """A validated full-rank weakly unimodular representation."""

    matrix: IntMatrix
    ground_labels: tuple = field(default=None)

    def __post_init__(self):
        m = self.matrix
        labels = self.ground_labels
        if labels is None:
            labels = tuple(range(1, m.cols + 1))
        labels = tuple(labels)
        if len(labels) != m.cols:
            raise InvalidArgumentError("one label per column required")
        object.__setattr__(self, "ground_labels", labels)
        rk = rank(m)
        if rk == 0:
            raise ZeroRankError("rank-0 matroids are not supported")
        if rk < m.rows:
            raise RankError(f"matrix has rank {rk} but {m.rows} rows; it must be full-rank")
        found = wu_witness(m)
        if found is not None:
            (rows, cols), d = found
            raise UnimodularityError(
                f"maximal minor on columns {[c + 1 for c in cols]} has determinant {d}",
                witness=(rows, cols),
                determinant=d,
            )

    def __eq__(self, other):
        if not isinstance(other, RegularRep):
            return NotImplemented
        return self.matrix == other.matrix and self.ground_labels == other.ground_labels

    def __hash__(self):
        return hash((self.matrix, self.ground_labels))

    @property
    def r(self) -> int:
        return self.matrix.rows

    @property
    def n(self) -> int:
        return self.matrix.cols

    @cached_property
    def bases(self) -> tuple:
        m = self.matrix
        return tuple(
            b for b in combinations(range(self.n), self.r)
            if det(m.select_columns(b)) != 0
        )

    @cached_property
    def circuits(self) -> tuple:
        found = []
        for k in range(1, self.r + 2):
            for s in combinations(range(self.n), k):
                ss = set(s)
                if any(c <= ss for c in found):
                    continue
                if column_rank(self.matrix, s) < k:
                    found.append(frozenset(s))
        return tuple(sorted(tuple(sorted(c)) for c in found))

    def is_independent(self, cols: Sequence[int]) -> bool:
        cols = list(cols)
        return column_rank(self.matrix, cols) == len(cols)

    def rank_of(self, cols: Sequence[int]) -> int:
        return column_rank(self.matrix, cols)

    def is_simple(self) -> bool:
        seen = set()
        for c in self.matrix.columns():
            if not any(c):
                return False
            neg = tuple(-x for x in c)
            if c in seen or neg in seen:
                return False
            seen.add(c)
        return True

    def is_standard_form(self) -> bool:
        r = self.r
        return all(self.matrix[i, j] == int(i == j) for i in range(r) for j in range(r))

    def label_sets(self, sets) -> list:
        """Translate index sets to label tuples."""
        return [tuple(self.ground_labels[i] for i in s) for s in sets]


def from_matrix(m: IntMatrix, ground_labels: Optional[Sequence] = None) -> RegularRep:
    return RegularRep(m, None if ground_labels is None else tuple(ground_labels))


def bases(rep: RegularRep) -> tuple:
    return rep.bases


def circuits(rep: RegularRep) -> tuple:
    return rep.circuits


def is_bipartite(rep: RegularRep) -> bool:
    return all(len(c) % 2 == 0 for c in rep.circuits)


def fundamental_signed_circuit(rep: RegularRep, e: int, b: Sequence[int]) -> SignedVector:
    """Signed circuit on ``C(e, b)`` with entry ``+1`` at ``e``."""
    b = list(b)
    if e in b:
        raise InvalidArgumentError(f"element {e} lies in the basis")
    if len(b) != rep.r or not rep.is_independent(b):
        raise NotABasisError(f"{b} is not a basis")
    m = rep.matrix
    x = solve_integral(m.select_columns(b), [-v for v in m.col(e)])
    if x is None:  # pragma: no cover - impossible for a unimodular basis block
        raise UnimodularityError("fundamental circuit is not integral")
    entries = [0] * rep.n
    entries[e] = 1
    for i, v in zip(b, x):
        entries[i] = v
    return SignedVector(tuple(entries), SIGNED_CIRCUIT)


def simplify(rep: RegularRep) -> RegularRep:
    """Drop zero columns and every column parallel (up to sign) to an earlier one."""
    keep = []
    seen = set()
    for j, c in enumerate(rep.matrix.columns()):
        if not any(c):
            continue
        if c in seen or tuple(-x for x in c) in seen:
            continue
        seen.add(c)
        keep.append(j)
    if len(keep) == rep.n:
        return rep
    return RegularRep(rep.matrix.select_columns(keep), tuple(rep.ground_labels[j] for j in keep))


def dual(rep: RegularRep) -> RegularRep:
    """``[I_r | D]`` -> ``[-D^T | I_{n-r}]``, keeping the labels."""
    if not rep.is_standard_form():
        raise NotStandardFormError("dual requires a matrix of the form [I_r | D]")
    r, n = rep.r, rep.n
    if r == n:
        raise ZeroRankError("the dual of a free matroid has rank 0")
    m = rep.matrix
    rows = []
    for j in range(r, n):
        rows.append([-m[i, j] for i in range(r)] + [int(j - r == k) for k in range(n - r)])
    return RegularRep(IntMatrix.from_rows(rows), rep.ground_labels)


# ---------------------------------------------------------------------------
# graphs


@dataclass(frozen=True)
class Graph:
    """Directed multigraph on vertices ``1..vertex_count``; edges are (tail, head)."""

    vertex_count: int
    edges: tuple

    def __post_init__(self):
        edges = tuple((int(t), int(h)) for t, h in self.edges)
        for t, h in edges:
            if not (1 <= t <= self.vertex_count and 1 <= h <= self.vertex_count):
                raise InvalidArgumentError(f"edge ({t}, {h}) out of range")
        object.__setattr__(self, "edges", edges)

    def is_simple(self) -> bool:
        seen = set()
        for t, h in self.edges:
            if t == h or frozenset((t, h)) in seen:
                return False
            seen.add(frozenset((t, h)))
        return True

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return True
        adj = {v: [] for v in range(1, self.vertex_count + 1)}
        for t, h in self.edges:
            adj[t].append(h)
            adj[h].append(t)
        seen = {1}
        todo = [1]
        while todo:
            v = todo.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return len(seen) == self.vertex_count


def incidence_matrix(g: Graph) -> IntMatrix:
    """Signed incidence matrix: +1 at the head, -1 at the tail."""
    if not g.edges:
        raise InvalidArgumentError("graph has no edges")
    rows = [[0] * len(g.edges) for _ in range(g.vertex_count)]
    for e, (t, h) in enumerate(g.edges):
        rows[h - 1][e] += 1
        rows[t - 1][e] -= 1
    return IntMatrix.from_rows(rows)


def spanning_forest(g: Graph) -> list:
    """Edge indices of the BFS spanning forest, sorted."""
    return sorted(_bfs_forest(g)[0])


def _bfs_forest(g: Graph) -> tuple:
    incident = {v: [] for v in range(1, g.vertex_count + 1)}
    for e, (t, h) in enumerate(g.edges):
        if t != h:
            incident[t].append(e)
            incident[h].append(e)
    parent_edge = {}
    tree = []
    order = []
    seen = set()
    for root in range(1, g.vertex_count + 1):
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        while queue:
            v = queue.popleft()
            order.append(v)
            for e in incident[v]:
                t, h = g.edges[e]
                w = h if t == v else t
                if w not in seen:
                    seen.add(w)
                    parent_edge[w] = (v, e)
                    tree.append(e)
                    queue.append(w)
    return tree, parent_edge, order


def from_graph(g: Graph) -> RegularRep:
    """Full-rank ``[I_r | D]`` for the graphic matroid via spanning-tree paths.

    Columns are the tree edges (in input order) followed by the remaining
    edges (in input order); labels are the 1-based input edge numbers.
    """
    if not g.edges:
        raise ZeroRankError("edgeless graph has rank 0")
    tree, parent_edge, order = _bfs_forest(g)
    if not tree:
        raise ZeroRankError("graph has only loops; rank 0")
    tree = sorted(tree)
    r = len(tree)
    slot = {e: i for i, e in enumerate(tree)}
    potential = {}
    for v in order:
        if v not in parent_edge:
            potential[v] = [0] * r
            continue
        u, e = parent_edge[v]
        p = list(potential[u])
        t, h = g.edges[e]
        p[slot[e]] += 1 if (t, h) == (u, v) else -1
        potential[v] = p
    in_tree = set(tree)
    col_order = tree + [e for e in range(len(g.edges)) if e not in in_tree]
    cols = []
    for e in col_order:
        t, h = g.edges[e]
        cols.append([a - b for a, b in zip(potential[h], potential[t])])
    return RegularRep(IntMatrix.from_columns(cols), tuple(e + 1 for e in col_order))


def parse_graph(text: str) -> Graph:
    """Parse ``"V E"`` followed by ``E`` lines ``"tail head"``."""
    lines = [s.strip() for s in text.splitlines()]
    lines = [s for s in lines if s and not s.startswith("#")]
    try:
        v, e = (int(t) for t in lines[0].split())
        edges = [tuple(int(t) for t in ln.split()) for ln in lines[1:]]
    except (ValueError, IndexError) as exc:
        raise ParseError(f"malformed graph text: {exc}") from None
    if len(edges) != e or any(len(x) != 2 for x in edges):
        raise ParseError(f"header announces {e} edges, body has {len(edges)}")
    return Graph(v, tuple(edges))


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())
