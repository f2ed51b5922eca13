"""The symmetric edge polytope conv[M | -M] of a regular matroid and its polar.

Facets come from spanning 2-cuts, polar lattice points from (k+1)-cuts.  All
answers are exact; numpy is only used to vectorise lattice box scans over
small integer data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Optional, Sequence

import numpy as np

from .cuts import is_spanning, k_cuts
from .errors import (
    InternalInconsistencyError,
    InvalidArgumentError,
    MustSimplifyError,
    NeedsFacetsError,
)
from .linalg import IntMatrix, inverse_unimodular, rank, solve, solve_integral
from .matroid import RegularRep
from .vectors import SignedVector

PRIMAL = "primal"
POLAR = "polar"


@dataclass(frozen=True)
class Facet:
    """Facet ``{x : normal . x = offset}`` certified by a spanning 2-cut.

    ``vertices`` index into the owning polytope's vertex list: ``i`` is column
    ``i`` of ``M`` and ``n + i`` is column ``i`` of ``-M``.
    """

    cut: SignedVector
    normal: tuple
    vertices: tuple
    offset: int = 1


@dataclass(frozen=True)
class Polytope:
    ambient_dim: int
    vertices: tuple
    facet_certs: Optional[tuple] = None

    def dilate(self, k: int) -> "Polytope":
        certs = None
        if self.facet_certs is not None:
            certs = tuple(
                Facet(f.cut, f.normal, f.vertices, f.offset * k) for f in self.facet_certs
            )
        verts = tuple(tuple(k * x for x in v) for v in self.vertices)
        return Polytope(self.ambient_dim, verts, certs)


def polytope_of_matrix(m: IntMatrix) -> Polytope:
    """``conv[M | -M]`` with no facet data; accepts any integer matrix."""
    cols = m.columns()
    return Polytope(m.rows, tuple(cols) + tuple(tuple(-x for x in c) for c in cols))


def _require_simple(rep: RegularRep) -> None:
    if not rep.is_simple():
        raise MustSimplifyError("representation has zero or parallel columns; simplify it first")


def build_polytope(rep: RegularRep) -> Polytope:
    _require_simple(rep)
    p = polytope_of_matrix(rep.matrix)
    return Polytope(p.ambient_dim, p.vertices, tuple(facets(rep)))


def dimension(p: Polytope) -> int:
    base = p.vertices[0]
    diffs = [tuple(a - b for a, b in zip(v, base)) for v in p.vertices[1:]]
    diffs = [d for d in diffs if any(d)]
    if not diffs:
        return 0
    return rank(IntMatrix.from_columns(diffs))


def facets(rep: RegularRep) -> list:
    """One facet per spanning 2-cut, in lexicographic cut order."""
    _require_simple(rep)
    m = rep.matrix
    n = rep.n
    out = []
    for gamma in k_cuts(rep, 2):
        if not is_spanning(rep, gamma):
            continue
        supp = gamma.support
        b = next(b for b in rep.bases if set(b) <= supp)
        u = solve_integral(m.select_columns(b).T, [gamma[i] for i in b])
        if u is None or m.T.apply(u) != gamma.entries:
            raise InternalInconsistencyError(f"no integral normal for cut {gamma.entries}")
        verts = tuple(sorted(
            [i for i in range(n) if gamma[i] == 1] + [n + i for i in range(n) if gamma[i] == -1]
        ))
        out.append(Facet(gamma, u, verts))
    return out


def brute_force_facets(vertices: Sequence[Sequence[int]]) -> set:
    """Facet hyperplanes ``a . x = 1`` of a full-dimensional polytope with 0 inside.

    Supporting-hyperplane search over all ``d``-subsets of vertices; the
    result is a set of normals ``a`` as tuples of Fractions.  Independent of
    any cut machinery, intended as a desk-scale oracle.
    """
    V = np.array(vertices, dtype=float)
    d = V.shape[1]
    subsets = list(combinations(range(len(V)), d))
    if not subsets:
        return set()
    idx = np.array(subsets)
    blocks = V[idx]  # (s, d, d), rows are vertices
    dets = np.linalg.det(blocks)
    ok = np.abs(dets) > 0.5  # integer matrices: nonzero determinant has |det| >= 1
    idx, blocks = idx[ok], blocks[ok]
    if len(idx) == 0:
        return set()
    normals = np.linalg.solve(blocks, np.ones((len(idx), d, 1)))[..., 0]
    valid = (normals @ V.T <= 1 + 1e-9).all(axis=1)
    found = set()
    seen_keys = set()
    for sub, a in zip(idx[valid], normals[valid]):
        key = tuple(np.round(a, 6))
        if key in seen_keys:
            continue
        seen_keys.add(key)
        block = IntMatrix.from_rows([list(map(int, vertices[i])) for i in sub])
        exact = solve(block, [1] * d)
        if all(sum(x * y for x, y in zip(exact, v)) <= 1 for v in vertices):
            found.add(exact)
    return found


def lattice_points(p: Polytope) -> list:
    """All integer points of ``p`` via a bounding-box scan, sorted."""
    if p.facet_certs is None:
        raise NeedsFacetsError("facet certificates are required to test membership")
    if dimension(p) != p.ambient_dim:
        raise InvalidArgumentError("polytope is not full-dimensional")
    V = np.array(p.vertices, dtype=np.int64)
    lo, hi = V.min(axis=0), V.max(axis=0)
    axes = [np.arange(a, b + 1, dtype=np.int64) for a, b in zip(lo, hi)]
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, p.ambient_dim)
    normals = np.array([f.normal for f in p.facet_certs], dtype=np.int64)
    offsets = np.array([f.offset for f in p.facet_certs], dtype=np.int64)
    inside = (grid @ normals.T <= offsets).all(axis=1)
    return sorted(tuple(int(x) for x in pt) for pt in grid[inside])


def _polar_box(rep: RegularRep, k: int) -> list:
    b = rep.bases[0]
    inv_t = inverse_unimodular(rep.matrix.select_columns(b)).T
    return [k * sum(abs(x) for x in inv_t.row(i)) for i in range(rep.r)]


def polar_lattice_points(rep: RegularRep, k: int) -> list:
    """Integer ``u`` with ``|M^T u| <= k`` componentwise, sorted.

    Scans the box implied by one basis block ``N``: ``u = N^{-T} gamma_B``
    with ``|gamma_B| <= k``.
    """
    if k < 1:
        raise InvalidArgumentError("k must be at least 1")
    bounds = _polar_box(rep, k)
    axes = [np.arange(-t, t + 1, dtype=np.int64) for t in bounds]
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, rep.r)
    mt = np.array(rep.matrix.to_rows(), dtype=np.int64)
    keep = (np.abs(grid @ mt) <= k).all(axis=1)
    return sorted(tuple(int(x) for x in u) for u in grid[keep])


def is_centrally_symmetric(rep: RegularRep) -> bool:
    verts = set(polytope_of_matrix(rep.matrix).vertices)
    return all(tuple(-x for x in v) in verts for v in verts)


def is_reflexive(rep: RegularRep) -> bool:
    """Every facet normal is integral with offset 1 and truly supports a facet."""
    p = build_polytope(rep)
    for f in p.facet_certs:
        values = [sum(a * x for a, x in zip(f.normal, v)) for v in p.vertices]
        if max(values) != 1 or f.offset != 1:
            return False
        on = [p.vertices[i] for i, val in enumerate(values) if val == 1]
        if rank(IntMatrix.from_columns(on)) != rep.r:
            return False
    return True


def is_terminal(rep: RegularRep) -> bool:
    p = build_polytope(rep)
    return set(lattice_points(p)) == set(p.vertices) | {(0,) * rep.r}


def ehrhart_counts(rep: RegularRep, side: str = PRIMAL, k_max: int = 1) -> list:
    """``|kP ∩ Z^r|`` for ``k = 0..k_max`` (P the polytope or its polar)."""
    if side == PRIMAL:
        p = build_polytope(rep)
        return [1] + [len(lattice_points(p.dilate(k))) for k in range(1, k_max + 1)]
    if side == POLAR:
        return [1] + [len(k_cuts(rep, k + 1)) for k in range(1, k_max + 1)]
    raise InvalidArgumentError(f"side must be {PRIMAL!r} or {POLAR!r}")


def hstar_from_counts(counts: Sequence[int], d: int) -> list:
    """h* of a d-polytope from ``L(0), ..., L(d)``."""
    if len(counts) < d + 1:
        raise InvalidArgumentError(f"need {d + 1} Ehrhart values")
    return [
        sum((-1) ** i * comb(d + 1, i) * counts[j - i] for i in range(j + 1))
        for j in range(d + 1)
    ]


def ehrhart_polynomial(counts: Sequence[int]) -> list:
    """Coefficients (constant term first) of the interpolating polynomial."""
    d = len(counts) - 1
    vander = IntMatrix.from_rows([[t ** i for i in range(d + 1)] for t in range(d + 1)])
    return list(solve(vander, counts))


def normalized_volume(rep: RegularRep) -> int:
    coeffs = ehrhart_polynomial(ehrhart_counts(rep, PRIMAL, rep.r))
    vol = coeffs[rep.r] * Fraction(_factorial(rep.r))
    assert vol.denominator == 1
    return int(vol)


def _factorial(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def hstar(rep: RegularRep, cross_check: bool = True) -> list:
    """h*-vector by Ehrhart interpolation, cross-checked against the
    h-vector of the unimodular triangulation."""
    counts = ehrhart_counts(rep, PRIMAL, rep.r)
    h = hstar_from_counts(counts, rep.r)
    if cross_check:
        from .toric import h_vector, triangulation

        h_tri = h_vector(triangulation(rep))
        if h_tri != h:
            raise InternalInconsistencyError(
                f"Ehrhart h* {h} disagrees with triangulation h-vector {h_tri}"
            )
    return h


def gamma_from_hstar(h: Sequence[int]) -> list:
    """Coefficients of ``h(t) = sum_i g_i t^i (1+t)^(d-2i)``."""
    h = list(h)
    d = len(h) - 1
    if h != h[::-1]:
        raise InternalInconsistencyError(f"h* {h} is not palindromic")
    rem = h[:]
    out = []
    for i in range(d // 2 + 1):
        g = rem[i]
        out.append(g)
        for j in range(d - 2 * i + 1):
            rem[i + j] -= g * comb(d - 2 * i, j)
    if any(rem):
        raise InternalInconsistencyError(f"gamma extraction left remainder {rem}")
    return out


def gamma(rep: RegularRep, cross_check: bool = True) -> list:
    return gamma_from_hstar(hstar(rep, cross_check))
