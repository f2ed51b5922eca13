"""Unimodular equivalence of symmetric edge polytopes.

Given two representations of the same regular matroid and the matroid
isomorphism between them, :func:`unimodular_transform` builds ``F`` in
``GL_r(Z)`` and a signed permutation ``P`` with ``M2 = F M1 P``: bring both
to ``[I | D]`` on a common basis, recover the row/column signing relating the
two ``D`` blocks, and undo the basis changes.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    InternalInconsistencyError,
    InvalidArgumentError,
    InvalidCorrespondenceError,
    NotUnimodularError,
    SigningInfeasibleError,
    SizeLimitError,
)
from .linalg import IntMatrix, det, inverse_unimodular, standard_form
from .matroid import RegularRep
from .polytope import polytope_of_matrix

ISOMORPHISM_SIZE_LIMIT = 10


@dataclass(frozen=True)
class SignedPermutation:
    """Column ``j`` of ``A @ P`` is ``signs[j] * A[:, permutation[j]]``."""

    permutation: tuple
    signs: tuple

    def __post_init__(self):
        if sorted(self.permutation) != list(range(len(self.permutation))):
            raise InvalidArgumentError("permutation is not a bijection")
        if len(self.signs) != len(self.permutation) or any(s not in (1, -1) for s in self.signs):
            raise InvalidArgumentError("signs must be +-1, one per column")

    def to_matrix(self) -> IntMatrix:
        n = len(self.permutation)
        rows = [[0] * n for _ in range(n)]
        for j, (i, s) in enumerate(zip(self.permutation, self.signs)):
            rows[i][j] = s
        return IntMatrix.from_rows(rows)

    def to_dict(self) -> dict:
        return {"perm": [i + 1 for i in self.permutation], "signs": list(self.signs)}


def _diag_scale(a: IntMatrix, rowsigns, colsigns) -> IntMatrix:
    return IntMatrix.from_rows(
        [[rowsigns[i] * a[i, j] * colsigns[j] for j in range(a.cols)] for i in range(a.rows)]
    )


def camion_sign(a: IntMatrix, b: IntMatrix) -> tuple:
    """Row and column signs with ``diag(rowsigns) a diag(colsigns) = b``.

    Signs are fixed along a BFS spanning forest of the bipartite support
    graph, starting from row 0, and then checked on every entry.
    """
    if a.shape != b.shape:
        raise InvalidArgumentError("matrices differ in shape")
    if any((x - y) % 2 for x, y in zip(a.entries, b.entries)):
        raise SigningInfeasibleError("matrices are not congruent modulo 2")
    m, n = a.shape
    rowsigns: list = [0] * m
    colsigns: list = [0] * n
    for start in range(m + n):
        is_row = start < m
        if (rowsigns[start] if is_row else colsigns[start - m]):
            continue
        if is_row:
            rowsigns[start] = 1
        else:
            colsigns[start - m] = 1
        queue = deque([start])
        while queue:
            node = queue.popleft()
            if node < m:
                i = node
                for j in range(n):
                    if a[i, j] and not colsigns[j]:
                        colsigns[j] = rowsigns[i] * a[i, j] * b[i, j]
                        queue.append(m + j)
            else:
                j = node - m
                for i in range(m):
                    if a[i, j] and not rowsigns[i]:
                        rowsigns[i] = colsigns[j] * a[i, j] * b[i, j]
                        queue.append(i)
    if _diag_scale(a, rowsigns, colsigns) != b:
        raise SigningInfeasibleError("no consistent signing exists")
    return tuple(rowsigns), tuple(colsigns)


def verify_vertex_set_map(v1: Sequence, v2: Sequence, f: IntMatrix) -> bool:
    """Does ``x -> f x`` carry the vertex set ``v1`` onto ``v2``?"""
    if not f.is_square():
        raise InvalidArgumentError("transform must be square")
    if det(f) not in (1, -1):
        raise NotUnimodularError("transform is not in GL(Z)")
    image = {f.apply(v) for v in v1}
    return image == {tuple(v) for v in v2}


def _bases_under(rep: RegularRep, sigma: Sequence[int]) -> set:
    return {frozenset(sigma[i] for i in b) for b in rep.bases}


def unimodular_transform(m1: RegularRep, m2: RegularRep, correspondence: Optional[Sequence[int]] = None) -> tuple:
    """``(F, P)`` with ``m2.matrix == F @ m1.matrix @ P``.

    ``correspondence[i]`` is the element of ``m2`` matched with element ``i``
    of ``m1`` (identity if omitted); it must be a matroid isomorphism.
    """
    if (m1.r, m1.n) != (m2.r, m2.n):
        raise InvalidCorrespondenceError("representations differ in shape")
    n = m1.n
    sigma = tuple(range(n)) if correspondence is None else tuple(correspondence)
    if sorted(sigma) != list(range(n)):
        raise InvalidCorrespondenceError("correspondence is not a bijection")
    if _bases_under(m1, sigma) != {frozenset(b) for b in m2.bases}:
        raise InvalidCorrespondenceError("correspondence is not a matroid isomorphism")
    # m2 reordered so that the identity is the isomorphism
    m2r = m2.matrix.select_columns(sigma)
    basis = list(m1.bases[0])
    n1_inv, _, std1 = standard_form(m1.matrix, basis)
    n2_inv, _, std2 = standard_form(m2r, basis)
    try:
        rowsigns, colsigns = camion_sign(std1, std2)
    except SigningInfeasibleError as exc:
        raise InvalidCorrespondenceError(f"standard forms not related by signing: {exc}") from None
    n2 = inverse_unimodular(n2_inv)
    r_diag = IntMatrix.from_rows([[rowsigns[i] if i == j else 0 for j in range(m1.r)] for i in range(m1.r)])
    f = n2 @ r_diag @ n1_inv
    fm1 = f @ m1.matrix
    permutation = [0] * n
    signs = [0] * n
    for i in range(n):
        j = sigma[i]
        target = m2.matrix.col(j)
        src = fm1.col(i)
        if src == target:
            s = 1
        elif tuple(-x for x in src) == target:
            s = -1
        else:
            raise InternalInconsistencyError(f"column {i} does not map to +-column {j}")
        permutation[j] = i
        signs[j] = s
    p = SignedPermutation(tuple(permutation), tuple(signs))
    if fm1 @ p.to_matrix() != m2.matrix:
        raise InternalInconsistencyError("F M1 P != M2")
    if not verify_vertex_set_map(
        polytope_of_matrix(m1.matrix).vertices, polytope_of_matrix(m2.matrix).vertices, f
    ):
        raise InternalInconsistencyError("transform does not map the polytopes onto each other")
    return f, p


def matroid_isomorphism_search(m1: RegularRep, m2: RegularRep) -> Optional[tuple]:
    """Some bijection ``sigma`` carrying circuits of ``m1`` onto circuits of ``m2``.

    Backtracking in element order, pruned by per-element circuit-size
    profiles and by checking every circuit as soon as it is fully assigned.
    Returns the lexicographically first such bijection, or None.
    """
    n = m1.n
    if n > ISOMORPHISM_SIZE_LIMIT or m2.n > ISOMORPHISM_SIZE_LIMIT:
        raise SizeLimitError(f"isomorphism search is limited to {ISOMORPHISM_SIZE_LIMIT} elements")
    if n != m2.n or m1.r != m2.r:
        return None
    c1 = [frozenset(c) for c in m1.circuits]
    c2 = {frozenset(c) for c in m2.circuits}
    if Counter(map(len, c1)) != Counter(map(len, c2)):
        return None

    def profile(circs, e):
        return tuple(sorted(len(c) for c in circs if e in c))

    prof1 = [profile(c1, e) for e in range(n)]
    prof2 = [profile(c2, e) for e in range(n)]
    # circuits of m1 that become fully assigned once element e is placed
    closing = [[c for c in c1 if max(c) == e] for e in range(n)]
    sigma = [None] * n
    used = [False] * n

    def extend(e: int) -> bool:
        if e == n:
            return True
        for t in range(n):
            if used[t] or prof1[e] != prof2[t]:
                continue
            sigma[e] = t
            if all(frozenset(sigma[x] for x in c) in c2 for c in closing[e]):
                used[t] = True
                if extend(e + 1):
                    return True
                used[t] = False
        sigma[e] = None
        return False

    if extend(0):
        return tuple(sigma)
    return None
