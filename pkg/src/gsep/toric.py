"""Toric ideal of conv[M | -M]: promotions, Graver basis, a Gröbner basis with
squarefree initial ideal, and the unimodular triangulation it induces.

Variables are indexed ``0..2n``: index ``i < n`` is ``x_{i+1}``, index
``n + i`` is ``x_{-(i+1)}`` and index ``2n`` is ``z``.  Triangulation
vertices use signed labels instead: ``i+1`` for column ``i`` of ``M``,
``-(i+1)`` for column ``i`` of ``-M`` and ``0`` for the origin.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Optional, Sequence

from .cuts import signed_circuits
from .errors import InvalidArgumentError, MustSimplifyError, TheoremViolation
from .linalg import IntMatrix, det
from .matroid import RegularRep


def var_name(idx: int, n: int) -> str:
    if idx < n:
        return f"x{idx + 1}"
    if idx < 2 * n:
        return f"x-{idx - n + 1}"
    if idx == 2 * n:
        return "z"
    raise InvalidArgumentError(f"variable index {idx} out of range")


def var_label(idx: int, n: int) -> int:
    """Signed vertex label of an x-variable (0 for z, i.e. the origin)."""
    if idx < n:
        return idx + 1
    if idx < 2 * n:
        return -(idx - n + 1)
    return 0


def label_var(label: int, n: int) -> int:
    if label > 0:
        return label - 1
    if label < 0:
        return n - label - 1
    return 2 * n


@dataclass(frozen=True)
class MonomialOrder:
    """Degree reverse lexicographic order on ``2n + 1`` variables.

    ``ranking`` lists variable indices from largest to smallest.  The default
    is ``x1 > x-1 > x2 > x-2 > ... > xn > x-n > z``.
    """

    n: int
    ranking: tuple = ()

    def __post_init__(self):
        ranking = self.ranking or tuple(
            v for i in range(self.n) for v in (i, self.n + i)
        ) + (2 * self.n,)
        if sorted(ranking) != list(range(2 * self.n + 1)):
            raise InvalidArgumentError("ranking must be a permutation of all variables")
        if ranking[-1] != 2 * self.n:
            raise InvalidArgumentError("z must be the smallest variable")
        object.__setattr__(self, "ranking", tuple(ranking))

    def compare(self, a: Sequence[int], b: Sequence[int]) -> int:
        """-1, 0, 1 as ``a`` is smaller than, equal to, larger than ``b``."""
        da, db = sum(a), sum(b)
        if da != db:
            return 1 if da > db else -1
        for v in reversed(self.ranking):
            if a[v] != b[v]:
                # more of a small variable means a smaller monomial
                return -1 if a[v] > b[v] else 1
        return 0

    def greater(self, a, b) -> bool:
        return self.compare(a, b) > 0


@dataclass(frozen=True)
class Binomial:
    """``x^plus - x^minus`` as exponent vectors of length ``2n + 1``."""

    plus: tuple
    minus: tuple
    kind: str = field(default="", compare=False)
    source: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if len(self.plus) != len(self.minus):
            raise InvalidArgumentError("exponent vectors differ in length")
        if any(a and b for a, b in zip(self.plus, self.minus)):
            raise InvalidArgumentError("plus and minus must have disjoint supports")

    @property
    def n(self) -> int:
        return (len(self.plus) - 1) // 2

    def is_homogeneous(self) -> bool:
        return sum(self.plus) == sum(self.minus)

    def lead(self, order: MonomialOrder) -> tuple:
        return self.plus if order.compare(self.plus, self.minus) >= 0 else self.minus

    def to_dict(self) -> dict:
        n = self.n
        return {
            "plus": {var_name(i, n): e for i, e in enumerate(self.plus) if e},
            "minus": {var_name(i, n): e for i, e in enumerate(self.minus) if e},
        }

    def __str__(self) -> str:
        def mono(e):
            parts = []
            for i, k in enumerate(e):
                if k:
                    parts.append(var_name(i, self.n) + (f"^{k}" if k > 1 else ""))
            return "*".join(parts) or "1"

        return f"{mono(self.plus)} - {mono(self.minus)}"


def promote(lam: Sequence[int], J) -> tuple:
    """Move the ``J``-indexed entries, negated, into a second block of length n."""
    n = len(lam)
    J = set(J)
    if any(not 0 <= j < n for j in J):
        raise InvalidArgumentError(f"promotion set {sorted(J)} out of range")
    out = [0] * (2 * n)
    for i, x in enumerate(lam):
        if i in J:
            out[n + i] = -x
        else:
            out[i] = x
    return tuple(out)


def _split(vec: Sequence[int], z: int = 0) -> tuple:
    plus = tuple(max(x, 0) for x in vec) + (0,)
    minus = tuple(max(-x, 0) for x in vec) + (z,)
    return plus, minus


def _subsets(items) -> list:
    items = sorted(items)
    # binary-counter order over the support
    return [
        {items[b] for b in range(len(items)) if mask >> b & 1}
        for mask in range(1 << len(items))
    ]


def _circuit_representatives(rep: RegularRep) -> list:
    """One signed circuit per circuit: the one whose first nonzero entry is positive."""
    reps = []
    for lam in signed_circuits(rep):
        first = next(x for x in lam.entries if x)
        if first > 0:
            reps.append(lam)
    return reps


def _antipodal(n: int, i: int, z: int) -> Binomial:
    plus = [0] * (2 * n + 1)
    plus[i] = plus[n + i] = 1
    minus = [0] * (2 * n + 1)
    minus[2 * n] = z
    return Binomial(tuple(plus), tuple(minus), kind="i" if z else "pair", source=())


def graver_doubled(rep: RegularRep, order: Optional[MonomialOrder] = None) -> list:
    """Graver basis of the toric ideal of ``[M | -M]``.

    One binomial per sign pair, oriented so ``|plus| >= |minus|`` with ties
    going to the order-larger monomial.
    """
    if any(not any(c) for c in rep.matrix.columns()):
        raise InvalidArgumentError("matrix has a zero column")
    n = rep.n
    order = order or MonomialOrder(n)
    out = [_antipodal(n, i, 0) for i in range(n)]
    for lam in _circuit_representatives(rep):
        src = tuple(sorted(lam.support))
        for J in _subsets(lam.support):
            plus, minus = _split(promote(lam.entries, J))
            sp, sm = sum(plus), sum(minus)
            if sp < sm or (sp == sm and order.compare(plus, minus) < 0):
                plus, minus = minus, plus
            out.append(Binomial(plus, minus, kind="circuit", source=src))
    return out


def groebner_basis(rep: RegularRep, order: Optional[MonomialOrder] = None) -> list:
    """The three families: ``x_i x_{-i} - z^2``, balanced promotions, and
    promotions with one extra positive entry homogenised by a single ``z``.

    Each binomial is stored with its leading term as ``plus``.
    """
    if not rep.is_simple():
        raise MustSimplifyError("Gröbner basis requires irredundant columns")
    n = rep.n
    order = order or MonomialOrder(n)
    out = [_antipodal(n, i, 2) for i in range(n)]
    for lam in _circuit_representatives(rep):
        src = tuple(sorted(lam.support))
        for J in _subsets(lam.support):
            eta = promote(lam.entries, J)
            k = sum(1 for x in eta if x > 0) - sum(1 for x in eta if x < 0)
            if k < 0:
                eta = tuple(-x for x in eta)
                k = -k
            if k == 0:
                plus, minus = _split(eta)
                kind = "iii"
            elif k == 1:
                plus, minus = _split(eta, z=1)
                kind = "ii"
            else:
                continue
            if order.compare(plus, minus) < 0:
                plus, minus = minus, plus
            out.append(Binomial(plus, minus, kind=kind, source=src))
    return out


def initial_ideal(gb: Sequence[Binomial], order: MonomialOrder) -> list:
    """Supports of the leading terms; every lead must be squarefree and z-free."""
    supports = set()
    for b in gb:
        lead = b.lead(order)
        if any(e > 1 for e in lead):
            raise TheoremViolation(f"leading term of {b} is not squarefree")
        if lead[-1]:
            raise TheoremViolation(f"leading term of {b} involves z")
        supports.add(frozenset(i for i, e in enumerate(lead) if e))
    return sorted(supports, key=lambda s: (len(s), sorted(s)))


def verify_binomial(rep: RegularRep, b: Binomial, homogeneous: bool = True) -> bool:
    """Do both monomials have the same image under the toric map?

    With ``homogeneous`` every variable also carries one power of the grading
    variable; switch it off for the (inhomogeneous) Graver binomials.
    """
    n = rep.n
    if len(b.plus) != 2 * n + 1:
        raise InvalidArgumentError("binomial has the wrong number of variables")
    cols = rep.matrix.columns()

    def image(e):
        t = [0] * rep.r
        for i in range(n):
            for row in range(rep.r):
                t[row] += (e[i] - e[n + i]) * cols[i][row]
        return tuple(t), sum(e)

    (tp, sp), (tm, sm) = image(b.plus), image(b.minus)
    return tp == tm and (sp == sm or not homogeneous)


@dataclass(frozen=True)
class Triangulation:
    """Cone over a triangulated boundary sphere, in signed vertex labels."""

    rank: int
    vertex_labels: tuple
    cone_facets: tuple
    boundary_facets: tuple

    def to_dict(self) -> dict:
        return {
            "cone_facets": [list(f) for f in self.cone_facets],
            "boundary_facets": [list(f) for f in self.boundary_facets],
            "h": h_vector(self),
        }


def _maximal_faces(n: int, nonfaces: Sequence[frozenset]) -> list:
    """Maximal subsets of the 2n x-variables containing no nonface.

    Each ground element contributes ``x_i``, ``x_{-i}`` or nothing, since
    ``{x_i, x_{-i}}`` is always a nonface.
    """
    by_var = {}
    for g in nonfaces:
        for v in g:
            by_var.setdefault(v, []).append(g - {v})

    def addable(current: set, v: int) -> bool:
        return not any(rest <= current for rest in by_var.get(v, ()))

    found = []
    current: set = set()

    def walk(i: int, skipped: list):
        if i == n:
            for j in skipped:
                if addable(current, j) or addable(current, n + j):
                    return
            found.append(frozenset(current))
            return
        for v in (i, n + i):
            if addable(current, v):
                current.add(v)
                walk(i + 1, skipped)
                current.discard(v)
        skipped.append(i)
        walk(i + 1, skipped)
        skipped.pop()

    walk(0, [])
    return found


def _label_key(face) -> tuple:
    return tuple(sorted(face, key=lambda x: (abs(x), -x)))


def triangulation(rep: RegularRep, order: Optional[MonomialOrder] = None) -> Triangulation:
    """Triangulation whose faces are the squarefree standard monomials."""
    n = rep.n
    order = order or MonomialOrder(n)
    nonfaces = initial_ideal(groebner_basis(rep, order), order)
    faces = _maximal_faces(n, nonfaces)
    boundary = sorted(
        (_label_key(var_label(v, n) for v in f) for f in faces),
        key=lambda f: [(abs(x), -x) for x in f],
    )
    cone = [(0,) + f for f in boundary]
    labels = tuple(range(1, n + 1)) + tuple(-i for i in range(1, n + 1)) + (0,)
    return Triangulation(rep.r, labels, tuple(cone), tuple(boundary))


def label_vector(rep: RegularRep, label: int) -> tuple:
    if label == 0:
        return (0,) * rep.r
    c = rep.matrix.col(abs(label) - 1)
    return c if label > 0 else tuple(-x for x in c)


def simplex_volumes(rep: RegularRep, t: Triangulation) -> list:
    """Normalized volume ``|det|`` of each cone facet."""
    vols = []
    for face in t.cone_facets:
        cols = [label_vector(rep, x) for x in face if x != 0]
        if len(cols) != rep.r:
            vols.append(0)
            continue
        vols.append(abs(det(IntMatrix.from_columns(cols))))
    return vols


def f_vector(t: Triangulation) -> list:
    """``f[s]`` = number of faces with ``s`` vertices, ``s = 0..d``."""
    d = t.rank
    faces = set()
    for facet in t.boundary_facets:
        for s in range(len(facet) + 1):
            faces.update(combinations(facet, s))
    f = [0] * (d + 1)
    for face in faces:
        if len(face) <= d:
            f[len(face)] += 1
    return f


def h_vector(t: Triangulation) -> list:
    """h-vector of the boundary complex via the f-to-h transform."""
    d = t.rank
    if any(len(f) != d for f in t.boundary_facets):
        raise TheoremViolation("boundary complex is not pure of dimension r - 1")
    f = f_vector(t)
    return [
        sum((-1) ** (k - s) * comb(d - s, k - s) * f[s] for s in range(k + 1))
        for k in range(d + 1)
    ]
