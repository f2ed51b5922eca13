"""Shared test utilities: independent oracles and random graph generation."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, permutations, product

from gsep.matroid import Graph


def cofactor_det(rows):
    """Laplace expansion along the first row; exponential but obviously right."""
    k = len(rows)
    if k == 0:
        return 1
    if k == 1:
        return rows[0][0]
    total = 0
    for j, a in enumerate(rows[0]):
        if a:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * a * cofactor_det(minor)
    return total


def fraction_rank(rows):
    """Plain Gaussian elimination over the rationals."""
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c] / m[rank][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def brute_cuts(rows, k):
    """Vectors in {-(k-1)..k-1}^n lying in the row space (rank test)."""
    n = len(rows[0])
    r = fraction_rank(rows)
    return {
        v for v in product(range(-(k - 1), k), repeat=n)
        if fraction_rank(list(rows) + [list(v)]) == r
    }


def brute_flows(rows, k):
    n = len(rows[0])
    return {
        v for v in product(range(-(k - 1), k), repeat=n)
        if all(sum(a * b for a, b in zip(row, v)) == 0 for row in rows)
    }


def brute_circuits(rows):
    """Minimal dependent column sets by subset enumeration."""
    n = len(rows[0])
    cols = list(zip(*rows))
    dependent = []
    for size in range(1, n + 1):
        for s in combinations(range(n), size):
            if any(set(d) <= set(s) for d in dependent):
                continue
            if fraction_rank([list(cols[i]) for i in s]) < size:
                dependent.append(s)
    return set(dependent)


def points_in_hull(normals, box):
    """Integer points ``x`` in the box with ``a . x <= 1`` for every normal."""
    return [
        x for x in product(*[range(lo, hi + 1) for lo, hi in box])
        if all(sum(a * b for a, b in zip(nrm, x)) <= 1 for nrm in normals)
    ]


def random_connected_graph(rng: random.Random, max_vertices=6, max_edges=9) -> Graph:
    """Random connected simple digraph: random tree plus extra edges."""
    v = rng.randint(2, max_vertices)
    order = list(range(v))
    rng.shuffle(order)
    edges = []
    for i in range(1, v):
        a, b = order[i], order[rng.randrange(i)]
        edges.append((a, b) if rng.random() < 0.5 else (b, a))
    present = {frozenset(e) for e in edges}
    others = [p for p in combinations(range(v), 2) if frozenset(p) not in present]
    rng.shuffle(others)
    extra = rng.randint(0, min(len(others), max_edges - len(edges)))
    for a, b in others[:extra]:
        edges.append((a, b) if rng.random() < 0.5 else (b, a))
    rng.shuffle(edges)
    return Graph(v, tuple((a + 1, b + 1) for a, b in edges))


def is_graph_isomorphic(g, h) -> bool:
    """Undirected isomorphism by permutation search (tiny graphs only)."""
    if g.vertex_count != h.vertex_count or len(g.edges) != len(h.edges):
        return False
    eh = {frozenset(e) for e in h.edges}
    for p in permutations(range(1, g.vertex_count + 1)):
        if {frozenset((p[a - 1], p[b - 1])) for a, b in g.edges} == eh:
            return True
    return False
