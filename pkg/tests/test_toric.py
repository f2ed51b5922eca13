import random
from collections import Counter
from itertools import product

import pytest

from gsep.cuts import signed_circuits
from gsep.errors import InvalidArgumentError, MustSimplifyError
from gsep.linalg import IntMatrix
from gsep.matroid import from_graph, from_matrix
from gsep.polytope import hstar, normalized_volume
from gsep.toric import (
    Binomial,
    MonomialOrder,
    f_vector,
    graver_doubled,
    groebner_basis,
    h_vector,
    initial_ideal,
    label_var,
    promote,
    simplex_volumes,
    triangulation,
    var_label,
    var_name,
    verify_binomial,
)
from helpers import random_connected_graph

# leading terms of the listed Gröbner basis, one string per binomial
LEADS = [
    "x1 x-1", "x2 x-2", "x3 x-3", "x4 x-4", "x5 x-5",
    "x1 x2", "x-1 x-2", "x-1 x5", "x1 x-5", "x-2 x5", "x2 x-5",
    "x3 x4", "x-3 x-4", "x3 x5", "x-3 x-5", "x4 x5", "x-4 x-5",
    "x1 x2", "x-1 x-2", "x1 x3", "x-1 x-3", "x-2 x-3", "x2 x3",
]


def lead_names(b, order, n):
    return frozenset(var_name(i, n) for i, e in enumerate(b.lead(order)) if e)


def test_variable_naming():
    assert [var_name(i, 2) for i in range(5)] == ["x1", "x2", "x-1", "x-2", "z"]
    for i in range(5):
        assert label_var(var_label(i, 2), 2) == i
    with pytest.raises(InvalidArgumentError):
        var_name(5, 2)


def test_order_is_degrevlex():
    order = MonomialOrder(2)
    assert order.ranking == (0, 2, 1, 3, 4)
    x1, xm1, z = (1, 0, 0, 0, 0), (0, 0, 1, 0, 0), (0, 0, 0, 0, 1)
    assert order.greater(x1, xm1)
    assert order.greater(xm1, z)
    assert order.greater((1, 1, 0, 0, 0), (2, 0, 0, 0, 0)) is False
    # total degree dominates
    assert order.greater((0, 0, 0, 0, 2), x1)
    with pytest.raises(InvalidArgumentError):
        MonomialOrder(2, (4, 0, 1, 2, 3))


def test_promote():
    assert promote((1, -1, 0), {1}) == (1, 0, 0, 0, 1, 0)
    with pytest.raises(InvalidArgumentError):
        promote((1, 0), {5})


def test_graver_counts(running):
    g = graver_doubled(running)
    assert len(g) == 37
    n = running.n
    antipodal = [b for b in g if b.kind != "circuit"]
    assert len(antipodal) == 5
    by_source = Counter(b.source for b in g if b.kind == "circuit")
    assert sorted(by_source.values()) == [8, 8, 16]
    for b in g:
        assert verify_binomial(running, b, homogeneous=False)
    assert all(len(b.plus) == 2 * n + 1 for b in g)


def test_graver_matches_signed_circuits(running):
    """Lifting each signed circuit through every promotion, no extras."""
    n = running.n
    g = {frozenset([b.plus, b.minus]) for b in graver_doubled(running) if b.kind == "circuit"}
    expected = set()
    for lam in signed_circuits(running):
        supp = sorted(lam.support)
        for choice in product((False, True), repeat=len(supp)):
            vec = [0] * (2 * n + 1)
            for i, neg in zip(supp, choice):
                if neg:
                    vec[n + i] = -lam[i]
                else:
                    vec[i] = lam[i]
            plus = tuple(max(x, 0) for x in vec)
            minus = tuple(max(-x, 0) for x in vec)
            expected.add(frozenset([plus, minus]))
    assert g == expected


def test_groebner_leading_terms(running):
    order = MonomialOrder(running.n)
    gb = groebner_basis(running, order)
    assert len(gb) == 23
    got = Counter(lead_names(b, order, running.n) for b in gb)
    assert got == Counter(frozenset(s.split()) for s in LEADS)
    assert Counter(b.kind for b in gb) == Counter({"i": 5, "ii": 12, "iii": 6})
    for b in gb:
        assert b.is_homogeneous()
        assert verify_binomial(running, b)
        assert b.lead(order) == b.plus


def test_named_groebner_binomial(running):
    order = MonomialOrder(running.n)
    gb = groebner_basis(running, order)
    strings = {str(b) for b in gb}
    assert "x1*x2 - x5*z" in strings
    assert "x1*x-1 - z^2" in strings


def test_initial_ideal_is_squarefree(running):
    order = MonomialOrder(running.n)
    ideal = initial_ideal(groebner_basis(running, order), order)
    assert all(len(s) == 2 for s in ideal)
    assert len(ideal) == 21


def test_triangulation(running):
    t = triangulation(running)
    assert len(t.cone_facets) == 16
    assert all(len(f) == 4 and 0 in f for f in t.cone_facets)
    assert simplex_volumes(running, t) == [1] * 16
    assert f_vector(t) == [1, 10, 24, 16]
    assert h_vector(t) == [1, 7, 7, 1]
    assert t.to_dict()["h"] == [1, 7, 7, 1]


def test_groebner_requires_simple():
    rep = from_matrix(IntMatrix.from_rows([[1, 1]]))
    with pytest.raises(MustSimplifyError):
        groebner_basis(rep)


def test_binomial_validation():
    with pytest.raises(InvalidArgumentError):
        Binomial((1, 0, 0), (1, 0, 0))
    with pytest.raises(InvalidArgumentError):
        Binomial((1, 0), (0, 1, 0))


@pytest.mark.parametrize("seed", range(8))
def test_random_graph_triangulation_is_unimodular(seed):
    rep = from_graph(random_connected_graph(random.Random(500 + seed), max_vertices=5, max_edges=7))
    t = triangulation(rep)
    vols = simplex_volumes(rep, t)
    assert set(vols) == {1}
    assert sum(vols) == normalized_volume(rep) == sum(hstar(rep, cross_check=False))
    assert h_vector(t) == hstar(rep, cross_check=False)
