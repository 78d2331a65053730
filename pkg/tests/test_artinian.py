import numpy as np
import pytest

from scrollideals.artinian import (
    ArtinianQuotient,
    GradedQuotient,
    artinian_quotient,
    h_symmetric,
    is_gorenstein_criterion,
    is_gorenstein_socle,
    is_socle_element,
    quotient_basis,
    socle,
    socle_dimension,
)
from scrollideals.graphs import ClosedGraph, enumerate_range
from scrollideals.groebner import buchberger
from scrollideals.polyfield import DimensionError, parse_polynomial

P = 32003


def test_not_artinian_rejected():
    gb = buchberger([parse_polynomial("x1^2", 2, P)])
    with pytest.raises(DimensionError):
        ArtinianQuotient(gb)


def test_bound_guard():
    gb = buchberger([parse_polynomial("x1^5", 2, P), parse_polynomial("x2^5", 2, P)])
    with pytest.raises(DimensionError):
        quotient_basis(gb, bound=10)
    assert len(quotient_basis(gb)) == 25


def test_complete_intersection_socle():
    gb = buchberger([parse_polynomial("x1^2", 2, P), parse_polynomial("x2^3", 2, P)])
    q = ArtinianQuotient(gb)
    s = socle(q)
    assert s.dim == 1 and s.degrees == (3,)
    assert socle_dimension(q) == 1


def test_socle_vectors_are_annihilated():
    g = ClosedGraph.connected(5, [(1, 3), (2, 4), (3, 5)])
    q = artinian_quotient(g, P)
    s = socle(q)
    for v in q.variables:
        assert not ((q.mult_ops[v] @ s.vectors.T) % P).any()
    assert s.dim == socle_dimension(q) == 3


@pytest.mark.parametrize("n,cliques,gor", [
    (2, [(1, 2)], True),
    (3, [(1, 3)], False),
    (3, [(1, 2), (2, 3)], True),
    (4, [(1, 3), (2, 4)], True),
    (5, [(1, 2), (2, 4), (3, 5)], True),
    (5, [(1, 3), (2, 4), (3, 5)], False),
    (4, [(1, 2), (3, 4)], True),
    (5, [(1, 2), (3, 5)], False),
    (6, [(1, 3), (2, 5), (4, 6)], True),
])
def test_gorenstein_examples(n, cliques, gor):
    g = ClosedGraph.from_cliques(n, cliques)
    assert is_gorenstein_criterion(g) is gor
    assert is_gorenstein_socle(g, P) is gor


def test_socle_element_check():
    g = ClosedGraph.connected(14, [(1, 5), (2, 6), (3, 8), (4, 9), (6, 10),
                                   (7, 12), (8, 13), (10, 14)])
    q = artinian_quotient(g, P)
    f = parse_polynomial("x3*x9*x14 - x2*x10*x14", 15, P)
    assert is_socle_element(q, f) and not q.in_ideal(f)
    top = parse_polynomial("x2*x6*x10*x14", 15, P)
    assert is_socle_element(q, top)
    assert not is_socle_element(q, parse_polynomial("x2", 15, P))


def test_graded_quotient_truncation():
    g = ClosedGraph.connected(4, [(1, 2), (2, 3), (3, 4)])
    q = artinian_quotient(g, P)
    t = GradedQuotient(q.gb, q.variables, max_degree=1)
    assert t.hilbert_function() == q.hilbert_function()[:2]
    assert len(t.maps) == 1


def test_coords_and_offsets():
    g = ClosedGraph.connected(3, [(1, 2), (2, 3)])
    q = artinian_quotient(g, P)
    assert q.dim == 4 and q.offsets == [0, 1, 3, 4]
    v = q.coords(parse_polynomial("x2*x3", 4, P))
    assert v.tolist() == [0, 0, 0, 1]
    assert np.array_equal(q.coords(parse_polynomial("x2^2", 4, P)), np.zeros(4))


def test_small_sweep_socle_vs_criterion():
    for g in enumerate_range(7):
        q = artinian_quotient(g, P)
        gor = socle_dimension(q) == 1
        assert gor == is_gorenstein_criterion(g)
        if gor:
            assert h_symmetric(q.h_vector())


def test_three_clique_gorenstein_h_vector():
    g = ClosedGraph.connected(6, [(1, 3), (2, 5), (4, 6)])
    q = artinian_quotient(g, P)
    assert q.h_vector() == (1, 5, 5, 1) and socle_dimension(q) == 1
