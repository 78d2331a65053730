import pytest
from hypothesis import given, settings, strategies as st

from scrollideals.artinian import artinian_quotient
from scrollideals.graphs import ClosedGraph, enumerate_range, random_closed
from scrollideals.hilbert import (
    HVector,
    h_vector,
    has_max_regularity,
    hilbert_series,
    regularity,
    standard_monomials,
    witness_monomial,
)

P = 32003
N14 = ClosedGraph.connected(14, [(1, 5), (2, 6), (3, 8), (4, 9), (6, 10),
                                 (7, 12), (8, 13), (10, 14)])


@pytest.mark.parametrize("n,cliques,h", [
    (2, [(1, 2)], (1, 1)),
    (3, [(1, 3)], (1, 2)),
    (3, [(1, 2), (2, 3)], (1, 2, 1)),
    (4, [(1, 2), (2, 3), (3, 4)], (1, 3, 3, 1)),
    (5, [(1, 3), (2, 4), (3, 5)], (1, 4, 3)),
])
def test_h_vectors(n, cliques, h):
    assert h_vector(ClosedGraph.from_cliques(n, cliques)) == h


def test_large_fixture():
    assert h_vector(N14) == (1, 13, 41, 25, 1)
    assert [str(m) for m in standard_monomials(N14, 4)] == ["x2*x6*x10*x14"]
    assert regularity(N14) == 4 < N14.r
    assert not has_max_regularity(N14)


def test_hvector_product_and_strip():
    assert HVector([1, 1]) * HVector([1, 2]) == (1, 3, 2)
    assert HVector([1, 2, 0, 0]) == (1, 2)


def test_disconnected_product():
    g = ClosedGraph.from_cliques(5, [(1, 2), (3, 5)])
    assert h_vector(g) == HVector([1, 1]) * HVector([1, 2])
    assert hilbert_series(g) == ((1, 3, 2), 3)
    assert witness_monomial(g) is None


def test_witness():
    g = ClosedGraph.connected(6, [(1, 3), (2, 5), (4, 6)])
    w = witness_monomial(g)
    assert str(w) == "x2*x4*x6" and w.degree == g.r
    assert str(witness_monomial(ClosedGraph.connected(3, [(1, 3)]))) == "x2"


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 9), st.integers(0, 10 ** 6))
def test_dp_matches_listing(n, seed):
    g = random_closed(n, seed)
    h = h_vector(g)
    assert [len(standard_monomials(g, d)) for d in range(len(h) + 1)] == list(h) + [0]


def test_witness_is_standard_and_top():
    for g in enumerate_range(7, connected_only=True):
        w = witness_monomial(g)
        if w is None:
            continue
        assert w in standard_monomials(g, g.r)
        assert regularity(g) == g.r


def test_dp_matches_groebner_small():
    for g in enumerate_range(6):
        assert artinian_quotient(g, P).h_vector() == h_vector(g)
