import pytest

from scrollideals.graphs import ClosedGraph
from scrollideals.ideals import (
    IdealPresentation,
    MonomialIdeal,
    artinian_reduce,
    block_initial_ideal,
    build_ideal,
    edge_generator,
    monomial_presentation,
    predicted_initial,
)
from scrollideals.polyfield import Monomial, Polynomial

P = 32003


def test_edge_generator_sign():
    assert str(edge_generator(1, 3, 3, P)) == "-x2*x3 + x1*x4"


def test_complete_graph_is_rational_normal_curve():
    # K_n gives all C(n,2) minors of the Hankel matrix
    for n in range(2, 7):
        p = build_ideal(ClosedGraph.connected(n, [(1, n)]), P)
        assert len(p.generators) == n * (n - 1) // 2
        assert p.nvars == n + 1 and p.kind == "full"


def test_predicted_initial_blocks():
    g = ClosedGraph.connected(4, [(1, 3), (2, 4)])
    init = predicted_initial(g)
    got = sorted(str(m) for m in init.generators)
    assert got == sorted(["x2^2", "x2*x3", "x3^2", "x3*x4", "x4^2"])


def test_block_ideal_minimalizes():
    m = block_initial_ideal(4, [(2, 3), (3, 3)])
    assert len(m.gens) == 3
    assert m.contains(Monomial.from_indices([2, 3, 4], 5))
    assert not m.contains(Monomial.from_indices([2, 4], 5))


def test_artinian_reduce():
    g = ClosedGraph.from_cliques(5, [(1, 2), (3, 5)])
    red = artinian_reduce(build_ideal(g, P), g)
    assert red.kind == "artinian"
    assert red.variables == (2, 4, 5)
    assert all(f for f in red.generators)
    for f in red.generators:
        for k in red.killed:
            assert all(e[k - 1] == 0 for e in f.coeffs)


def test_monomial_presentation():
    g = ClosedGraph.connected(3, [(1, 2), (2, 3)])
    p = monomial_presentation(g, P)
    assert p.kind == "artinian"
    assert sorted(str(f) for f in p.generators) == ["x2^2", "x3^2"]


def test_zero_generator_rejected():
    with pytest.raises(ValueError):
        IdealPresentation(2, (Polynomial.zero(2, P),))


def test_monomial_ideal_without_variables():
    m = MonomialIdeal(3, frozenset({(1, 1, 0), (0, 0, 2)}))
    assert m.without_variables([1]).gens == frozenset({(0, 0, 2)})
