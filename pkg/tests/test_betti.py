import pytest

from scrollideals.betti import (
    BettiPolynomial,
    BettiTable,
    betti_polynomial,
    euler_characteristic_matches,
    extremal_betti_formula,
    extremal_betti_table,
    gorenstein_by_betti,
    graph_betti,
    graph_euler_check,
    koszul_betti,
    product_formula_check,
    verify_betti_equality,
)
from scrollideals.graphs import ClosedGraph, enumerate_range
from scrollideals.ideals import build_ideal
from scrollideals.polyfield import DimensionError
from scrollideals.verify import verify_betti_prop

P = 32003


def test_path_on_three():
    t = graph_betti(ClosedGraph.connected(3, [(1, 2), (2, 3)]), P)
    assert t == BettiTable({(0, 0): 1, (1, 2): 2, (2, 4): 1})
    assert t.projective_dimension == 2 and t.regularity == 2


def test_twisted_cubic():
    t = graph_betti(ClosedGraph.connected(3, [(1, 3)]), P)
    assert t == BettiTable({(0, 0): 1, (1, 2): 3, (2, 3): 2})


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_extremal_tables(n):
    g = ClosedGraph.connected(n, [(1, n - 1), (2, n)])
    t = graph_betti(g, P)
    assert t == extremal_betti_table(n)
    assert all(t[i, i + 2] == 0 for i in range(n - 1))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_complete_graph_last_betti(n):
    t = graph_betti(ClosedGraph.connected(n, [(1, n)]), P)
    assert t.column(n - 1) == {n: n - 1}


def test_extremal_formula_values():
    assert [extremal_betti_formula(4, i) for i in (1, 2, 3)] == [5, 5, 0]
    assert extremal_betti_formula(3, 1) == 2
    with pytest.raises(ValueError):
        extremal_betti_formula(2, 1)


def test_full_ring_matches_artinian():
    g = ClosedGraph.connected(4, [(1, 3), (2, 4)])
    full = koszul_betti(build_ideal(g, P), max_offset=g.r)
    assert full == graph_betti(g, P)
    with pytest.raises(DimensionError):
        koszul_betti(build_ideal(g, P))


def test_initial_ideal_equality():
    assert verify_betti_equality(ClosedGraph.connected(5, [(1, 2), (2, 4), (4, 5)]), P)
    with pytest.raises(ValueError):
        verify_betti_equality(ClosedGraph.connected(4, [(1, 3), (2, 4)]), P)


def test_product_formulas():
    g = ClosedGraph.from_cliques(6, [(1, 3), (4, 6)])
    assert product_formula_check(g, "components", P)
    assert product_formula_check(ClosedGraph.connected(5, [(1, 3), (3, 5)]), "cliques", P)


def test_betti_polynomial_algebra():
    a = BettiPolynomial({(0, 0): 1, (1, 2): 1})
    assert a * a == {(0, 0): 1, (1, 2): 2, (2, 4): 1}
    assert str(a) == "1 + st^2"
    assert betti_polynomial(BettiTable({})) == BettiPolynomial.one()


def test_json_roundtrip_and_pretty():
    t = extremal_betti_table(4)
    assert BettiTable.from_json(t.to_json()) == t
    assert "total:" in t.pretty()


def test_euler_and_gorenstein_small():
    for g in enumerate_range(5):
        t = graph_betti(g, P)
        assert graph_euler_check(g, t)
    assert not euler_characteristic_matches(BettiTable({(0, 0): 1}), [1, 1], 1)
    assert gorenstein_by_betti(ClosedGraph.connected(4, [(1, 3), (2, 4)]), P)
    assert not gorenstein_by_betti(ClosedGraph.connected(3, [(1, 3)]), P)


def test_monomial_side_differs_in_general():
    g = ClosedGraph.connected(4, [(1, 3), (2, 4)])
    assert graph_betti(g, P, monomial_side=True) != graph_betti(g, P)


def test_initial_ideal_sweep_in_characteristic_two():
    rep = verify_betti_prop(6, prime=2)
    assert rep.ok and rep.instances > 0
