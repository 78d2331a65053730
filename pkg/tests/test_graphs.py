import pytest
from hypothesis import given, strategies as st

from scrollideals.graphs import (
    ClosedGraph,
    EdgeList,
    InterleavedComponentsError,
    IsolatedVertexError,
    NotClosedError,
    ValidationError,
    brute_force_closed_count,
    cliques_from_edges,
    edges_from_cliques,
    enumerate_all,
    enumerate_connected,
    graph_from_json,
    is_closed,
    random_closed,
)


def test_from_cliques_and_invariants():
    g = ClosedGraph.from_cliques(5, [(1, 3), (2, 4), (3, 5)])
    assert g.r == 3 and g.c == 1
    assert g.killed_variables() == [1, 6]
    assert list(g.blocks()) == [(2, 3), (3, 4), (4, 5)]


def test_disconnected():
    g = ClosedGraph.from_cliques(5, [(1, 2), (3, 5)])
    assert g.c == 2
    assert g.killed_variables() == [1, 6, 3]
    assert [h.n for h in g.component_graphs()] == [2, 3]


@pytest.mark.parametrize("n,cliques,exc", [
    (4, [(1, 3), (1, 4)], ValidationError),  # nested cliques
    (5, [(1, 2), (4, 5)], ValidationError),  # vertex 3 uncovered
    (3, [(1, 1), (2, 3)], IsolatedVertexError),
])
def test_invalid_cliques(n, cliques, exc):
    with pytest.raises(exc):
        ClosedGraph.from_cliques(n, cliques)


def test_error_hierarchy():
    assert issubclass(NotClosedError, ValidationError)
    assert issubclass(InterleavedComponentsError, ValidationError)


def test_not_closed_edges():
    assert not is_closed(EdgeList.of(3, [(1, 3)]))
    with pytest.raises(NotClosedError):
        cliques_from_edges(EdgeList.of(3, [(1, 3)]))
    # a claw-free but badly labeled path
    with pytest.raises(ValidationError):
        graph_from_json({"n": 4, "edges": [[1, 2], [1, 3], [2, 4]]})


def test_json_forms():
    g = graph_from_json('{"n": 4, "edges": [[1,2],[1,3],[2,3],[2,4],[3,4]]}')
    assert g.cliques == ((1, 3), (2, 4))
    assert graph_from_json(g.to_json()) == g
    with pytest.raises(ValueError):
        graph_from_json({"n": 3})
    with pytest.raises(ValueError):
        graph_from_json({"n": 3, "cliques": [[1, 3]], "edges": []})


@pytest.mark.parametrize("n,conn,total", [
    (2, 1, 1), (3, 2, 2), (4, 5, 6), (5, 14, 18), (6, 42, 57), (7, 132, 186),
])
def test_enumeration_counts(n, conn, total):
    assert len(list(enumerate_connected(n))) == conn
    assert len(list(enumerate_all(n))) == total


@pytest.mark.parametrize("n", [2, 3, 4])
def test_brute_force_matches(n):
    assert brute_force_closed_count(n, True) == len(list(enumerate_connected(n)))
    assert brute_force_closed_count(n, False) == len(list(enumerate_all(n)))


def test_enumeration_order_and_uniqueness():
    gs = list(enumerate_all(6))
    keys = [g.flat_key() for g in gs]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)


@given(st.integers(2, 12), st.integers(0, 10 ** 6))
def test_random_roundtrip(n, seed):
    g = random_closed(n, seed)
    e = edges_from_cliques(g)
    assert is_closed(e)
    assert cliques_from_edges(e) == g
    assert len(e.edges) == g.edge_count()
