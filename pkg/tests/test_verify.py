import json

import pytest

from scrollideals import verify
from scrollideals.graphs import ClosedGraph
from scrollideals.groebner import buchberger
from scrollideals.ideals import build_ideal
from scrollideals.polyfield import iter_monomials


def test_maxreg_single_n():
    rep = verify.verify_maxreg(4, n_min=4)
    assert rep.instances == 6 and rep.ok
    assert (rep.n_min, rep.n_max) == (4, 4)


def test_maxreg_cumulative_and_extra():
    extra = [ClosedGraph.connected(3, [(1, 2), (2, 3)])]
    rep = verify.verify_maxreg(4, extra=extra)
    assert rep.instances == 1 + 2 + 6 + 1 and rep.ok


def test_range_checks():
    with pytest.raises(ValueError):
        verify.verify_maxreg(1)
    with pytest.raises(ValueError):
        verify.verify_gorenstein(5, n_min=1)


def test_injected_failure_is_reported():
    def bad(g, prime):
        return g.n != 3, {"why": "injected"}
    rep = verify._run("probe", verify.enumerate_range(4), bad, 32003, 2, 4)
    assert not rep.ok
    assert rep.counterexample["graph"]["n"] == 3  # smallest failing instance
    assert rep.counterexample["why"] == "injected"


@pytest.mark.parametrize("name", ["gorenstein", "structural", "cross", "betti"])
def test_small_suites(name):
    (rep,) = verify.run_suite(name, n_max=5)
    assert rep.ok and rep.instances > 0


def test_enumeration_suite_counts():
    rep = verify.verify_enumeration(5)
    assert rep.ok
    assert rep.notes["counts"]["5c"] == [14, 14]


def test_fixtures():
    rep = verify.worked_fixtures()
    assert rep.ok, rep.counterexample
    assert rep.notes["n15.top_degree_observed"] == 6


def test_report_json_is_deterministic():
    a = json.dumps(verify.verify_gorenstein(5).to_json(), sort_keys=True)
    b = json.dumps(verify.verify_gorenstein(5).to_json(), sort_keys=True)
    assert a == b
    assert "wall_time" in verify.verify_maxreg(3).to_json(timings=True)


def test_workers_agree_with_serial():
    serial = verify.verify_gorenstein(6).to_json()
    parallel = verify.verify_gorenstein(6, workers=2).to_json()
    assert serial == parallel


def test_maxreg_with_injected_fixture():
    rep = verify.verify_maxreg(3, extra=[verify.FIXTURE_N14])
    assert rep.ok and rep.instances == 1 + 2 + 1


def test_complete_graph_initial_ideal():
    for n in range(2, 7):
        g = ClosedGraph.connected(n, [(1, n)])
        gb = buchberger(build_ideal(g).generators)
        square = {e for e in iter_monomials(n + 1, 2) if e[0] == 0 and e[n] == 0}
        assert set(gb.leading_exps()) == square
