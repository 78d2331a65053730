"""Acceptance criteria, one test each.

Every test records a single PASS/FAIL line in ``RESULTS``; the conftest hook
prints them after the run.  ``python tests/test_acceptance.py`` runs the same
checks without pytest.
"""

import time

from scrollideals import verify
from scrollideals.betti import extremal_betti_formula, graph_betti
from scrollideals.graphs import ClosedGraph

RESULTS: dict[int, str] = {}


def _record(k: int, title: str, ok: bool, detail: str, start: float) -> bool:
    status = "PASS" if ok else "FAIL"
    RESULTS[k] = f"[{status}] criterion {k}: {title} ({detail}; {time.perf_counter() - start:.1f}s)"
    print(RESULTS[k])
    return ok


def _suite_detail(rep) -> str:
    text = f"{rep.passed}/{rep.instances} instances, n={rep.n_min}..{rep.n_max}"
    if rep.counterexample:
        text += f", first counterexample {rep.counterexample}"
    return text


def test_criterion_1_max_regularity():
    t = time.perf_counter()
    rep = verify.verify_maxreg(10)
    assert _record(1, "reg = r iff no three consecutive cliques meet", rep.ok,
                   _suite_detail(rep), t)


_GORENSTEIN = {}


def _gorenstein_report():
    if "rep" not in _GORENSTEIN:
        _GORENSTEIN["rep"] = verify.verify_gorenstein(9)
    return _GORENSTEIN["rep"]


def test_criterion_2_gorenstein_socle_vs_criterion():
    t = time.perf_counter()
    rep = _gorenstein_report()
    assert _record(2, "socle dimension 1 iff clique criterion", rep.ok,
                   _suite_detail(rep), t)


def test_criterion_3_gorenstein_forces_max_regularity():
    t = time.perf_counter()
    rep = _gorenstein_report()
    ok = rep.ok and rep.notes["gorenstein_max_reg_and_symmetric"]
    detail = (f"{rep.notes['gorenstein_instances']} Gorenstein graphs, "
              f"reg = r and symmetric h: {rep.notes['gorenstein_max_reg_and_symmetric']}")
    assert _record(3, "Gorenstein implies reg = r and symmetric h", ok, detail, t)


def test_criterion_4_structure():
    t = time.perf_counter()
    rep = verify.verify_structural(8)
    assert _record(4, "quadratic GB, block initial ideal, regular sequence, basis count",
                   rep.ok, _suite_detail(rep), t)


def test_criterion_5_initial_ideal_betti():
    t = time.perf_counter()
    rep = verify.verify_betti_prop(6)
    assert _record(5, "Betti tables of I and in(I) agree, product over cliques",
                   rep.ok, _suite_detail(rep), t)


def test_criterion_6_extremal_tables():
    t = time.perf_counter()
    bad = []
    for n in range(3, 7):
        tab = graph_betti(ClosedGraph.connected(n, [(1, n - 1), (2, n)]))
        for i in range(1, n):
            if tab[i, i + 1] != extremal_betti_formula(n, i):
                bad.append(("linear", n, i, tab[i, i + 1]))
        for i in range(1, n - 1):
            if tab[i, i + 2] != 0:
                bad.append(("quadratic", n, i, tab[i, i + 2]))
        if tab[n - 1, n + 1] != 1 or tab.total(n - 1) != 1 or tab.projective_dimension != n - 1:
            bad.append(("last", n, tab.column(n - 1)))
        kn = graph_betti(ClosedGraph.connected(n, [(1, n)]))
        if kn.total(n - 1) != n - 1 or kn.projective_dimension != n - 1:
            bad.append(("complete", n, kn.column(n - 1)))
    detail = "n=3..6 two-clique tables and K_n" + (f", mismatches {bad}" if bad else "")
    assert _record(6, "extremal Gorenstein Betti tables", not bad, detail, t)


def test_criterion_7_fixtures():
    t = time.perf_counter()
    rep = verify.worked_fixtures()
    detail = (f"{rep.passed}/{rep.instances} fixture checks; n=15 top degree observed "
              f"{rep.notes['n15.top_degree_observed']} (label 5 flagged)")
    if rep.counterexample:
        detail += f", failing {rep.counterexample}"
    assert _record(7, "worked fixtures n=14, 15, 22", rep.ok, detail, t)


def test_criterion_8_cross_oracle():
    t = time.perf_counter()
    rep = verify.verify_cross_oracle(6)
    assert _record(8, "Betti, socle and criterion verdicts agree; Euler identity",
                   rep.ok, _suite_detail(rep), t)


def test_criterion_9_enumeration():
    t = time.perf_counter()
    rep = verify.verify_enumeration(5)
    counts = rep.notes["counts"]
    connected = [counts[f"{n}c"][0] for n in range(2, 6)]
    ok = rep.ok and connected == [1, 2, 5, 14]
    assert _record(9, "interval enumeration equals brute force",
                   ok, f"{_suite_detail(rep)}, connected counts {connected}", t)


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
