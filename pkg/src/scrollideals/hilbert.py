"""Hilbert data of closed-graph quotients read off the clique intervals.

Standard monomials of the Artinian reduction are squarefree products using
at most one index from each block ``[a_i + 1, b_i]``.
"""

from __future__ import annotations

from .graphs import ClosedGraph
from .polyfield import Monomial


class HVector(tuple):
    """Numerator coefficients ``h_0, ..., h_s`` of the Hilbert series."""

    def __new__(cls, coeffs):
        coeffs = [int(c) for c in coeffs]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        return super().__new__(cls, coeffs)

    @property
    def degree(self) -> int:
        return len(self) - 1

    def total(self) -> int:
        return sum(self)

    def __mul__(self, other):
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self):
            for j, b in enumerate(other):
                out[i + j] += a * b
        return HVector(out)


def _next_index(blocks, k: int) -> int:
    """Smallest index allowed after ``k``: one past every block containing ``k``."""
    nxt = k + 1
    for lo, hi in blocks:
        if lo <= k <= hi and hi + 1 > nxt:
            nxt = hi + 1
    return nxt


def _component_h(comp) -> HVector:
    blocks = comp.blocks()
    lo, hi = comp.lo + 1, comp.hi
    # ways[k][d]: admissible sets of size d whose largest index is k
    ways: dict[int, list[int]] = {}
    total = [1]
    for k in range(lo, hi + 1):
        row = [0, 1]
        for j in range(lo, k):
            if _next_index(blocks, j) <= k:
                prev = ways[j]
                if len(row) < len(prev) + 1:
                    row.extend([0] * (len(prev) + 1 - len(row)))
                for d, w in enumerate(prev):
                    row[d + 1] += w
        ways[k] = row
        if len(total) < len(row):
            total.extend([0] * (len(row) - len(total)))
        for d, w in enumerate(row):
            total[d] += w
    return HVector(total)


def h_vector(g: ClosedGraph) -> HVector:
    h = HVector([1])
    for comp in g.components:
        h = h * _component_h(comp)
    return h


def standard_monomials(g: ClosedGraph, d: int) -> list[Monomial]:
    """Degree-``d`` basis monomials of the Artinian reduction (explicit listing)."""
    blocks = g.blocks()
    allowed = g.surviving_variables()
    nv = g.n + 1
    out = []

    def extend(chosen: list[int], start_pos: int):
        if len(chosen) == d:
            out.append(Monomial.from_indices(chosen, nv))
            return
        floor = _next_index(blocks, chosen[-1]) if chosen else 0
        for pos in range(start_pos, len(allowed)):
            k = allowed[pos]
            if k >= floor:
                chosen.append(k)
                extend(chosen, pos + 1)
                chosen.pop()

    if d >= 0:
        extend([], 0)
    return sorted(out)


def regularity(g: ClosedGraph) -> int:
    return h_vector(g).degree


def has_max_regularity(g: ClosedGraph) -> bool:
    """No three consecutive cliques of any component share a vertex."""
    for comp in g.components:
        cl = comp.cliques
        for i in range(len(cl) - 2):
            if cl[i + 2][0] <= cl[i][1]:
                return False
    return True


def witness_monomial(g: ClosedGraph) -> Monomial | None:
    """``x_2 x_{b_1+1} ... x_{b_{r-2}+1} x_n`` for a connected max-regularity graph."""
    if not g.is_connected() or not has_max_regularity(g):
        return None
    cl = g.cliques
    r = len(cl)
    if r == 1:
        idx = [2]
    else:
        idx = [2] + [cl[i][1] + 1 for i in range(r - 2)] + [g.n]
    return Monomial.from_indices(idx, g.n + 1)


def hilbert_series(g: ClosedGraph) -> tuple[HVector, int]:
    """``(P(t), dim)`` with ``HS(S/I_G) = P(t) / (1 - t)^dim``."""
    return h_vector(g), 1 + g.c
