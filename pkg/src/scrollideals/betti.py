"""Graded Betti numbers from Koszul homology over GF(p)."""

from __future__ import annotations

import itertools
from math import comb

import numpy as np

from .artinian import ArtinianQuotient, GradedQuotient
from .graphs import ClosedGraph
from .groebner import buchberger
from .hilbert import h_vector
from .ideals import (
    IdealPresentation,
    artinian_reduce,
    build_ideal,
    monomial_presentation,
)
from .linalg import rank_mod_p
from .polyfield import DEFAULT_PRIME, DimensionError


class BettiTable:
    """Graded Betti numbers ``beta[i, j]`` of a quotient ``S/I``."""

    def __init__(self, entries: dict[tuple[int, int], int]):
        self.entries = {(int(i), int(j)): int(v) for (i, j), v in entries.items() if v}

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries.get(ij, 0)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self):
        return f"BettiTable({dict(sorted(self.entries.items()))})"

    @property
    def projective_dimension(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    @property
    def regularity(self) -> int:
        return max((j - i for i, j in self.entries), default=0)

    def total(self, i: int) -> int:
        return sum(v for (a, _), v in self.entries.items() if a == i)

    def column(self, i: int) -> dict[int, int]:
        return {j: v for (a, j), v in sorted(self.entries.items()) if a == i}

    def to_json(self) -> dict[str, int]:
        return {f"{i},{j}": v for (i, j), v in sorted(self.entries.items())}

    @classmethod
    def from_json(cls, data: dict[str, int]) -> "BettiTable":
        return cls({tuple(int(x) for x in k.split(",")): v for k, v in data.items()})

    def pretty(self) -> str:
        """Macaulay2-style grid: rows ``j - i``, columns ``i``."""
        if not self.entries:
            return "(zero module)"
        pd, reg = self.projective_dimension, self.regularity
        width = max(len(str(v)) for v in self.entries.values()) + 1
        width = max(width, len(str(pd)) + 1)
        lines = ["      " + "".join(f"{i:>{width}}" for i in range(pd + 1))]
        lines.append("total:" + "".join(f"{self.total(i):>{width}}" for i in range(pd + 1)))
        for row in range(reg + 1):
            cells = []
            for i in range(pd + 1):
                v = self[i, i + row]
                cells.append(f"{v if v else '.':>{width}}")
            lines.append(f"{row:>5}:" + "".join(cells))
        return "\n".join(lines)


def _koszul_differential(q: GradedQuotient, i: int, deg: int) -> np.ndarray:
    """Matrix of ``Λ^i V ⊗ A_deg -> Λ^{i-1} V ⊗ A_{deg+1}``."""
    vars_ = q.variables
    src_sets = list(itertools.combinations(range(len(vars_)), i))
    tgt_sets = {s: k for k, s in enumerate(itertools.combinations(range(len(vars_)), i - 1))}
    a_src = len(q.pieces[deg])
    a_tgt = len(q.pieces[deg + 1]) if deg + 1 < len(q.pieces) else 0
    mat = np.zeros((len(tgt_sets) * a_tgt, len(src_sets) * a_src), dtype=np.int64)
    if mat.size == 0:
        return mat
    p = q.prime
    maps = q.maps[deg]
    for col, s in enumerate(src_sets):
        for k, pos in enumerate(s):
            t = s[:k] + s[k + 1:]
            row = tgt_sets[t]
            block = maps[vars_[pos]]
            if k % 2:
                block = (-block) % p
            mat[row * a_tgt:(row + 1) * a_tgt, col * a_src:(col + 1) * a_src] = block
    return mat


def betti_of_quotient(q: GradedQuotient, max_offset: int | None = None) -> BettiTable:
    """Koszul homology of ``q`` over its variables.

    ``max_offset`` caps ``j - i``; it must leave one computed piece (with its
    multiplication maps) above the largest offset requested.
    """
    m = len(q.variables)
    top = len(q.pieces) - 1 if max_offset is None else max_offset
    if max_offset is not None and max_offset >= len(q.maps):
        raise DimensionError("quotient truncated below the requested offset")
    ranks: dict[tuple[int, int], int] = {}

    def rank(i: int, deg: int) -> int:
        if i <= 0 or i > m or deg < 0 or deg >= len(q.pieces):
            return 0
        key = (i, deg)
        if key not in ranks:
            ranks[key] = rank_mod_p(_koszul_differential(q, i, deg), q.prime)
        return ranks[key]

    entries = {}
    for deg in range(top + 1):
        dim_a = len(q.pieces[deg]) if deg < len(q.pieces) else 0
        for i in range(m + 1):
            b = comb(m, i) * dim_a - rank(i, deg) - rank(i + 1, deg - 1)
            if b:
                entries[(i, i + deg)] = b
    return BettiTable(entries)


def koszul_betti(p: IdealPresentation, max_offset: int | None = None) -> BettiTable:
    """Graded Betti numbers of ``S/I`` for the presentation ``p``.

    Artinian presentations are handled exactly.  Full presentations need
    ``max_offset`` (a bound on ``j - i``, e.g. the number of cliques).
    """
    if p.kind == "artinian":
        q = ArtinianQuotient.from_presentation(p)
        return betti_of_quotient(q)
    if max_offset is None:
        raise DimensionError("non-Artinian presentation needs max_offset")
    gb = buchberger(p.with_killed_variables(), p.nvars, p.prime)
    q = GradedQuotient(gb, p.variables, max_degree=max_offset + 1)
    return betti_of_quotient(q, max_offset)


def graph_betti(g: ClosedGraph, prime: int = DEFAULT_PRIME,
                monomial_side: bool = False) -> BettiTable:
    if monomial_side:
        return koszul_betti(monomial_presentation(g, prime))
    return koszul_betti(artinian_reduce(build_ideal(g, prime), g))


class BettiPolynomial(dict):
    """``B(s, t)`` as ``{(i, j): coefficient}``."""

    def __mul__(self, other: "BettiPolynomial") -> "BettiPolynomial":
        out: dict = {}
        for (i1, j1), a in self.items():
            for (i2, j2), b in other.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + a * b
        return BettiPolynomial({k: v for k, v in out.items() if v})

    @classmethod
    def one(cls) -> "BettiPolynomial":
        return cls({(0, 0): 1})

    def __str__(self):
        if not self:
            return "0"
        parts = []
        for (i, j), c in sorted(self.items()):
            mono = "".join(
                (f"{v}^{e}" if e > 1 else v) for v, e in (("s", i), ("t", j)) if e)
            parts.append(mono if c == 1 and mono else f"{c}{mono}")
        return " + ".join(parts)


def betti_polynomial(t: BettiTable) -> BettiPolynomial:
    poly = BettiPolynomial(t.entries)
    if not poly:
        return BettiPolynomial.one()
    return poly


def extremal_betti_formula(n: int, i: int) -> int:
    """``beta_{i,i+1}`` of the two-clique Gorenstein graph ``[1,n-1],[2,n]``."""
    if n < 3 or not 1 <= i <= n - 1:
        raise ValueError(f"need n >= 3 and 1 <= i <= n-1, got n={n}, i={i}")
    return comb(n, i + 1) * i - comb(n - 1, i - 1)


def extremal_betti_table(n: int) -> BettiTable:
    entries = {(0, 0): 1, (n - 1, n + 1): 1}
    for i in range(1, n):
        entries[(i, i + 1)] = extremal_betti_formula(n, i)
    return BettiTable(entries)


def _consecutive_cliques_touch(g: ClosedGraph) -> bool:
    return all(cl[k + 1][0] == cl[k][1]
               for comp in g.components for cl in [comp.cliques]
               for k in range(len(cl) - 1))


def product_formula_check(g: ClosedGraph, by: str = "components",
                          prime: int = DEFAULT_PRIME) -> bool:
    """Global Betti polynomial equals the product over components (or cliques)."""
    whole = betti_polynomial(graph_betti(g, prime))
    prod = BettiPolynomial.one()
    if by == "components":
        for h in g.component_graphs():
            prod = prod * betti_polynomial(graph_betti(h, prime))
    elif by == "cliques":
        if not _consecutive_cliques_touch(g):
            raise ValueError("clique factorization needs a_{i+1} = b_i throughout")
        for a, b in g.cliques:
            k = ClosedGraph.connected(b - a + 1, [(1, b - a + 1)])
            prod = prod * betti_polynomial(graph_betti(k, prime))
    else:
        raise ValueError(f"unknown factorization {by!r}")
    return whole == prod


def verify_betti_equality(g: ClosedGraph, prime: int = DEFAULT_PRIME) -> bool:
    """Betti tables of ``S/I_G`` and ``S/in(I_G)`` coincide."""
    if not g.is_connected() or not _consecutive_cliques_touch(g):
        raise ValueError("needs a connected graph with a_{i+1} = b_i for all i")
    return graph_betti(g, prime) == graph_betti(g, prime, monomial_side=True)


def gorenstein_by_betti(g: ClosedGraph, prime: int = DEFAULT_PRIME,
                        table: BettiTable | None = None) -> bool:
    """Last Betti column is a single 1 in internal degree ``(n - c) + reg``."""
    t = table if table is not None else graph_betti(g, prime)
    last = g.n - g.c
    col = t.column(last)
    return col == {last + t.regularity: 1}


def euler_characteristic_matches(t: BettiTable, h, nvars: int) -> bool:
    """``sum (-1)^i beta_{i,j} t^j == h(t) (1 - t)^nvars`` coefficient-wise."""
    lhs: dict[int, int] = {}
    for (i, j), v in t.entries.items():
        lhs[j] = lhs.get(j, 0) + (-1) ** i * v
    rhs: dict[int, int] = {}
    for d, hd in enumerate(h):
        for k in range(nvars + 1):
            c = hd * comb(nvars, k) * (-1) ** k
            rhs[d + k] = rhs.get(d + k, 0) + c
    keys = set(lhs) | set(rhs)
    return all(lhs.get(k, 0) == rhs.get(k, 0) for k in keys)


def graph_euler_check(g: ClosedGraph, table: BettiTable) -> bool:
    return euler_characteristic_matches(table, h_vector(g), len(g.surviving_variables()))
