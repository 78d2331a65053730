"""Finite-dimensional graded quotients, their socles, and Gorenstein tests."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .graphs import ClosedGraph
from .groebner import GroebnerBasis, NormalFormCache, buchberger
from .hilbert import HVector
from .ideals import IdealPresentation, artinian_reduce, build_ideal
from .linalg import nullspace_mod_p, rank_mod_p
from .polyfield import (
    DEFAULT_PRIME,
    DimensionError,
    Monomial,
    Polynomial,
    degrevlex_key,
    mono_mul,
)


def _unit(nvars: int, v: int) -> tuple:
    return tuple(1 if k == v - 1 else 0 for k in range(nvars))


class GradedQuotient:
    """Degree pieces of ``S/I`` spanned by standard monomials in ``variables``.

    ``pieces[d]`` lists the degree-``d`` standard monomials in ascending
    degrevlex order; ``maps[d][v]`` is multiplication by ``x_v`` from degree
    ``d`` to ``d + 1`` as a ``len(pieces[d+1]) x len(pieces[d])`` matrix.
    """

    def __init__(self, gb: GroebnerBasis, variables: Sequence[int],
                 max_degree: int | None = None, bound: int | None = None):
        self.gb = gb
        self.prime = gb.prime
        self.nvars = gb.nvars
        self.variables = tuple(variables)
        self.nf = NormalFormCache(gb)
        units = {v: _unit(self.nvars, v) for v in self.variables}
        pieces: list[list[tuple]] = []
        current = [(0,) * self.nvars] if self.nf.is_standard((0,) * self.nvars) else []
        total = 0
        d = 0
        while current:
            current.sort(key=degrevlex_key)
            pieces.append(current)
            total += len(current)
            if bound is not None and total > bound:
                raise DimensionError(f"quotient exceeds {bound} basis monomials; not Artinian?")
            if max_degree is not None and d == max_degree:
                break
            nxt = {mono_mul(m, units[v]) for m in current for v in self.variables}
            current = [m for m in nxt if self.nf.is_standard(m)]
            d += 1
        self.pieces = pieces
        self.index = {m: (deg, i) for deg, piece in enumerate(pieces)
                      for i, m in enumerate(piece)}
        self.maps: list[dict[int, np.ndarray]] = []
        for deg in range(len(pieces) - (1 if max_degree is not None
                                         and len(pieces) == max_degree + 1 else 0)):
            self.maps.append(self._degree_maps(deg, units))

    def _degree_maps(self, d: int, units) -> dict[int, np.ndarray]:
        src = self.pieces[d]
        tgt = self.pieces[d + 1] if d + 1 < len(self.pieces) else []
        tidx = {m: i for i, m in enumerate(tgt)}
        out = {}
        for v in self.variables:
            mat = np.zeros((len(tgt), len(src)), dtype=np.int64)
            for j, m in enumerate(src):
                for e, c in self.nf.monomial(mono_mul(m, units[v])).items():
                    mat[tidx[e], j] = c
            out[v] = mat
        return out

    @property
    def top_degree(self) -> int:
        return len(self.pieces) - 1

    def hilbert_function(self) -> list[int]:
        return [len(p) for p in self.pieces]

    def reduce(self, f: Polynomial) -> Polynomial:
        return Polynomial._raw(self.nvars, self.nf.reduce(f.coeffs), self.prime)

    def in_ideal(self, f: Polynomial) -> bool:
        return not self.nf.reduce(f.coeffs)


class ArtinianQuotient(GradedQuotient):
    """The whole finite-dimensional quotient with global multiplication matrices."""

    def __init__(self, gb: GroebnerBasis, variables: Sequence[int] | None = None,
                 bound: int | None = None):
        if variables is None:
            variables = range(1, gb.nvars + 1)
        _check_artinian(gb, variables)
        super().__init__(gb, variables, bound=bound)
        self.offsets = np.cumsum([0] + [len(p) for p in self.pieces]).tolist()

    @classmethod
    def from_presentation(cls, p: IdealPresentation) -> "ArtinianQuotient":
        gb = buchberger(p.with_killed_variables(), p.nvars, p.prime)
        return cls(gb, p.variables)

    @property
    def basis(self) -> list[Monomial]:
        return [Monomial(m) for piece in self.pieces for m in piece]

    @property
    def dim(self) -> int:
        return self.offsets[-1]

    @cached_property
    def mult_ops(self) -> dict[int, np.ndarray]:
        n = self.dim
        ops = {}
        for v in self.variables:
            mat = np.zeros((n, n), dtype=np.int64)
            for d, maps in enumerate(self.maps):
                block = maps[v]
                if block.size:
                    mat[self.offsets[d + 1]:self.offsets[d + 2],
                        self.offsets[d]:self.offsets[d + 1]] = block
            ops[v] = mat
        return ops

    def coords(self, f: Polynomial) -> np.ndarray:
        vec = np.zeros(self.dim, dtype=np.int64)
        for e, c in self.nf.reduce(f.coeffs).items():
            d, i = self.index[e]
            vec[self.offsets[d] + i] = c
        return vec

    def h_vector(self) -> HVector:
        return HVector(self.hilbert_function())


def _check_artinian(gb: GroebnerBasis, variables) -> None:
    lms = gb.leading_exps()
    for v in variables:
        k = v - 1
        if not any(e[k] > 0 and sum(e) == e[k] for e in lms):
            raise DimensionError(f"no pure power of x{v} among leading monomials; not Artinian")


def quotient_basis(gb: GroebnerBasis, bound: int | None = None) -> list[Monomial]:
    """Standard monomials of an Artinian ideal, ascending by degree then degrevlex."""
    return ArtinianQuotient(gb, bound=bound).basis


@dataclass(frozen=True)
class SocleBasis:
    vectors: np.ndarray  # rows are basis-coordinate vectors
    degrees: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.degrees)


def socle(q: ArtinianQuotient) -> SocleBasis:
    """Common kernel of all multiplication maps, solved one degree at a time."""
    vecs, degs = [], []
    for d, piece in enumerate(q.pieces):
        if d < len(q.maps) and q.pieces[d + 1:]:
            stack = np.vstack([q.maps[d][v] for v in q.variables])
            kern = nullspace_mod_p(stack, q.prime)
        else:
            kern = np.eye(len(piece), dtype=np.int64)
        for row in kern:
            full = np.zeros(q.dim, dtype=np.int64)
            full[q.offsets[d]:q.offsets[d + 1]] = row
            vecs.append(full)
            degs.append(d)
    arr = np.array(vecs, dtype=np.int64).reshape(len(vecs), q.dim)
    return SocleBasis(arr, tuple(degs))


def socle_dimension(q: ArtinianQuotient) -> int:
    total = 0
    for d, piece in enumerate(q.pieces):
        if d + 1 < len(q.pieces):
            stack = np.vstack([q.maps[d][v] for v in q.variables])
            total += len(piece) - rank_mod_p(stack, q.prime)
        else:
            total += len(piece)
    return total


def is_socle_element(q: ArtinianQuotient, f: Polynomial) -> bool:
    """``x_v f`` lies in the ideal for every surviving variable ``x_v``."""
    return all(q.in_ideal(f * Polynomial.var(v, q.nvars, q.prime)) for v in q.variables)


def artinian_quotient(g: ClosedGraph, prime: int = DEFAULT_PRIME) -> ArtinianQuotient:
    return ArtinianQuotient.from_presentation(artinian_reduce(build_ideal(g, prime), g))


def is_gorenstein_socle(g: ClosedGraph, prime: int = DEFAULT_PRIME) -> bool:
    return socle_dimension(artinian_quotient(g, prime)) == 1


def is_gorenstein_criterion(g: ClosedGraph) -> bool:
    """Per component: K_2, or a_2 = lo+1, a_{i+2} = b_i + 1, b_{r-1} = hi - 1."""
    for comp in g.components:
        cl = comp.cliques
        r = len(cl)
        if r == 1:
            if comp.size != 2:
                return False
            continue
        if cl[1][0] != comp.lo + 1 or cl[r - 2][1] != comp.hi - 1:
            return False
        if any(cl[i + 2][0] != cl[i][1] + 1 for i in range(r - 2)):
            return False
    return True


def h_symmetric(h: Sequence[int]) -> bool:
    h = list(h)
    return h == h[::-1]
