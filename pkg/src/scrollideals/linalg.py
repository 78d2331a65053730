"""Dense linear algebra over GF(p) on top of the row-reduction kernel."""

from __future__ import annotations

import numpy as np

from . import _kernels

BACKEND = _kernels.BACKEND


def _prepare(a, p: int) -> np.ndarray:
    m = np.array(a, dtype=np.int64, copy=True, order="C")
    if m.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    m %= p
    return m


def rref(a, p: int, kernel=None) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns of ``a`` over GF(p)."""
    m = _prepare(a, p)
    if m.size == 0:
        return m, []
    pivots = (kernel or _kernels.rref_inplace)(m, p)
    return m, pivots


def rank_mod_p(a, p: int, kernel=None) -> int:
    a = np.asarray(a)
    if a.size == 0:
        return 0
    # eliminate along the shorter side
    if a.shape[0] > a.shape[1]:
        a = a.T
    return len(rref(a, p, kernel)[1])


def nullspace_mod_p(a, p: int, kernel=None) -> np.ndarray:
    """Basis of ``{v : a v = 0}`` as the rows of the returned matrix."""
    a = np.asarray(a)
    ncols = a.shape[1]
    if a.shape[0] == 0:
        return np.eye(ncols, dtype=np.int64)
    r, pivots = rref(a, p, kernel)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for row, pc in enumerate(pivots):
            basis[k, pc] = (-r[row, fc]) % p
    return basis
