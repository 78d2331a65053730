"""Row reduction over GF(p) with vectorized numpy (fallback kernel)."""

import numpy as np


def rref_inplace(a: np.ndarray, p: int) -> list[int]:
    """Reduce ``a`` (int64, entries in [0, p)) to RREF in place; return pivot columns."""
    nrows, ncols = a.shape
    row = 0
    pivots = []
    for col in range(ncols):
        if row >= nrows:
            break
        nz = np.flatnonzero(a[row:, col])
        if nz.size == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            a[[row, piv], col:] = a[[piv, row], col:]
        inv = pow(int(a[row, col]), -1, p)
        if inv != 1:
            a[row, col:] = a[row, col:] * inv % p
        others = np.flatnonzero(a[:, col])
        others = others[others != row]
        if others.size:
            f = a[others, col][:, None]
            a[others, col:] = (a[others, col:] - f * a[row, col:]) % p
        pivots.append(col)
        row += 1
    return pivots
