"""Direct-definition reference computations.

Quadratic or worse in 2^n; they share nothing with the butterfly code and
exist only to check it.
"""
from __future__ import annotations

import numpy as np

from .core import BooleanFunction


def _dots(n: int) -> np.ndarray:
    """``w.x mod 2`` for every pair, as a 2^n x 2^n matrix."""
    idx = np.arange(1 << n)
    both = idx[:, None] & idx[None, :]
    parity = np.zeros_like(both)
    for s in range(n):
        parity ^= (both >> s) & 1
    return parity.astype(np.uint8)


def walsh_by_definition(f: BooleanFunction) -> list[int]:
    size = 1 << f.n
    return [sum(1 - 2 * (f[x] ^ (bin(w & x).count("1") & 1)) for x in range(size)) for w in range(size)]


def autocorrelation_by_definition(f: BooleanFunction) -> list[int]:
    size = 1 << f.n
    return [sum(1 - 2 * (f[x] ^ f[x ^ a]) for x in range(size)) for a in range(size)]


def affine_tables(n: int) -> np.ndarray:
    """All 2^(n+1) affine truth tables as rows."""
    lin = _dots(n)
    return np.concatenate([lin, lin ^ 1])


def nonlinearity_by_definition(f: BooleanFunction) -> int:
    return int((affine_tables(f.n) != f.bits[None, :]).sum(axis=1).min())


def nonlinearity_batch(tables: np.ndarray, n: int) -> np.ndarray:
    """Minimum affine distance for each row of ``tables`` (shape ``(k, 2^n)``)."""
    aff = affine_tables(n)
    out = np.empty(len(tables), dtype=np.int64)
    step = 4096
    for i in range(0, len(tables), step):
        chunk = tables[i:i + step]
        out[i:i + step] = (chunk[:, None, :] != aff[None, :, :]).sum(axis=2).min(axis=1)
    return out


def sac_by_definition(f: BooleanFunction) -> bool:
    """Every single-bit flip changes f on exactly half the inputs."""
    size = 1 << f.n
    for j in range(f.n):
        e = 1 << j
        if sum(f[x] ^ f[x ^ e] for x in range(size)) != size // 2:
            return False
    return True
