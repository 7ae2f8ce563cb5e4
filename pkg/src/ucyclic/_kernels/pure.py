"""Numpy weight census: meet-in-the-middle over the row-subset XOR space.

Handles any word width (words are split into 64-bit columns).  A table of
all XOR combinations of the first ``d1`` rows is built once; the remaining
rows are walked in Gray order, and each step scores the whole table with
vectorized popcounts.
"""

from __future__ import annotations

import numpy as np

_TABLE_LOG2 = 20


def _pack_rows(rows: list[int], ncols: int) -> np.ndarray:
    mask = (1 << 64) - 1
    out = np.zeros((max(len(rows), 1), ncols), dtype=np.uint64)
    for j, r in enumerate(rows):
        for c in range(ncols):
            out[j, c] = (r >> (64 * c)) & mask
    return out


def census_numpy(rows: list[int], nbits: int) -> list[int]:
    """Histogram of popcounts over all subset XORs of ``rows`` (2^len words)."""
    d = len(rows)
    hist = np.zeros(nbits + 1, dtype=np.int64)
    if d == 0:
        hist[0] = 1
        return hist.tolist()
    ncols = max(1, (nbits + 63) // 64)
    packed = _pack_rows(rows, ncols)
    d1 = min(d, _TABLE_LOG2)
    table = np.zeros((1 << d1, ncols), dtype=np.uint64)
    for j in range(d1):
        table[1 << j: 2 << j] = table[: 1 << j] ^ packed[j]
    acc = np.zeros(ncols, dtype=np.uint64)
    counts = np.empty(1 << d1, dtype=np.int64)
    for t in range(1 << (d - d1)):
        if t:
            j = d1 + (t & -t).bit_length() - 1
            acc ^= packed[j]
        np.bitwise_count(table[:, 0] ^ acc[0], out=counts, casting="unsafe")
        for c in range(1, ncols):
            counts += np.bitwise_count(table[:, c] ^ acc[c])
        hist += np.bincount(counts, minlength=nbits + 1)
    return hist.tolist()
