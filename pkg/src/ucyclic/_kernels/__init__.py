"""Weight-census kernels: compiled Gray-code walk with a numpy fallback.

``weight_census(rows, nbits)`` returns the histogram of Hamming weights over
all 2^len(rows) subset XORs of the given bit-packed rows.  The compiled
kernel is used when it was built and the words fit in 64 bits; otherwise the
numpy meet-in-the-middle path runs.  ``force="compiled"``/``"pure"`` pins a
path (used by tests and the benchmark).
"""

from __future__ import annotations

import threading

import numpy as np

from ..errors import TooLarge
from .pure import census_numpy

try:
    from . import _weightcensus
    HAVE_COMPILED = True
except ImportError:  # pure build
    _weightcensus = None
    HAVE_COMPILED = False

MAX_CENSUS_DIM = 40

__all__ = ["HAVE_COMPILED", "MAX_CENSUS_DIM", "weight_census"]


def _census_compiled(rows: list[int], nbits: int, threads: int) -> list[int]:
    d = len(rows)
    rows_np = np.array(rows, dtype=np.uint64)
    total = 1 << d
    threads = max(1, min(threads, 64, total))
    if threads == 1:
        hist = np.zeros(nbits + 1, dtype=np.int64)
        _weightcensus.census_u64(rows_np, 0, total, hist)
        return hist.tolist()
    chunk = total // threads
    bounds = [t * chunk for t in range(threads)] + [total]
    hists = [np.zeros(nbits + 1, dtype=np.int64) for _ in range(threads)]
    workers = [
        threading.Thread(
            target=_weightcensus.census_u64,
            args=(rows_np, bounds[t], bounds[t + 1] - bounds[t], hists[t]),
        )
        for t in range(threads)
    ]
    for w in workers:
        w.start()
    for w in workers:
        w.join()
    return sum(hists).tolist()


def weight_census(rows: list[int], nbits: int, threads: int = 1,
                  force: str | None = None) -> list[int]:
    """Weight histogram of the XOR span walk; index w = number of words of
    Hamming weight w among all 2^len(rows) subset XORs."""
    if len(rows) > MAX_CENSUS_DIM:
        raise TooLarge(
            f"census over 2^{len(rows)} words exceeds the 2^{MAX_CENSUS_DIM} cap")
    if force not in (None, "compiled", "pure"):
        raise ValueError(f"unknown force={force!r}")
    use_compiled = (force == "compiled"
                    or (force is None and HAVE_COMPILED and nbits <= 64))
    if use_compiled:
        if not HAVE_COMPILED:
            raise RuntimeError("compiled kernel requested but not built")
        if nbits > 64:
            raise TooLarge("compiled kernel handles words up to 64 bits")
        if len(rows) == 0:
            return [1] + [0] * nbits
        return _census_compiled(rows, nbits, threads)
    return census_numpy(rows, nbits)
