# cython: boundscheck=False, wraparound=False, nonecheck=False, cdivision=True
"""Gray-code weight-census walk over an F_2 row space, 64-bit words.

``census_u64(rows, start, count, hist)`` visits the subset-XOR words whose
Gray indices lie in [start, start+count) and increments ``hist[popcount]``.
Disjoint index ranges touch disjoint state, so threads may run this
concurrently on private ``hist`` buffers (the loop releases the GIL).
"""

from libc.stdint cimport int64_t, uint64_t

cdef extern from *:
    """
    #define UC_POPCOUNT(x) __builtin_popcountll(x)
    #define UC_CTZ(x) __builtin_ctzll(x)
    """
    int UC_POPCOUNT(unsigned long long x) nogil
    int UC_CTZ(unsigned long long x) nogil


def census_u64(uint64_t[::1] rows, uint64_t start, uint64_t count,
               int64_t[::1] hist):
    cdef Py_ssize_t nrows = rows.shape[0]
    cdef uint64_t i, g
    cdef uint64_t w = 0
    cdef Py_ssize_t j
    if count == 0:
        return
    g = start ^ (start >> 1)
    with nogil:
        for j in range(nrows):
            if (g >> j) & 1:
                w ^= rows[j]
        hist[UC_POPCOUNT(w)] += 1
        for i in range(start + 1, start + count):
            w ^= rows[UC_CTZ(i)]
            hist[UC_POPCOUNT(w)] += 1
