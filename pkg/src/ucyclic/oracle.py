"""Brute-force ground truth, independent of the table-driven modules.

Everything here works on bit-packed vectors of R^(2n), R = F_{2^m}[u]/(u^k):
coordinate c (0-based), u-slot l, field bit b map to packed bit (c*k + l)*m + b.
A cyclic code is handled as its F_2 row space together with closure under the
monomial maps (multiply by x, by u, and by the field generator when m > 1);
:class:`DenseCode` keeps the canonical reduced row-echelon basis, so equality
and inclusion tests are exact without materializing word sets.

Only :func:`brute_all_ideals` enumerates an ambient space, and it enforces the
hard 2^24 cap (:class:`ucyclic.errors.TooLarge`).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import TooLarge
from .gf import FieldCtx, f2x_mod

AMBIENT_CAP_LOG2 = 24
WORDS_CAP_LOG2 = 20


# ---------------------------------------------------------------------------
# F_2 linear algebra on bit-rows
# ---------------------------------------------------------------------------

def rref_bits(rows, ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns).

    Pivots are chosen from the high bit down so rows stay sorted descending.
    """
    mat = [int(r) for r in rows]
    res: list[int] = []
    pivots: list[int] = []
    for c in range(ncols - 1, -1, -1):
        bit = 1 << c
        src = None
        for idx, r in enumerate(mat):
            if r & bit:
                src = idx
                break
        if src is None:
            continue
        piv = mat.pop(src)
        mat = [r ^ piv if r & bit else r for r in mat]
        res = [r ^ piv if r & bit else r for r in res]
        res.append(piv)
        pivots.append(c)
    return res, pivots


def nullspace_bits(rows, ncols: int) -> list[int]:
    """Basis of the right nullspace of the given bit-rows."""
    red, pivots = rref_bits(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = 1 << free
        for row, p in zip(red, pivots):
            if row & (1 << free):
                v |= 1 << p
        basis.append(v)
    return basis


@dataclass(frozen=True)
class DenseCode:
    """A cyclic code as an explicit F_2 subspace of packed R^(2n) vectors."""

    n: int
    m: int
    k: int
    basis: tuple[int, ...]  # canonical RREF rows, descending

    @property
    def nbits(self) -> int:
        return 2 * self.n * self.k * self.m

    @property
    def rank(self) -> int:
        return len(self.basis)

    def size_log2(self) -> int:
        return len(self.basis)

    def contains(self, v: int) -> bool:
        for row in self.basis:
            v = min(v, v ^ row)
        return v == 0

    def issubset(self, other: DenseCode) -> bool:
        return all(other.contains(r) for r in self.basis)

    def words(self) -> frozenset[int]:
        """Materialized word set (refuses above 2^20 words)."""
        if self.rank > WORDS_CAP_LOG2:
            raise TooLarge(f"2^{self.rank} words")
        out = {0}
        for row in self.basis:
            out |= {w ^ row for w in out}
        return frozenset(out)


def _canon(rows, nbits: int) -> tuple[int, ...]:
    red, _ = rref_bits(rows, nbits)
    return tuple(red)


# ---------------------------------------------------------------------------
# the ambient module R^(2n) and its monomial maps
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def ambient_maps(n: int, m: int, k: int, modulus: int | None = None):
    """(nbits, monomial maps, invertible monomial maps) for R^(2n).

    Maps are tuples of per-bit images: multiply-by-x (cyclic coordinate
    shift), multiply-by-u (slot shift, not invertible), and for m > 1
    multiply by the field generator y.
    """
    ctx = FieldCtx(m, modulus)
    length = 2 * n
    nbits = length * k * m

    def bit(c, l, b):
        return (c * k + l) * m + b

    xmap = [0] * nbits
    umap = [0] * nbits
    ymap = [0] * nbits
    for c in range(length):
        for l in range(k):
            for b in range(m):
                xmap[bit(c, l, b)] = 1 << bit((c + 1) % length, l, b)
                if l + 1 < k:
                    umap[bit(c, l, b)] = 1 << bit(c, l + 1, b)
                img = f2x_mod(1 << (b + 1), ctx.modulus)
                acc = 0
                for bb in range(m):
                    if (img >> bb) & 1:
                        acc |= 1 << bit(c, l, bb)
                ymap[bit(c, l, b)] = acc
    maps = [tuple(xmap), tuple(umap)]
    invertible = [tuple(xmap)]
    if m > 1:
        maps.append(tuple(ymap))
        invertible.append(tuple(ymap))
    return nbits, tuple(maps), tuple(invertible)


def apply_map(images, v: int) -> int:
    out = 0
    while v:
        low = v & -v
        out ^= images[low.bit_length() - 1]
        v ^= low
    return out


def span_code(n: int, m: int, k: int, gens, modulus: int | None = None) -> DenseCode:
    """Smallest cyclic code (ideal) containing the packed generators."""
    nbits, maps, _ = ambient_maps(n, m, k, modulus)
    basis: list[int] = []
    pending = [int(g) for g in gens]
    while pending:
        v = pending.pop()
        for row in basis:
            v = min(v, v ^ row)
        if not v:
            continue
        basis.append(v)
        basis.sort(reverse=True)
        pending.extend(apply_map(images, v) for images in maps)
    return DenseCode(n, m, k, _canon(basis, nbits))


# ---------------------------------------------------------------------------
# duals, intersections
# ---------------------------------------------------------------------------

def _r_mul(ctx: FieldCtx, k: int, a: int, b: int) -> int:
    """Product in R = F_{2^m}[u]/(u^k), operands packed in k*m bits."""
    mask = (1 << ctx.m) - 1
    out = 0
    for i in range(k):
        ai = (a >> (i * ctx.m)) & mask
        if not ai:
            continue
        for j in range(k - i):
            bj = (b >> (j * ctx.m)) & mask
            if bj:
                out ^= ctx.mul(ai, bj) << ((i + j) * ctx.m)
    return out


def _inner(ctx: FieldCtx, n: int, k: int, v: int, w: int) -> int:
    """Euclidean inner product over R of two packed vectors."""
    step = k * ctx.m
    mask = (1 << step) - 1
    out = 0
    for c in range(2 * n):
        vc = (v >> (c * step)) & mask
        if vc:
            wc = (w >> (c * step)) & mask
            if wc:
                out ^= _r_mul(ctx, k, vc, wc)
    return out


def brute_dual(code: DenseCode, modulus: int | None = None) -> DenseCode:
    """Euclidean dual, via the F_2 linear system <b, v> = 0 in R."""
    ctx = FieldCtx(code.m, modulus)
    nbits = code.nbits
    out_bits = code.k * code.m
    rows = []
    for b in code.basis:
        # functional v -> bits of <b, v>, one constraint row per output bit
        cols = [_inner(ctx, code.n, code.k, b, 1 << j) for j in range(nbits)]
        for o in range(out_bits):
            row = 0
            for j, val in enumerate(cols):
                if (val >> o) & 1:
                    row |= 1 << j
            rows.append(row)
    return DenseCode(code.n, code.m, code.k,
                     _canon(nullspace_bits(rows, nbits), nbits))


def brute_intersect(a: DenseCode, b: DenseCode) -> DenseCode:
    """Intersection of two codes (Zassenhaus on packed rows)."""
    nbits = a.nbits
    assert (a.n, a.m, a.k) == (b.n, b.m, b.k)
    rows = [(r << nbits) | r for r in a.basis] + [(r << nbits) for r in b.basis]
    red, _ = rref_bits(rows, 2 * nbits)
    mask = (1 << nbits) - 1
    inter = [r & mask for r in red if (r >> nbits) == 0 and r & mask]
    return DenseCode(a.n, a.m, a.k, _canon(inter, nbits))


def brute_is_selfdual(code: DenseCode, modulus: int | None = None) -> bool:
    return brute_dual(code, modulus) == code


def brute_is_selforthogonal(code: DenseCode, modulus: int | None = None) -> bool:
    return code.issubset(brute_dual(code, modulus))


# ---------------------------------------------------------------------------
# full ideal census
# ---------------------------------------------------------------------------

def _all_ideals_generic(nbits: int, maps, invertible) -> list[tuple[int, ...]]:
    """All map-closed F_2 subspaces, as canonical bases.

    Correctness: every ideal is a sum of single-generator closures, all
    single-generator closures are produced, and the pairwise-sum pass closes
    the collection; vectors are deduplicated by their orbit under the
    invertible maps first (same closure).
    """
    if nbits > AMBIENT_CAP_LOG2:
        raise TooLarge(f"ambient space has 2^{nbits} elements")

    def closure(gens):
        basis: list[int] = []
        pending = list(gens)
        while pending:
            v = pending.pop()
            for row in basis:
                v = min(v, v ^ row)
            if not v:
                continue
            basis.append(v)
            basis.sort(reverse=True)
            pending.extend(apply_map(im, v) for im in maps)
        red, _ = rref_bits(basis, nbits)
        return tuple(red)

    seen_vec = bytearray(1 << nbits)
    found = {(): None}
    for v in range(1, 1 << nbits):
        if seen_vec[v]:
            continue
        # orbit of v under the invertible monomial maps
        orbit = {v}
        stack = [v]
        while stack:
            w = stack.pop()
            for im in invertible:
                img = apply_map(im, w)
                if img not in orbit:
                    orbit.add(img)
                    stack.append(img)
        for w in orbit:
            seen_vec[w] = 1
        found[closure([v])] = None

    # close under pairwise sums
    pool = list(found)
    while True:
        fresh = []
        for i, a in enumerate(pool):
            for b in pool:
                s = closure(list(a) + list(b))
                if s not in found:
                    found[s] = None
                    fresh.append(s)
        if not fresh:
            break
        pool = list(found)
    return list(found)


def brute_all_ideals(n: int, m: int, k: int,
                     modulus: int | None = None) -> list[DenseCode]:
    """Every cyclic code of length 2n over R, by exhaustive closure."""
    nbits, maps, invertible = ambient_maps(n, m, k, modulus)
    return [DenseCode(n, m, k, basis)
            for basis in _all_ideals_generic(nbits, maps, invertible)]


def brute_component_ideals(fd, j: int, k: int) -> list[frozenset[int]]:
    """Every ideal of K[u]/(u^k) for component j, as packed member sets."""
    from .ideals import _component_monomial_maps
    nbits, maps = _component_monomial_maps(fd, j, k)
    if nbits > AMBIENT_CAP_LOG2:
        raise TooLarge(f"component ring has 2^{nbits} elements")
    invertible = [maps[0]] + ([maps[2]] if fd.m > 1 else [])
    out = []
    for basis in _all_ideals_generic(nbits, maps, invertible):
        members = {0}
        for row in basis:
            members |= {w ^ row for w in members}
        out.append(frozenset(members))
    return out


def theta_congruence_filter(fd, j: int, s: int):
    """Units w of F_j[u]/(u^s) with w + delta_j x^(2n-d_j) w(x^(-1)) = 0.

    Enumerate-and-filter route to the self-dual unit parameter sets, fully
    independent of the closed-form construction in :mod:`ucyclic.selfdual`
    (the reciprocal substitution is applied literally, u-slot by u-slot).
    Only meaningful on self-reciprocal components.
    """
    from . import quotient as qt
    from .gf import poly_add, poly_scale

    if not 0 <= j < fd.num_selfrec:
        raise ValueError(f"component {j} is not self-reciprocal")
    d = fd.degree(j)
    if d * fd.m * s > AMBIENT_CAP_LOG2:
        raise TooLarge(f"unit group of size ~2^{d * fd.m * s} too big to filter")
    ring = qt.field_ring(fd, j)
    xfac = ring.pow((0, 1), 2 * fd.n - d)       # x^(2n-d) reduced mod f_j
    delta = fd.delta[j]
    out = []
    for w in qt.u_units(ring, s):
        ok = True
        for a in w:
            img = ring.mul(xfac, qt.hat(fd, j, a))
            if poly_add(a, poly_scale(fd.ctx, img, delta)):
                ok = False
                break
        if ok:
            out.append(w)
    return out
