"""Gray images of cyclic codes over F_{2^m}[u]/(u^2).

The Gray map sends a + bu to the symbol pair (b, a+b), applied
coordinatewise: an R-vector (a_0+b_0 u, ..., a_{2n-1}+b_{2n-1} u) maps to
the length-4n vector (b_0..b_{2n-1}, a_0+b_0..a_{2n-1}+b_{2n-1}) over
F_{2^m}.  Lee weight on R matches Hamming weight downstairs, duality is
preserved, and the image of a cyclic code is 2-quasi-cyclic.

For self-dual codes the generator matrix of the image is assembled from
circulant blocks E = [eps_j]_{d_j}, F = [f_j eps_j]_{d_j} and
W = [(1+f_j w) eps_j]_{d_j}: one 2d_j x 4n block per self-reciprocal
component and one 4d_j x 4n block per reciprocal pair, by a fixed shape
table.  Arbitrary (non-self-dual) codes get a matrix from the generic
basis route (:func:`gray_image_matrix`).

Weight distributions walk the full message space with Gray-code row
updates; the m=1 path dispatches to :mod:`ucyclic._kernels`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ._kernels import weight_census
from .errors import (DimensionTooLarge, MinDistOfTrivial, NotSelfDual,
                     UnsupportedK)
from .gf import FieldCtx, P_ONE, P_ZERO, Poly, poly_add, poly_mul, poly_mulmod
from .oracle import span_code
from .selfdual import CyclicCode, is_self_dual, to_ambient_generators

MESSAGE_DIM_CAP = 32

__all__ = [
    "GenMatrix", "gray_map", "gray_map_packed", "unpack_ambient", "circulant",
    "generator_matrix", "gray_image_matrix", "weight_distribution",
    "min_distance", "is_2_quasi_cyclic", "gram_is_zero", "lee_weight",
    "lee_weight_vector", "lee_distribution", "rref_fq", "MESSAGE_DIM_CAP",
]


# ---------------------------------------------------------------------------
# F_{2^m} row operations on symbol vectors
# ---------------------------------------------------------------------------

def _row_add_scaled(ctx: FieldCtx, dst, src, c: int):
    if c == 0:
        return dst
    if c == 1:
        return tuple(x ^ y for x, y in zip(dst, src))
    return tuple(x ^ ctx.mul(c, y) for x, y in zip(dst, src))


def rref_fq(ctx: FieldCtx, rows) -> tuple[list[tuple[int, ...]], list[int]]:
    """Reduced row echelon form over F_{2^m}; leftmost-pivot convention."""
    mat = [tuple(r) for r in rows]
    out: list[tuple[int, ...]] = []
    pivots: list[int] = []
    ncols = len(mat[0]) if mat else 0
    for c in range(ncols):
        src = next((i for i, r in enumerate(mat) if r[c]), None)
        if src is None:
            continue
        piv = mat.pop(src)
        inv = ctx.inv(piv[c])
        if inv != 1:
            piv = tuple(ctx.mul(inv, x) for x in piv)
        mat = [_row_add_scaled(ctx, r, piv, r[c]) for r in mat]
        out = [_row_add_scaled(ctx, r, piv, r[c]) for r in out]
        out.append(piv)
        pivots.append(c)
        if not mat:
            break
    return out, pivots


def _reduce_row(ctx: FieldCtx, row, basis, pivots):
    for piv, c in zip(basis, pivots):
        row = _row_add_scaled(ctx, row, piv, row[c])
    return row


def _dot_fq(ctx: FieldCtx, a, b) -> int:
    acc = 0
    for x, y in zip(a, b):
        if x and y:
            acc ^= ctx.mul(x, y)
    return acc


# ---------------------------------------------------------------------------
# the Gray map
# ---------------------------------------------------------------------------

def gray_map(xi) -> tuple[int, ...]:
    """Map an R-vector, given as (a_i, b_i) pairs, to (b | a+b) over F_{2^m}."""
    pairs = list(xi)
    for p in pairs:
        if len(p) != 2:
            raise UnsupportedK("the Gray map is defined for k=2 coefficients")
    return (tuple(b for _, b in pairs)
            + tuple(a ^ b for a, b in pairs))


def unpack_ambient(v: int, n: int, m: int, k: int):
    """Bit-packed vector of R^(2n) -> tuple of k-tuples of field symbols."""
    mask = (1 << m) - 1
    out = []
    for c in range(2 * n):
        out.append(tuple((v >> ((c * k + l) * m)) & mask for l in range(k)))
    return tuple(out)


def gray_map_packed(v: int, n: int, m: int, k: int = 2) -> tuple[int, ...]:
    """Gray image of a bit-packed ambient vector (oracle bit layout)."""
    if k != 2:
        raise UnsupportedK("the Gray map is defined for k=2 coefficients")
    return gray_map(unpack_ambient(v, n, m, 2))


def lee_weight(a: int, b: int) -> int:
    """Lee weight of the single symbol a + bu: Hamming weight of (b, a+b)."""
    return (b != 0) + ((a ^ b) != 0)


def lee_weight_vector(xi) -> int:
    return sum(lee_weight(a, b) for a, b in xi)


def lee_distribution(code: CyclicCode) -> dict[int, int]:
    """Lee weight histogram of C, censused directly from the codewords."""
    if code.k != 2:
        raise UnsupportedK("Lee weights are defined for k=2")
    n, m = code.n, code.m
    dc = span_code(n, m, 2, to_ambient_generators(code),
                   modulus=code.fd.ctx.modulus)
    hist: dict[int, int] = {}
    for w in dc.words():
        lw = lee_weight_vector(unpack_ambient(w, n, m, 2))
        hist[lw] = hist.get(lw, 0) + 1
    return hist


# ---------------------------------------------------------------------------
# generator matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GenMatrix:
    """A matrix over F_{2^m} with 4n columns, rows as symbol tuples."""

    ctx: FieldCtx = field(compare=False)
    n: int = 0
    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        for r in self.rows:
            if len(r) != self.cols:
                raise ValueError(f"row width {len(r)} != {self.cols}")

    @property
    def cols(self) -> int:
        return 4 * self.n

    def rank(self) -> int:
        return len(rref_fq(self.ctx, self.rows)[0])


def circulant(a: Poly, s: int, n2: int) -> tuple[tuple[int, ...], ...]:
    """s x n2 block [a]_s: row i is the coefficient vector of x^i a mod x^n2-1."""
    if s < 1:
        raise ValueError("s must be >= 1")
    if len(a) > n2:
        raise ValueError("reduce a mod x^n2 - 1 first")
    row = tuple(a) + (0,) * (n2 - len(a))
    out = [row]
    for _ in range(s - 1):
        row = (row[-1],) + row[:-1]
        out.append(row)
    return tuple(out)


def _hblock(left: Poly, right: Poly, s: int, n2: int):
    """s rows of the 2-block [left | right], each half a circulant."""
    return [lr + rr for lr, rr in zip(circulant(left, s, n2),
                                      circulant(right, s, n2))]


def _shape(label) -> str:
    from .duality import shape_k2
    return shape_k2(label)


def generator_matrix(code: CyclicCode) -> GenMatrix:
    """The block generator matrix of the Gray image of a self-dual code.

    One 2d_j x 4n block per self-reciprocal component and one 4d_j x 4n
    block per reciprocal pair, stacked; 2n rows in total, all independent.
    """
    if code.k != 2:
        raise UnsupportedK("generator matrices are tabulated for k=2")
    if not is_self_dual(code):
        raise NotSelfDual("the block table assumes a self-dual code; "
                          "use gray_image_matrix for arbitrary codes")
    fd = code.fd
    ctx = fd.ctx
    mod = fd.modulus_2n()
    n2 = 2 * fd.n

    def eps(j):
        return fd.idempotents[j]

    def feps(j):
        return poly_mulmod(ctx, fd.factors[j], eps(j), mod)

    def weps(j):
        w = code.components[j].omega[0]
        one_fw = poly_add(P_ONE, poly_mul(ctx, fd.factors[j], w))
        return poly_mulmod(ctx, one_fw, eps(j), mod)

    rows: list[tuple[int, ...]] = []
    for j in range(fd.num_selfrec):
        d = fd.degree(j)
        sh = _shape(code.components[j])
        if sh == "u":
            rows += _hblock(eps(j), eps(j), d, n2)
        elif sh == "f":
            rows += _hblock(P_ZERO, feps(j), d, n2)
        else:  # mixed
            rows += _hblock(eps(j), weps(j), d, n2)
        rows += _hblock(feps(j), feps(j), d, n2)
    for j in range(fd.num_selfrec, fd.num_selfrec + fd.num_pairs):
        jm = fd.mate(j)
        d = fd.degree(j)
        pair = (_shape(code.components[j]), _shape(code.components[jm]))
        if pair == ("one", "zero"):
            rows += _hblock(P_ZERO, eps(j), d, n2)
            rows += _hblock(eps(j), eps(j), d, n2)
            rows += _hblock(P_ZERO, feps(j), d, n2)
            rows += _hblock(feps(j), feps(j), d, n2)
        elif pair == ("u", "u"):
            rows += _hblock(eps(j), eps(j), d, n2)
            rows += _hblock(feps(j), feps(j), d, n2)
            rows += _hblock(eps(jm), eps(jm), d, n2)
            rows += _hblock(feps(jm), feps(jm), d, n2)
        elif pair == ("zero", "one"):
            rows += _hblock(P_ZERO, eps(jm), d, n2)
            rows += _hblock(eps(jm), eps(jm), d, n2)
            rows += _hblock(P_ZERO, feps(jm), d, n2)
            rows += _hblock(feps(jm), feps(jm), d, n2)
        elif pair == ("f", "f"):
            rows += _hblock(P_ZERO, feps(j), d, n2)
            rows += _hblock(feps(j), feps(j), d, n2)
            rows += _hblock(P_ZERO, feps(jm), d, n2)
            rows += _hblock(feps(jm), feps(jm), d, n2)
        elif pair == ("uf", "top"):
            rows += _hblock(feps(j), feps(j), d, n2)
            rows += _hblock(eps(jm), eps(jm), d, n2)
            rows += _hblock(feps(jm), feps(jm), d, n2)
            rows += _hblock(P_ZERO, feps(jm), d, n2)
        elif pair == ("mixed", "mixed"):
            rows += _hblock(eps(j), weps(j), d, n2)
            rows += _hblock(feps(j), feps(j), d, n2)
            rows += _hblock(eps(jm), weps(jm), d, n2)
            rows += _hblock(feps(jm), feps(jm), d, n2)
        elif pair == ("top", "uf"):
            rows += _hblock(eps(j), eps(j), d, n2)
            rows += _hblock(feps(j), feps(j), d, n2)
            rows += _hblock(P_ZERO, feps(j), d, n2)
            rows += _hblock(feps(jm), feps(jm), d, n2)
        else:  # unreachable behind the is_self_dual gate
            raise NotSelfDual(f"pair shapes {pair} have no self-dual block")
    gm = GenMatrix(ctx, fd.n, tuple(rows))
    assert len(rows) == n2
    return gm


def gray_image_matrix(code: CyclicCode) -> GenMatrix:
    """Generator matrix of the Gray image of ANY cyclic code (k=2).

    Generic route: span the code as an F_2 space with the oracle, apply the
    Gray map to each basis vector, and row-reduce over F_{2^m}.
    """
    if code.k != 2:
        raise UnsupportedK("the Gray map is defined for k=2")
    fd = code.fd
    dc = span_code(fd.n, fd.m, 2, to_ambient_generators(code),
                   modulus=fd.ctx.modulus)
    img = [gray_map_packed(v, fd.n, fd.m) for v in dc.basis]
    rows, _ = rref_fq(fd.ctx, img) if img else ([], [])
    return GenMatrix(fd.ctx, fd.n, tuple(rows))


# ---------------------------------------------------------------------------
# weights and structure checks
# ---------------------------------------------------------------------------

def _pack_bits(row) -> int:
    v = 0
    for c, x in enumerate(row):
        if x:
            v |= 1 << c
    return v


def _census_symbols(ctx: FieldCtx, rows, ncols: int) -> list[int]:
    """Weight census over the F_{2^m}-span: nonzero-symbol counts."""
    m = ctx.m
    packed = []
    for row in rows:
        for t in range(m):
            c = ctx.pow(2, t) if m > 1 else 1  # {1, y, ..., y^(m-1)} F_2-basis
            scaled = tuple(ctx.mul(c, x) for x in row)
            v = 0
            for i, x in enumerate(scaled):
                v |= x << (i * m)
            packed.append(v)
    dim = len(packed)
    if dim > MESSAGE_DIM_CAP:
        raise DimensionTooLarge(f"2^{dim} message walk rejected")
    low = sum(1 << (i * m) for i in range(ncols))
    hist = [0] * (ncols + 1)
    v = 0
    hist[0] += 1
    for i in range(1, 1 << dim):
        v ^= packed[(i & -i).bit_length() - 1]
        coll = v
        for b in range(1, m):
            coll |= v >> b
        hist[(coll & low).bit_count()] += 1
    return hist


def weight_distribution(gm: GenMatrix, threads: int = 1,
                        force: str | None = None) -> dict[int, int]:
    """Full Hamming weight distribution of the row space of gm.

    Walks all q^rank messages (Gray-code order, one row XOR per step).
    Rejects rank > 32 with DimensionTooLarge.
    """
    rows, _ = rref_fq(gm.ctx, gm.rows)
    if len(rows) > MESSAGE_DIM_CAP:
        raise DimensionTooLarge(
            f"rank {len(rows)} exceeds the exhaustive-walk cap {MESSAGE_DIM_CAP}")
    if gm.ctx.m == 1:
        hist = weight_census([_pack_bits(r) for r in rows], gm.cols,
                             threads=threads, force=force)
    else:
        hist = _census_symbols(gm.ctx, rows, gm.cols)
    return {w: c for w, c in enumerate(hist) if c}


def min_distance(gm: GenMatrix, threads: int = 1,
                 force: str | None = None) -> int:
    """Minimum Hamming distance of the row space (exhaustive)."""
    dist = weight_distribution(gm, threads=threads, force=force)
    nonzero = [w for w in dist if w > 0]
    if not nonzero:
        raise MinDistOfTrivial("the zero code has no minimum distance")
    return min(nonzero)


def is_2_quasi_cyclic(gm: GenMatrix) -> bool:
    """Does the simultaneous cyclic shift of both halves fix the row space?"""
    if gm.cols % 2:
        raise ValueError("need an even number of columns")
    h = gm.cols // 2
    basis, pivots = rref_fq(gm.ctx, gm.rows)
    for row in gm.rows:
        left, right = row[:h], row[h:]
        shifted = (left[-1],) + left[:-1] + (right[-1],) + right[:-1]
        if any(_reduce_row(gm.ctx, shifted, basis, pivots)):
            return False
    return True


def gram_is_zero(gm: GenMatrix) -> bool:
    """Is G * G^T the zero matrix over F_{2^m}?"""
    rows = gm.rows
    return all(_dot_fq(gm.ctx, rows[i], rows[j]) == 0
               for i in range(len(rows)) for j in range(i, len(rows)))
