"""Factorization of x^n - 1 over F_{2^m} (n odd) and the CRT idempotents.

x^n - 1 splits into distinct monic irreducibles f_1 ... f_r with f_1 = x - 1;
squaring gives the repeated-root factorization of x^(2n) - 1.  Factors come
from cyclotomic cosets mod n under multiplication by 2^m: the coset of i
yields the minimal polynomial of gamma^i for a primitive n-th root of unity
gamma living in the splitting field F_{2^(m*t)}, t = ord_n(2^m).

Factor ordering (fixed, everything downstream depends on it):

* index 0: x - 1,
* then the remaining self-reciprocal factors, by (degree, canonical key),
* then one representative per reciprocal pair, by (degree, canonical key of
  the representative), where the representative is the pair's canonically
  smaller member; the mates follow in the same order, so factor j's mate sits
  at j + num_pairs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import gf
from .gf import (FieldCtx, Poly, P_ONE, poly_add, poly_degree, poly_divmod,
                 poly_ext_gcd, poly_key, poly_mod, poly_mul, poly_mulmod,
                 poly_trim, reciprocal)


def cyclotomic_cosets(n: int, q: int) -> list[tuple[int, ...]]:
    """Cosets of {0..n-1} under multiplication by q mod n, sorted by minimum."""
    if n < 1:
        raise ValueError("n must be >= 1")
    seen = [False] * n
    cosets = []
    for a in range(n):
        if seen[a]:
            continue
        cur = a
        coset = []
        while not seen[cur]:
            seen[cur] = True
            coset.append(cur)
            cur = cur * q % n
        cosets.append(tuple(sorted(coset)))
    return cosets


def _mult_order(a: int, n: int) -> int:
    t, cur = 1, a % n
    while cur != 1:
        cur = cur * a % n
        t += 1
    return t


def _find_field_generator(ctx: FieldCtx) -> int:
    """Smallest int generating the multiplicative group of ctx."""
    q1 = ctx.order - 1
    if q1 == 1:
        return 1
    exps = [q1 // p for p in gf._factorint(q1)]
    for g in range(2, ctx.order):
        if all(ctx.pow(g, e) != 1 for e in exps):
            return g
    raise AssertionError("no field generator found")


class _SplittingField:
    """F_{2^M} containing F_{2^m} and a primitive n-th root of unity."""

    def __init__(self, base: FieldCtx, n: int):
        t = _mult_order(base.order % n, n) if n > 1 else 1
        self.big = FieldCtx(base.m * t) if t > 1 else base
        self.base = base
        g = _find_field_generator(self.big)
        self.root = self.big.pow(g, (self.big.order - 1) // n)  # order exactly n
        self._build_embedding(g)

    def _build_embedding(self, g: int):
        base, big = self.base, self.big
        if big is base:
            self.to_base = {a: a for a in range(base.order)}
            self.from_base = list(range(base.order))
            return
        # The subfield of size 2^m is generated by eta of order 2^m - 1;
        # the embedding sends y to a root z of base.modulus inside it.
        sub = {0, 1}
        if base.order > 2:
            eta = big.pow(g, (big.order - 1) // (base.order - 1))
            x = 1
            for _ in range(base.order - 1):
                sub.add(x)
                x = big.mul(x, eta)
        roots = sorted(z for z in sub
                       if _eval_f2poly(big, base.modulus, z) == 0)
        if not roots:
            raise AssertionError("modulus has no root in the splitting field")
        z = roots[0]
        from_base = []
        for a in range(base.order):
            acc, zp = 0, 1
            for i in range(base.m):
                if (a >> i) & 1:
                    acc ^= zp
                zp = big.mul(zp, z)
            from_base.append(acc)
        self.from_base = from_base
        self.to_base = {v: a for a, v in enumerate(from_base)}


def _eval_f2poly(ctx: FieldCtx, bits: int, x0: int) -> int:
    """Evaluate an int-encoded GF(2) polynomial at x0 in ctx."""
    r = 0
    i = bits.bit_length() - 1
    while i >= 0:
        r = ctx.mul(r, x0) ^ ((bits >> i) & 1)
        i -= 1
    return r


def _coset_factor(sf: _SplittingField, coset) -> Poly:
    """prod_{i in coset} (x - gamma^i), with coefficients mapped back to the base."""
    big = sf.big
    f = [1]
    for i in coset:
        root = big.pow(sf.root, i)
        # multiply f by (x + root)
        nxt = [0] * (len(f) + 1)
        for j, c in enumerate(f):
            nxt[j + 1] ^= c
            nxt[j] ^= big.mul(c, root)
        f = nxt
    out = []
    for c in f:
        if c not in sf.to_base:
            raise AssertionError("factor coefficient not in the base field")
        out.append(sf.to_base[c])
    return poly_trim(out)


@dataclass
class FactorData:
    """Everything derived from a (n, m, modulus) choice.

    ``factors[j]`` is the monic irreducible f at index j (0-based, ordering in
    the module docstring), ``mate[j]`` the index of its reciprocal partner
    (== j for self-reciprocal factors), ``delta[j]`` the field scalar with
    reciprocal(f_j) == delta_j * f_{mate[j]}, and ``idempotents[j]`` the CRT
    idempotent for the f_j^2 component of F_{2^m}[x]/(x^(2n)-1).
    """

    n: int
    m: int
    ctx: FieldCtx
    factors: tuple[Poly, ...]
    num_selfrec: int      # count of self-reciprocal factors (index 0 included)
    num_pairs: int        # count of reciprocal pairs
    delta: tuple[int, ...]
    idempotents: tuple[Poly, ...] = field(default=None)

    @property
    def r(self) -> int:
        return len(self.factors)

    def degree(self, j: int) -> int:
        return poly_degree(self.factors[j])

    def mate(self, j: int) -> int:
        lam, eps = self.num_selfrec, self.num_pairs
        if j < lam:
            return j
        if j < lam + eps:
            return j + eps
        return j - eps

    def is_pair_rep(self, j: int) -> bool:
        return self.num_selfrec <= j < self.num_selfrec + self.num_pairs

    def component_indices(self):
        """Indices driving enumeration: all self-reciprocal plus pair reps."""
        return range(self.num_selfrec + self.num_pairs)

    def modulus_2n(self) -> Poly:
        out = [0] * (2 * self.n + 1)
        out[0] = 1
        out[-1] = 1
        return tuple(out)


def factor_xn_minus_1(n: int, m: int, modulus: int | None = None) -> FactorData:
    """Factor x^n - 1 over F_{2^m} and fix the component ordering."""
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be odd and >= 1")
    ctx = FieldCtx(m, modulus)
    sf = _SplittingField(ctx, n)
    raw = [_coset_factor(sf, c) for c in cyclotomic_cosets(n, ctx.order)]

    by_key = {poly_key(ctx, f): f for f in raw}
    selfrec, pairs = [], []
    for f in raw:
        rec = gf.poly_monic(ctx, reciprocal(f))
        if rec == f:
            selfrec.append(f)
        else:
            kf, kr = poly_key(ctx, f), poly_key(ctx, rec)
            if kr not in by_key:
                raise AssertionError("reciprocal of a factor is not a factor")
            if kf < kr:
                pairs.append((f, by_key[kr]))
    x_minus_1 = (1, 1)
    assert x_minus_1 in selfrec
    selfrec.remove(x_minus_1)
    selfrec.sort(key=lambda f: (poly_degree(f), poly_key(ctx, f)))
    pairs.sort(key=lambda fg: (poly_degree(fg[0]), poly_key(ctx, fg[0])))

    factors = [x_minus_1] + selfrec + [f for f, _ in pairs] + [g for _, g in pairs]
    lam = 1 + len(selfrec)
    eps = len(pairs)

    delta = []
    for j, f in enumerate(factors):
        rec = reciprocal(f)
        dj = rec[-1]  # leading coefficient; the monic part must be the mate
        mate_idx = j if j < lam else (j + eps if j < lam + eps else j - eps)
        assert gf.poly_monic(ctx, rec) == factors[mate_idx]
        delta.append(dj)
    for j in range(lam):
        assert delta[j] == 1, "self-reciprocal factors must satisfy rec(f) == f"

    fd = FactorData(n=n, m=m, ctx=ctx, factors=tuple(factors),
                    num_selfrec=lam, num_pairs=eps, delta=tuple(delta))
    fd.idempotents = compute_idempotents(fd)
    return fd


def compute_idempotents(fd: FactorData) -> tuple[Poly, ...]:
    """CRT idempotents for the f_j^2 components of F_{2^m}[x]/(x^(2n)-1).

    For each j, with F = (x^(2n)-1)/f_j^2 and a*F + b*f_j^2 = 1, the idempotent
    is a*F mod (x^(2n)-1).
    """
    ctx = fd.ctx
    big = fd.modulus_2n()
    out = []
    for f in fd.factors:
        fsq = poly_mul(ctx, f, f)
        cof, rem = poly_divmod(ctx, big, fsq)
        assert not rem, "f^2 must divide x^(2n)-1"
        g, a, _ = poly_ext_gcd(ctx, cof, fsq)
        assert g == P_ONE, "cofactor and f^2 must be coprime"
        out.append(poly_mod(ctx, poly_mul(ctx, a, cof), big))
    eps = tuple(out)
    # Idempotent sanity: orthogonal, idempotent, summing to 1.
    total = ()
    for e in eps:
        total = poly_add(total, e)
    assert total == P_ONE
    return eps
