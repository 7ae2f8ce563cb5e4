"""Ideals of K[u]/(u^k) for K = F_{2^m}[x]/(f^2), f irreducible of degree d.

Every ideal of this local ring falls into exactly one of six shapes, described
by an :class:`IdealLabel` (q = 2^(m*d) is the residue field size throughout):

==============  ====================================  =======================
kind            generators                            parameter ranges
==============  ====================================  =======================
u_pow           (u^i)                                 0 <= i <= k
u_f             (u^s f)                               0 <= s <= k-1
mixed_one       (u^i + u^t f w)                       0 <= t < i <= k-1,
                w unit of F[u]/(u^(i-t))              t >= 2i-k
mixed_two       (u^i + u^t f w)                       0 <= t < i <= k-1,
                w unit of F[u]/(u^(k-i))              t < 2i-k
two_gen         (u^i, u^s f)                          0 <= s < i <= k-1
two_gen_omega   (u^i + u^t f w, u^s f)                0 <= t < s < i <= k-1,
                w unit of F[u]/(u^(s-t))              i + s <= k + t - 1
==============  ====================================  =======================

Here F = F_{2^m}[x]/(f) is the residue field and units w are u-expansions with
nonzero constant coefficient.  ``count_ideals`` gives the total from the
closed-form census; the shape-by-shape counts are in
``count_ideals_by_shape`` and the two agree (tested exhaustively).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import quotient as qt
from .gf import P_ONE, P_ZERO, Poly, poly_add, poly_degree, poly_trim
from .errors import TooLarge

KINDS = ("u_pow", "u_f", "mixed_one", "mixed_two", "two_gen", "two_gen_omega")

MEMBER_CAP_LOG2 = 24


@dataclass(frozen=True)
class IdealLabel:
    kind: str
    i: int | None = None
    t: int | None = None
    s: int | None = None
    omega: tuple | None = None  # tuple of residue-field polys, u^0 first

    def params(self) -> dict:
        out = {"kind": self.kind}
        for name in ("i", "t", "s"):
            v = getattr(self, name)
            if v is not None:
                out[name] = v
        if self.omega is not None:
            out["omega"] = self.omega
        return out


def omega_truncation(label: IdealLabel, k: int) -> int | None:
    """Length of the unit expansion attached to a label, if any."""
    if label.kind == "mixed_one":
        return label.i - label.t
    if label.kind == "mixed_two":
        return k - label.i
    if label.kind == "two_gen_omega":
        return label.s - label.t
    return None


def validate_label(label: IdealLabel, k: int, d: int | None = None) -> None:
    """Raise ValueError unless the label is canonical for nilpotency index k."""
    kind, i, t, s = label.kind, label.i, label.t, label.s
    ok = True
    if kind == "u_pow":
        ok = i is not None and 0 <= i <= k and t is None and s is None
    elif kind == "u_f":
        ok = s is not None and 0 <= s <= k - 1 and i is None and t is None
    elif kind == "mixed_one":
        ok = (i is not None and t is not None and s is None
              and 0 <= t < i <= k - 1 and t >= 2 * i - k)
    elif kind == "mixed_two":
        ok = (i is not None and t is not None and s is None
              and 0 <= t < i <= k - 1 and t < 2 * i - k)
    elif kind == "two_gen":
        ok = (i is not None and s is not None and t is None
              and 0 <= s < i <= k - 1)
    elif kind == "two_gen_omega":
        ok = (i is not None and t is not None and s is not None
              and 0 <= t < s < i <= k - 1 and i + s <= k + t - 1)
    else:
        raise ValueError(f"unknown ideal kind {kind!r}")
    if not ok:
        raise ValueError(f"out-of-range parameters for {label}")
    trunc = omega_truncation(label, k)
    if trunc is None:
        if label.omega is not None:
            raise ValueError(f"{kind} takes no unit parameter")
    else:
        w = label.omega
        if w is None or len(w) != trunc:
            raise ValueError(f"{kind} needs a unit expansion of length {trunc}")
        if not w[0]:
            raise ValueError("unit expansion must have nonzero constant term")
        if d is not None and any(poly_degree(c) >= d for c in w):
            raise ValueError("unit coefficients must be reduced mod f")


# ---------------------------------------------------------------------------
# counting
# ---------------------------------------------------------------------------

def omega1(q: int, k: int) -> int:
    """Number of mixed_one ideals."""
    if k % 2 == 0:
        return (q ** (k // 2 + 1) + q ** (k // 2) - 2) // (q - 1) - (k + 1)
    return 2 * (q ** ((k + 1) // 2) - 1) // (q - 1) - (k + 1)


def omega2(q: int, k: int) -> int:
    """Number of mixed_two ideals."""
    return (q - 1) * sum((2 * i - k) * q ** (k - i - 1)
                         for i in range(k // 2 + 1, k))


def gamma(q: int, rho: int) -> int:
    """two_gen_omega ideal count is (q-1)*gamma(q, k)."""
    if rho <= 3:
        return 0
    if rho == 4:
        return 1
    return gamma(q, rho - 1) + sum((rho - 2 * s - 1) * q ** (s - 1)
                                   for s in range(1, rho // 2))


def count_ideals_by_shape(q: int, k: int) -> dict[str, int]:
    return {
        "u_pow": k + 1,
        "u_f": k,
        "mixed_one": omega1(q, k),
        "mixed_two": omega2(q, k),
        "two_gen": k * (k - 1) // 2,
        "two_gen_omega": (q - 1) * gamma(q, k),
    }


def count_ideals(q: int, k: int) -> int:
    """Total number of ideals of K[u]/(u^k), residue field of size q."""
    if k % 2 == 0:
        return sum((1 + 4 * i) * q ** (k // 2 - i) for i in range(k // 2 + 1))
    return sum((3 + 4 * i) * q ** ((k - 1) // 2 - i)
               for i in range((k + 1) // 2))


def count_ideals_closed(q: int, k: int) -> int:
    """Closed rational form of count_ideals (cross-check)."""
    if k % 2 == 0:
        num = (q + 3) * q ** (k // 2 + 1) - q * (2 * k + 5) + 2 * k + 1
    else:
        num = (3 * q + 1) * q ** ((k - 1) // 2 + 1) - q * (2 * k + 5) + 2 * k + 1
    den = (q - 1) ** 2
    assert num % den == 0
    return num // den


def ideal_size_log2(label: IdealLabel, m: int, d: int, k: int) -> int:
    """log2 of the ideal's cardinality."""
    kind = label.kind
    if kind in ("u_pow", "mixed_one"):
        return 2 * m * d * (k - label.i)
    if kind == "u_f":
        return m * d * (k - label.s)
    if kind == "mixed_two":
        return m * d * (k - label.t)
    # two_gen, two_gen_omega
    return m * d * (2 * k - label.i - label.s)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def enumerate_ideals(fd, j: int, k: int):
    """Yield every ideal label for component j, in a fixed documented order.

    Order: shapes in the table order of the module docstring; within a shape,
    indices ascending (i, then t, then s) and unit expansions in the canonical
    counter order of :func:`ucyclic.quotient.u_units`.
    """
    ring = qt.field_ring(fd, j)
    for i in range(k + 1):
        yield IdealLabel("u_pow", i=i)
    for s in range(k):
        yield IdealLabel("u_f", s=s)
    for i in range(1, k):
        for t in range(max(0, 2 * i - k), i):
            for w in qt.u_units(ring, i - t):
                yield IdealLabel("mixed_one", i=i, t=t, omega=w)
    for i in range(k // 2 + 1, k):
        for t in range(0, 2 * i - k):
            for w in qt.u_units(ring, k - i):
                yield IdealLabel("mixed_two", i=i, t=t, omega=w)
    for i in range(1, k):
        for s in range(i):
            yield IdealLabel("two_gen", i=i, s=s)
    for i in range(1, k):
        for s in range(1, i):
            for t in range(0, s):
                if i + s > k + t - 1:
                    continue
                for w in qt.u_units(ring, s - t):
                    yield IdealLabel("two_gen_omega", i=i, t=t, s=s, omega=w)


# ---------------------------------------------------------------------------
# members
# ---------------------------------------------------------------------------

def ideal_generators(fd, j: int, k: int, label: IdealLabel) -> list[qt.UElem]:
    """Generators as elements of K[u]/(u^k), each a k-tuple of K-elements."""
    validate_label(label, k, fd.degree(j))
    ring = qt.chain_ring(fd, j)
    f = fd.factors[j]
    kind = label.kind

    def u_pow_elem(i):
        out = [P_ZERO] * k
        if i < k:
            out[i] = P_ONE
        return tuple(out)

    def usf_elem(s):
        out = [P_ZERO] * k
        out[s] = ring.reduce(f)
        return tuple(out)

    def mixed_elem(i, t, w):
        out = [P_ZERO] * k
        out[i] = P_ONE
        for l, wl in enumerate(w):
            if wl:
                out[t + l] = poly_add(out[t + l], ring.mul(f, wl))
        return tuple(out)

    if kind == "u_pow":
        return [u_pow_elem(label.i)]
    if kind == "u_f":
        return [usf_elem(label.s)]
    if kind in ("mixed_one", "mixed_two"):
        return [mixed_elem(label.i, label.t, label.omega)]
    if kind == "two_gen":
        return [u_pow_elem(label.i), usf_elem(label.s)]
    return [mixed_elem(label.i, label.t, label.omega), usf_elem(label.s)]


def pack_uelem(fd, j: int, k: int, elem: qt.UElem) -> int:
    """Bit-pack a K[u]/(u^k) element (K-coefficients of degree < 2d)."""
    from .gf import poly_key
    bits = 2 * fd.degree(j) * fd.m
    out = 0
    for l, c in enumerate(elem):
        out |= poly_key(fd.ctx, c) << (l * bits)
    return out


def unpack_uelem(fd, j: int, k: int, packed: int) -> qt.UElem:
    from .gf import poly_from_key
    bits = 2 * fd.degree(j) * fd.m
    mask = (1 << bits) - 1
    return tuple(poly_from_key(fd.ctx, (packed >> (l * bits)) & mask)
                 for l in range(k))


def _component_monomial_maps(fd, j: int, k: int):
    """Linear maps (mult by x, by u, by the field generator) on packed bits."""
    ring = qt.chain_ring(fd, j)
    nbits = 2 * fd.degree(j) * fd.m * k
    maps = []

    def tabulate(fn):
        images = []
        for b in range(nbits):
            e = unpack_uelem(fd, j, k, 1 << b)
            images.append(pack_uelem(fd, j, k, fn(e)))
        return tuple(images)

    maps.append(tabulate(lambda e: tuple(ring.mul(c, (0, 1)) for c in e)))
    maps.append(tabulate(lambda e: (P_ZERO,) + e[:-1]))
    if fd.m > 1:
        maps.append(tabulate(lambda e: tuple(ring.mul(c, (2,)) for c in e)))
    return nbits, maps


def _apply_map(images, v: int) -> int:
    out = 0
    while v:
        low = v & -v
        out ^= images[low.bit_length() - 1]
        v ^= low
    return out


def _xor_basis_insert(basis: list[int], v: int) -> bool:
    """Reduce v against the basis; append if independent.  Basis rows are
    kept with distinct leading bits (not full RREF)."""
    for row in basis:
        v = min(v, v ^ row)
    if v:
        basis.append(v)
        basis.sort(reverse=True)
        return True
    return False


def span_from_orbit(gens: list[int], maps, nbits: int) -> list[int]:
    """XOR basis of the smallest map-closed subspace containing gens."""
    basis: list[int] = []
    pending = list(gens)
    while pending:
        v = pending.pop()
        if not _xor_basis_insert(basis, v):
            continue
        for images in maps:
            pending.append(_apply_map(images, v))
    return basis


def ideal_members(fd, j: int, k: int, label: IdealLabel) -> frozenset[int]:
    """All members, bit-packed; guarded by the 2^24 ambient cap."""
    nbits, maps = _component_monomial_maps(fd, j, k)
    if nbits > MEMBER_CAP_LOG2:
        raise TooLarge(f"component ring has 2^{nbits} elements")
    gens = [pack_uelem(fd, j, k, g) for g in ideal_generators(fd, j, k, label)]
    basis = span_from_orbit(gens, maps, nbits)
    members = {0}
    for row in basis:
        members |= {w ^ row for w in members}
    return frozenset(members)
