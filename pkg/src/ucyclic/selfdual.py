"""Self-dual cyclic codes of length 2n over R = F_{2^m}[u]/(u^k), n odd.

A cyclic code of length 2n over R decomposes uniquely across the CRT
components of F_{2^m}[x]/(x^(2n)-1): one ideal label per irreducible factor
of x^n-1 (see :mod:`ucyclic.ideals`).  :class:`CyclicCode` stores that label
vector.  Self-duality is a per-component condition:

* self-reciprocal component: the label must be its own dual, which pins the
  shape to a short list whose unit parameters range over a Theta set — the
  units fixed by ``w == delta * x^(-d) * w(x^(-1))``;
* reciprocal pair: the label on the partner component is a deterministic
  function (:func:`mate_label`) of the label on the representative.

``enumerate_selfdual`` walks the Cartesian product of those per-component
lists; ``count_selfdual`` is the closed-form product; ``selfdual_k2_list``
and ``selfdual_k345_list`` regenerate the same codes from independent
hardcoded per-k tables and exist as cross-checks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import quotient as qt
from .cyclotomic import FactorData, factor_xn_minus_1
from .errors import BadDescriptor, UnsupportedK
from .gf import (P_ONE, P_X, P_ZERO, Poly, find_primitive, poly_key,
                 poly_mulmod)
from .ideals import (IdealLabel, count_ideals, enumerate_ideals,
                     ideal_generators, ideal_size_log2, validate_label)

__all__ = [
    "CyclicCode", "ThetaSet", "theta_set", "mate_label", "is_self_dual",
    "enumerate_selfdual", "count_selfdual", "selfdual_k2_list",
    "selfdual_k345_list", "enumerate_cyclic", "count_cyclic",
    "family_60_30_8", "to_ambient_generators",
]


# ---------------------------------------------------------------------------
# codes as per-component label vectors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CyclicCode:
    """A cyclic code of length 2n over F_{2^m}[u]/(u^k) in CRT-label form.

    ``components[j]`` is the ideal label at factor index j (all r factors,
    pair partners included).  Equality and hashing use (k, components) only;
    two codes built from the same FactorData are equal iff they are the same
    set of codewords.
    """

    fd: FactorData = field(compare=False)
    k: int = 2
    components: tuple[IdealLabel, ...] = ()

    def __post_init__(self):
        if len(self.components) != self.fd.r:
            raise BadDescriptor(
                f"need {self.fd.r} component labels, got {len(self.components)}")
        for j, label in enumerate(self.components):
            validate_label(label, self.k, self.fd.degree(j))

    @property
    def n(self) -> int:
        return self.fd.n

    @property
    def m(self) -> int:
        return self.fd.m

    def size_log2(self) -> int:
        """log2 of the number of codewords."""
        return sum(ideal_size_log2(lab, self.fd.m, self.fd.degree(j), self.k)
                   for j, lab in enumerate(self.components))

    def dim(self) -> int:
        """Dimension of the Gray image over F_{2^m} (= size_log2 / m)."""
        assert self.size_log2() % self.m == 0
        return self.size_log2() // self.m


# ---------------------------------------------------------------------------
# Theta sets: units fixed by the reciprocal-transport involution
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ThetaSet:
    """Units w of F_j[u]/(u^s) with w == delta_j x^(-d_j) w(x^(-1))."""

    j: int
    s: int
    members: tuple[qt.UElem, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, w) -> bool:
        return w in set(self.members)


def theta_level_one(fd: FactorData, j: int, rho: Poly | None = None) -> tuple[Poly, ...]:
    """The length-1 Theta set of a self-reciprocal component, sorted by key.

    For component 0 (factor x-1) that is every nonzero scalar.  Otherwise
    f_j has even degree d and the set is x^(-d/2) times the subgroup of
    index sqrt(q)+1 in F_j^*, i.e. x^(-d/2) * F_sqrt(q)^*; the primitive
    element ``rho`` is only a way to walk that subgroup, the set does not
    depend on the choice.
    """
    if not 0 <= j < fd.num_selfrec:
        raise ValueError(f"component {j} is not self-reciprocal")
    ctx = fd.ctx
    if j == 0:
        return tuple((c,) for c in range(1, 1 << ctx.m))
    d = fd.degree(j)
    assert d % 2 == 0, "self-reciprocal factor of degree >= 2 has even degree"
    ring = qt.field_ring(fd, j)
    sq = 1 << (d * ctx.m // 2)
    if rho is None:
        rho = find_primitive(ctx, fd.factors[j])
    base = ring.pow(P_X, fd.n - d // 2)          # x^(-d/2) since x^n = 1
    step = ring.pow(rho, sq + 1)
    out = []
    cur = P_ONE
    for _ in range(sq - 1):
        out.append(ring.mul(base, cur))
        cur = ring.mul(cur, step)
    assert len(set(out)) == sq - 1, "primitive element did not generate"
    return tuple(sorted(out, key=lambda p: poly_key(ctx, p)))


def theta_set(fd: FactorData, j: int, s: int,
              rho: Poly | None = None) -> ThetaSet:
    """Theta_{j,s}: the unit parameters of self-dual component ideals.

    Component 0: all units of F_{2^m}[u]/(u^s).  Components 1..num_selfrec-1:
    u-expansions whose constant coefficient lies in the length-1 set and the
    rest in {0} union that set.
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    if j == 0:
        members = tuple(qt.u_units(qt.field_ring(fd, 0), s))
    else:
        lvl1 = theta_level_one(fd, j, rho)
        rest = (P_ZERO,) + lvl1
        members = tuple((a0,) + tail for a0 in lvl1
                        for tail in itertools.product(rest, repeat=s - 1))
    return ThetaSet(j, s, members)


# ---------------------------------------------------------------------------
# the dual-partner label (annihilator + reciprocal transport)
# ---------------------------------------------------------------------------

def _omega_prime(fd: FactorData, j: int, omega: qt.UElem) -> qt.UElem:
    return qt.omega_prime(fd, j, omega)


def mate_label(fd: FactorData, j: int, label: IdealLabel, k: int) -> IdealLabel:
    """Label of the dual ideal, living on component ``fd.mate(j)``.

    For a pair representative j this is the unique partner label making the
    two components jointly self-dual; for self-reciprocal j it is the dual
    ideal of the same component (unit parameters transported by
    w -> delta * x^(-d) * w(x^(-1))).  The map is an involution.
    """
    validate_label(label, k, fd.degree(j))
    kind, i, t, s, w = label.kind, label.i, label.t, label.s, label.omega
    wp = _omega_prime(fd, j, w) if w is not None else None
    if kind == "u_pow":
        return IdealLabel("u_pow", i=k - i)
    if kind == "u_f":
        if s == 0:
            return IdealLabel("u_f", s=0)
        return IdealLabel("two_gen", i=k - s, s=0)
    if kind == "mixed_one":
        return IdealLabel("mixed_one", i=k - i, t=k + t - 2 * i, omega=wp)
    if kind == "mixed_two":
        if t == 0:
            return IdealLabel("mixed_two", i=i, t=0, omega=wp)
        return IdealLabel("two_gen_omega", i=i - t, t=0, s=k - i, omega=wp)
    if kind == "two_gen":
        if s == 0:
            return IdealLabel("u_f", s=k - i)
        return IdealLabel("two_gen", i=k - s, s=k - i)
    # two_gen_omega
    if t == 0:
        return IdealLabel("mixed_two", i=k - s, t=k - i - s, omega=wp)
    return IdealLabel("two_gen_omega", i=k - s, t=k + t - i - s, s=k - i,
                      omega=wp)


def is_self_dual(code: CyclicCode) -> bool:
    """Componentwise self-duality test (any k)."""
    fd, k = code.fd, code.k
    for j in fd.component_indices():
        if code.components[fd.mate(j)] != mate_label(fd, j, code.components[j], k):
            return False
    return True


# ---------------------------------------------------------------------------
# per-component self-dual lists (general k)
# ---------------------------------------------------------------------------

def selfdual_component_labels(fd: FactorData, j: int, k: int):
    """Self-dual ideal labels for self-reciprocal component j, general k.

    Yields, for even k: (u^(k/2)); (f); (u^(k/2)+u^t f w); (u^i+f w);
    (u^i, u^(k-i) f); (u^i+u^t f w, u^(k-i) f) — and the odd-k analogue —
    with every w running over the Theta set of the matching truncation.
    """
    theta = {s: theta_set(fd, j, s).members for s in range(1, k // 2 + 1)}
    if k % 2 == 0:
        yield IdealLabel("u_pow", i=k // 2)
        yield IdealLabel("u_f", s=0)
        for t in range(k // 2):
            for w in theta[k // 2 - t]:
                yield IdealLabel("mixed_one", i=k // 2, t=t, omega=w)
        lo = k // 2 + 1
    else:
        yield IdealLabel("u_f", s=0)
        lo = (k + 1) // 2
    for i in range(lo, k):
        for w in theta[k - i]:
            yield IdealLabel("mixed_two", i=i, t=0, omega=w)
        yield IdealLabel("two_gen", i=i, s=k - i)
        for t in range(1, k - i):
            for w in theta[k - i - t]:
                yield IdealLabel("two_gen_omega", i=i, t=t, s=k - i, omega=w)


def _component_label_lists(fd: FactorData, k: int):
    """Per-component-index iterables whose product is all self-dual codes."""
    lists = []
    for j in fd.component_indices():
        if j < fd.num_selfrec:
            lists.append([(lab,) for lab in selfdual_component_labels(fd, j, k)])
        else:
            lists.append([(lab, mate_label(fd, j, lab, k))
                          for lab in enumerate_ideals(fd, j, k)])
    return lists


def _assemble(fd: FactorData, k: int, choice) -> CyclicCode:
    lam, eps = fd.num_selfrec, fd.num_pairs
    components = [None] * fd.r
    for j, labs in enumerate(choice):
        components[j] = labs[0]
        if j >= lam:
            components[j + eps] = labs[1]
    return CyclicCode(fd, k, tuple(components))


def enumerate_selfdual(n: int, m: int, k: int,
                       fd: FactorData | None = None,
                       modulus: int | None = None):
    """All distinct self-dual cyclic codes of length 2n over F_{2^m}[u]/(u^k).

    Streaming; the number of codes is ``count_selfdual(n, m, k)``.
    """
    if k < 2:
        raise UnsupportedK("self-duality needs k >= 2")
    if fd is None:
        fd = factor_xn_minus_1(n, m, modulus)
    return _iter_selfdual(fd, k)


def _iter_selfdual(fd: FactorData, k: int):
    for choice in itertools.product(*_component_label_lists(fd, k)):
        yield _assemble(fd, k, choice)


def count_selfdual(n: int, m: int, k: int,
                   fd: FactorData | None = None,
                   modulus: int | None = None) -> int:
    """Number of self-dual cyclic codes of length 2n over F_{2^m}[u]/(u^k)."""
    if k < 2:
        raise UnsupportedK("self-duality needs k >= 2")
    if fd is None:
        fd = factor_xn_minus_1(n, m, modulus)
    total = sum(1 << (m * s) for s in range(k // 2 + 1))
    for j in range(1, fd.num_selfrec):
        d = fd.degree(j)
        total *= sum(1 << (d * m * s // 2) for s in range(k // 2 + 1))
    for j in range(fd.num_selfrec, fd.num_selfrec + fd.num_pairs):
        total *= count_ideals(1 << (fd.degree(j) * m), k)
    return total


# ---------------------------------------------------------------------------
# all cyclic codes (no duality constraint)
# ---------------------------------------------------------------------------

def enumerate_cyclic(n: int, m: int, k: int,
                     fd: FactorData | None = None,
                     modulus: int | None = None):
    """Every cyclic code of length 2n over F_{2^m}[u]/(u^k), streaming."""
    if fd is None:
        fd = factor_xn_minus_1(n, m, modulus)
    per_factor = [list(enumerate_ideals(fd, j, k)) for j in range(fd.r)]
    for combo in itertools.product(*per_factor):
        yield CyclicCode(fd, k, tuple(combo))


def count_cyclic(n: int, m: int, k: int,
                 fd: FactorData | None = None,
                 modulus: int | None = None) -> int:
    if fd is None:
        fd = factor_xn_minus_1(n, m, modulus)
    total = 1
    for j in range(fd.r):
        total *= count_ideals(1 << (fd.degree(j) * m), k)
    return total


# ---------------------------------------------------------------------------
# independent per-k literal tables (cross-check generators)
# ---------------------------------------------------------------------------

def _lab(kind, **kw) -> IdealLabel:
    return IdealLabel(kind, **kw)


def _k2_selfrec(theta1):
    yield _lab("u_pow", i=1)
    yield _lab("u_f", s=0)
    for w in theta1:
        yield _lab("mixed_one", i=1, t=0, omega=(w,))


def _k2_pairs(fd, j):
    for i in range(3):
        yield _lab("u_pow", i=i), _lab("u_pow", i=2 - i)
    yield _lab("u_f", s=0), _lab("u_f", s=0)
    yield _lab("u_f", s=1), _lab("two_gen", i=1, s=0)
    yield _lab("two_gen", i=1, s=0), _lab("u_f", s=1)
    ring = qt.field_ring(fd, j)
    for w in ring.elements():
        if w == P_ZERO:
            continue
        wp = _omega_prime(fd, j, (w,))
        yield (_lab("mixed_one", i=1, t=0, omega=(w,)),
               _lab("mixed_one", i=1, t=0, omega=wp))


def _k3_selfrec(theta1):
    yield _lab("u_f", s=0)
    yield _lab("two_gen", i=2, s=1)
    for w in theta1:
        yield _lab("mixed_two", i=2, t=0, omega=(w,))


def _k3_pairs(fd, j):
    for i in range(4):
        yield _lab("u_pow", i=i), _lab("u_pow", i=3 - i)
    yield _lab("u_f", s=0), _lab("u_f", s=0)
    for s_ in (1, 2):
        yield _lab("u_f", s=s_), _lab("two_gen", i=3 - s_, s=0)
    ring = qt.field_ring(fd, j)
    nz = [w for w in ring.elements() if w != P_ZERO]
    for w in nz:
        wp = _omega_prime(fd, j, (w,))
        yield (_lab("mixed_one", i=1, t=0, omega=(w,)),
               _lab("mixed_one", i=2, t=1, omega=wp))
        yield (_lab("mixed_one", i=2, t=1, omega=(w,)),
               _lab("mixed_one", i=1, t=0, omega=wp))
        yield (_lab("mixed_two", i=2, t=0, omega=(w,)),
               _lab("mixed_two", i=2, t=0, omega=wp))
    for i in range(1, 3):
        for s_ in range(i):
            mate = (_lab("u_f", s=3 - i) if s_ == 0
                    else _lab("two_gen", i=3 - s_, s=3 - i))
            yield _lab("two_gen", i=i, s=s_), mate


def _k4_selfrec(theta1):
    yield _lab("u_pow", i=2)
    yield _lab("u_f", s=0)
    for w in theta1:
        yield _lab("mixed_one", i=2, t=1, omega=(w,))
    rest = (P_ZERO,) + tuple(theta1)
    for a0 in theta1:
        for a1 in rest:
            yield _lab("mixed_one", i=2, t=0, omega=(a0, a1))
    for w in theta1:
        yield _lab("mixed_two", i=3, t=0, omega=(w,))
    yield _lab("two_gen", i=3, s=1)


def _k4_pairs(fd, j):
    for i in range(5):
        yield _lab("u_pow", i=i), _lab("u_pow", i=4 - i)
    yield _lab("u_f", s=0), _lab("u_f", s=0)
    for s_ in (1, 2, 3):
        yield _lab("u_f", s=s_), _lab("two_gen", i=4 - s_, s=0)
    ring = qt.field_ring(fd, j)
    nz = [w for w in ring.elements() if w != P_ZERO]
    for i in (1, 2, 3):
        for w in nz:
            wp = _omega_prime(fd, j, (w,))
            yield (_lab("mixed_one", i=i, t=i - 1, omega=(w,)),
                   _lab("mixed_one", i=4 - i, t=3 - i, omega=wp))
    for a0 in nz:
        for a1 in ring.elements():
            th = (a0, a1)
            thp = _omega_prime(fd, j, th)
            yield (_lab("mixed_one", i=2, t=0, omega=th),
                   _lab("mixed_one", i=2, t=0, omega=thp))
    for w in nz:
        wp = _omega_prime(fd, j, (w,))
        yield (_lab("mixed_two", i=3, t=0, omega=(w,)),
               _lab("mixed_two", i=3, t=0, omega=wp))
        yield (_lab("mixed_two", i=3, t=1, omega=(w,)),
               _lab("two_gen_omega", i=2, t=0, s=1, omega=wp))
        yield (_lab("two_gen_omega", i=2, t=0, s=1, omega=(w,)),
               _lab("mixed_two", i=3, t=1, omega=wp))
    for i in range(1, 4):
        for s_ in range(i):
            mate = (_lab("u_f", s=4 - i) if s_ == 0
                    else _lab("two_gen", i=4 - s_, s=4 - i))
            yield _lab("two_gen", i=i, s=s_), mate


def _k5_selfrec(theta1):
    yield _lab("u_f", s=0)
    rest = (P_ZERO,) + tuple(theta1)
    for a0 in theta1:
        for a1 in rest:
            yield _lab("mixed_two", i=3, t=0, omega=(a0, a1))
    for w in theta1:
        yield _lab("mixed_two", i=4, t=0, omega=(w,))
    yield _lab("two_gen", i=3, s=2)
    yield _lab("two_gen", i=4, s=1)
    for w in theta1:
        yield _lab("two_gen_omega", i=3, t=1, s=2, omega=(w,))


def _k5_pairs(fd, j):
    for i in range(6):
        yield _lab("u_pow", i=i), _lab("u_pow", i=5 - i)
    yield _lab("u_f", s=0), _lab("u_f", s=0)
    for s_ in (1, 2, 3, 4):
        yield _lab("u_f", s=s_), _lab("two_gen", i=5 - s_, s=0)
    ring = qt.field_ring(fd, j)
    nz = [w for w in ring.elements() if w != P_ZERO]
    for i in (1, 2, 3, 4):
        for w in nz:
            wp = _omega_prime(fd, j, (w,))
            yield (_lab("mixed_one", i=i, t=i - 1, omega=(w,)),
                   _lab("mixed_one", i=5 - i, t=4 - i, omega=wp))
    for a0 in nz:
        for a1 in ring.elements():
            th = (a0, a1)
            thp = _omega_prime(fd, j, th)
            yield (_lab("mixed_one", i=2, t=0, omega=th),
                   _lab("mixed_one", i=3, t=1, omega=thp))
            yield (_lab("mixed_one", i=3, t=1, omega=th),
                   _lab("mixed_one", i=2, t=0, omega=thp))
            yield (_lab("mixed_two", i=3, t=0, omega=th),
                   _lab("mixed_two", i=3, t=0, omega=thp))
    for w in nz:
        wp = _omega_prime(fd, j, (w,))
        yield (_lab("mixed_two", i=4, t=0, omega=(w,)),
               _lab("mixed_two", i=4, t=0, omega=wp))
        yield (_lab("mixed_two", i=4, t=1, omega=(w,)),
               _lab("two_gen_omega", i=3, t=0, s=1, omega=wp))
        yield (_lab("mixed_two", i=4, t=2, omega=(w,)),
               _lab("two_gen_omega", i=2, t=0, s=1, omega=wp))
        yield (_lab("two_gen_omega", i=2, t=0, s=1, omega=(w,)),
               _lab("mixed_two", i=4, t=2, omega=wp))
        yield (_lab("two_gen_omega", i=3, t=0, s=1, omega=(w,)),
               _lab("mixed_two", i=4, t=1, omega=wp))
        yield (_lab("two_gen_omega", i=3, t=1, s=2, omega=(w,)),
               _lab("two_gen_omega", i=3, t=1, s=2, omega=wp))
    for i in range(1, 5):
        for s_ in range(i):
            mate = (_lab("u_f", s=5 - i) if s_ == 0
                    else _lab("two_gen", i=5 - s_, s=5 - i))
            yield _lab("two_gen", i=i, s=s_), mate


_SELFREC_TABLES = {2: _k2_selfrec, 3: _k3_selfrec, 4: _k4_selfrec,
                   5: _k5_selfrec}
_PAIR_TABLES = {2: _k2_pairs, 3: _k3_pairs, 4: _k4_pairs, 5: _k5_pairs}


def _list_from_tables(fd: FactorData, k: int):
    selfrec_fn, pair_fn = _SELFREC_TABLES[k], _PAIR_TABLES[k]
    lists = []
    for j in fd.component_indices():
        if j < fd.num_selfrec:
            theta1 = [w[0] for w in theta_set(fd, j, 1).members]
            lists.append([(lab,) for lab in selfrec_fn(theta1)])
        else:
            lists.append(list(pair_fn(fd, j)))
    for choice in itertools.product(*lists):
        yield _assemble(fd, k, choice)


def selfdual_k2_list(n: int, m: int, fd: FactorData | None = None,
                     modulus: int | None = None):
    """Self-dual codes for k=2 from the literal closed table (cross-check)."""
    if fd is None:
        fd = factor_xn_minus_1(n, m, modulus)
    return _list_from_tables(fd, 2)


def selfdual_k345_list(n: int, m: int, k: int,
                       fd: FactorData | None = None,
                       modulus: int | None = None):
    """Self-dual codes for k in {3,4,5} from literal tables (cross-check)."""
    if k not in (3, 4, 5):
        raise UnsupportedK(f"no literal table for k={k}")
    if fd is None:
        fd = factor_xn_minus_1(n, m, modulus)
    return _list_from_tables(fd, k)


# ---------------------------------------------------------------------------
# the designated [60, 30, 8] family (n=15, m=1, k=2)
# ---------------------------------------------------------------------------

def family_60_30_8(fd: FactorData | None = None) -> list[CyclicCode]:
    """The 48 self-dual codes of length 30 over F_2[u]/(u^2) whose Gray
    images are [60, 30, 8] binary codes.

    Component indices for n=15, m=1: 0 -> x+1, 1 -> x^2+x+1,
    2 -> x^4+x^3+x^2+x+1, 3/4 -> the reciprocal pair x^4+x+1, x^4+x^3+1.
    """
    if fd is None:
        fd = factor_xn_minus_1(15, 1)
    assert (fd.n, fd.m) == (15, 1)
    u = _lab("u_pow", i=1)
    f = _lab("u_f", s=0)

    def mixed(w):
        return _lab("mixed_one", i=1, t=0, omega=(w,))

    theta3 = [w[0] for w in theta_set(fd, 2, 1).members]    # 3 units
    x3 = (0, 0, 0, 1)
    x3x1 = (1, 1, 0, 1)
    assert x3 in theta3 and x3x1 in theta3
    c1_c3 = ([(u, c3) for c3 in [f] + [mixed(w) for w in theta3]]
             + [(f, c3) for c3 in [u] + [mixed(w) for w in theta3]]
             + [(mixed((1,)), c3) for c3 in
                [u, f, mixed(x3), mixed(x3x1)]])
    c2_choices = [u, mixed(theta_set(fd, 1, 1).members[0][0])]
    pair_choices = [(_lab("u_pow", i=0), _lab("u_pow", i=2)),
                    (_lab("u_pow", i=2), _lab("u_pow", i=0))]
    out = []
    for (c1, c3) in c1_c3:
        for c2 in c2_choices:
            for (c4, c5) in pair_choices:
                out.append(CyclicCode(fd, 2, (c1, c2, c3, c4, c5)))
    assert len(out) == 48
    return out


# ---------------------------------------------------------------------------
# bridge to explicit vectors
# ---------------------------------------------------------------------------

def to_ambient_generators(code: CyclicCode) -> list[int]:
    """Bit-packed generators of the code inside R^(2n).

    Each component generator g (an element of K_j[u]/(u^k)) is lifted to
    sum_l u^l * (idempotent_j * g_l) mod x^(2n)-1 and packed with the oracle
    bit layout ((coord*k + slot)*m + bit).
    """
    fd, k, m = code.fd, code.k, code.m
    mod = fd.modulus_2n()
    gens = []
    for j, label in enumerate(code.components):
        eps = fd.idempotents[j]
        for g in ideal_generators(fd, j, k, label):
            packed = 0
            for l, coeff in enumerate(g):
                prod = poly_mulmod(fd.ctx, eps, coeff, mod)
                for c, val in enumerate(prod):
                    if val:
                        packed |= val << ((c * k + l) * m)
            gens.append(packed)
    return gens
