"""Theta sets, mate labels, and self-dual code enumeration."""
from __future__ import annotations

import itertools

import pytest

from ucyclic import quotient as qt
from ucyclic.errors import BadDescriptor, UnsupportedK
from ucyclic.gf import poly_key
from ucyclic.ideals import IdealLabel, enumerate_ideals
from ucyclic.oracle import brute_is_selfdual, span_code
from ucyclic.selfdual import (CyclicCode, count_cyclic, count_selfdual,
                              enumerate_cyclic, enumerate_selfdual,
                              family_60_30_8, is_self_dual, mate_label,
                              selfdual_k2_list, selfdual_k345_list, theta_set,
                              to_ambient_generators)


def _polyset(ctx, ts):
    return {tuple(poly_key(ctx, c) for c in w) for w in ts.members}


def test_theta_worked_sets(fdata):
    fd = fdata(15, 1)
    # degree-2 component: the single unit x+1; degree-4 component at index 2:
    # {x^3, x^3+x+1, x+1}
    t2 = theta_set(fd, 1, 1)
    assert _polyset(fd.ctx, t2) == {(0b11,)}
    t3 = theta_set(fd, 2, 1)
    assert _polyset(fd.ctx, t3) == {(0b1000,), (0b1011,), (0b11,)}


@pytest.mark.parametrize("n,m,j,s", [(15, 1, 1, 1), (15, 1, 2, 1),
                                     (15, 1, 2, 2), (9, 1, 1, 1),
                                     (5, 1, 1, 2), (5, 2, 1, 1), (3, 1, 1, 3)])
def test_theta_sizes(fdata, n, m, j, s):
    fd = fdata(n, m)
    sigma = 1 << (fd.degree(j) * m // 2)
    ts = theta_set(fd, j, s)
    assert len(ts) == (sigma - 1) * sigma ** (s - 1)
    assert len(set(ts.members)) == len(ts)


def test_theta_zero_component_is_all_units(fdata):
    fd = fdata(3, 2)
    ring = qt.field_ring(fd, 0)
    for s in (1, 2, 3):
        ts = theta_set(fd, 0, s)
        assert set(ts.members) == set(qt.u_units(ring, s))


def test_theta_members_satisfy_fixed_point(fdata):
    # w = delta x^(-d) hat(w) per u-slot, the defining fixed-point property
    for (n, m, j, s) in [(15, 1, 1, 1), (15, 1, 2, 2), (9, 1, 1, 1),
                         (5, 2, 1, 2)]:
        fd = fdata(n, m)
        for w in theta_set(fd, j, s):
            assert qt.omega_prime(fd, j, w) == w


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_mate_label_involution(fdata, k):
    for (n, m) in [(7, 1), (15, 1), (1, 2)]:
        fd = fdata(n, m)
        for j in fd.component_indices():
            jm = fd.mate(j)
            for lab in enumerate_ideals(fd, j, k):
                mate = mate_label(fd, j, lab, k)
                back = mate_label(fd, jm, mate, k)
                assert back == lab, (n, m, j, lab)


def test_mate_label_k2_shapes(fdata):
    fd = fdata(3, 1)
    cases = {
        IdealLabel("u_pow", i=0): IdealLabel("u_pow", i=2),
        IdealLabel("u_pow", i=1): IdealLabel("u_pow", i=1),
        IdealLabel("u_f", s=0): IdealLabel("u_f", s=0),
        IdealLabel("u_f", s=1): IdealLabel("two_gen", i=1, s=0),
        IdealLabel("two_gen", i=1, s=0): IdealLabel("u_f", s=1),
    }
    for lab, want in cases.items():
        assert mate_label(fd, 0, lab, 2) == want


def test_is_self_dual_positive_and_negative(fdata):
    fd = fdata(7, 1)
    for code in enumerate_selfdual(7, 1, 2, fd):
        assert is_self_dual(code)
    # <1> at every component is the full ring, not self-dual
    full = CyclicCode(fd, 2, tuple(IdealLabel("u_pow", i=0)
                                   for _ in range(fd.r)))
    assert not is_self_dual(full)


COUNTS = [
    # (n, m, k) -> expected number of self-dual codes
    (1, 1, 2, 3), (3, 1, 2, 9), (7, 1, 2, 39), (15, 1, 2, 945),
    (9, 1, 2, 81), (1, 2, 2, 5), (1, 1, 3, 3), (1, 1, 4, 7), (1, 1, 5, 7),
    (3, 1, 3, 9), (3, 2, 2, 45),
]


@pytest.mark.parametrize("n,m,k,want", COUNTS)
def test_count_and_enumeration_agree(fdata, n, m, k, want):
    fd = fdata(n, m)
    codes = list(enumerate_selfdual(n, m, k, fd))
    assert count_selfdual(n, m, k, fd) == want
    assert len(codes) == len(set(codes)) == want
    for code in codes:
        # self-dual => |C|^2 = |ambient| = 2^(2 n m k)
        assert code.size_log2() * 2 == 2 * n * m * k


def test_enumerated_codes_are_brute_selfdual(fdata):
    for (n, m, k) in [(1, 1, 2), (1, 1, 3), (3, 1, 2), (1, 2, 2)]:
        fd = fdata(n, m)
        for code in enumerate_selfdual(n, m, k, fd):
            dense = span_code(n, m, k, to_ambient_generators(code),
                              fd.ctx.modulus)
            assert brute_is_selfdual(dense, fd.ctx.modulus)


def test_k2_list_equals_enumeration(fdata):
    for (n, m) in [(3, 1), (7, 1), (15, 1), (1, 2)]:
        fd = fdata(n, m)
        assert set(selfdual_k2_list(n, m, fd)) == \
            set(enumerate_selfdual(n, m, 2, fd))


@pytest.mark.parametrize("k", [3, 4, 5])
def test_k345_list_equals_enumeration_small(fdata, k):
    for (n, m) in [(1, 1), (3, 1)]:
        fd = fdata(n, m)
        assert set(selfdual_k345_list(n, m, k, fd)) == \
            set(enumerate_selfdual(n, m, k, fd))


def test_k345_list_rejects_other_k(fdata):
    with pytest.raises(UnsupportedK):
        selfdual_k345_list(3, 1, 2, fdata(3, 1))
    with pytest.raises(UnsupportedK):
        enumerate_selfdual(3, 1, 1, fdata(3, 1))
    with pytest.raises(UnsupportedK):
        count_selfdual(3, 1, 1, fdata(3, 1))


def test_cyclic_code_validation(fdata):
    fd = fdata(3, 1)
    with pytest.raises(BadDescriptor):
        CyclicCode(fd, 2, (IdealLabel("u_pow", i=1),))   # wrong count
    with pytest.raises(ValueError):
        CyclicCode(fd, 2, (IdealLabel("u_pow", i=9),
                           IdealLabel("u_pow", i=1)))    # out of range


def test_count_cyclic(fdata):
    # product of per-component ideal counts
    assert count_cyclic(3, 1, 2, fdata(3, 1)) == 7 * 9
    assert count_cyclic(7, 1, 2, fdata(7, 1)) == 7 * 13 * 13
    assert sum(1 for _ in enumerate_cyclic(3, 1, 2, fdata(3, 1))) == 63


def test_family_60_30_8_structure(fdata):
    fd = fdata(15, 1)
    fam = family_60_30_8(fd)
    assert len(fam) == len(set(fam)) == 48
    all945 = set(enumerate_selfdual(15, 1, 2, fd))
    for code in fam:
        assert code in all945
        assert code.dim() == 30
        # the two quartic pair components carry <1> and <0> in some order
        kinds = {code.components[3].kind, code.components[4].kind}
        assert kinds == {"u_pow"}
        assert {code.components[3].i, code.components[4].i} == {0, 2}


def test_ambient_generators_span_right_size(fdata):
    fd = fdata(7, 1)
    for code in itertools.islice(enumerate_cyclic(7, 1, 2, fd), 40):
        dense = span_code(7, 1, 2, to_ambient_generators(code),
                          fd.ctx.modulus)
        assert len(dense.basis) == code.size_log2()
