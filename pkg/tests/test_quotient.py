"""Component quotient rings, truncated u-arithmetic, and unit transport."""
from __future__ import annotations

import pytest

from ucyclic.gf import P_ONE, P_ZERO, poly_key
from ucyclic import quotient as qt


def test_quot_ring_basics(fdata):
    fd = fdata(7, 1)
    ring = qt.field_ring(fd, 1)           # F_2[x]/(x^3+x+1) = F_8
    assert ring.size() == 8
    els = list(ring.elements())
    assert len(els) == 8 and els[0] == () and els[1] == P_ONE
    for a in els[1:]:
        assert ring.mul(a, ring.inv(a)) == P_ONE
    with pytest.raises(ZeroDivisionError):
        ring.inv(P_ZERO)
    # chain ring: f is nilpotent, not invertible
    cring = qt.chain_ring(fd, 1)
    f = fd.factors[1]
    assert cring.mul(f, f) == ()
    with pytest.raises(ZeroDivisionError):
        cring.inv(f)


def test_u_arithmetic(fdata):
    fd = fdata(3, 1)
    ring = qt.field_ring(fd, 1)
    one = qt.u_one(3)
    zero = qt.u_zero(3)
    a = (P_ONE, (0, 1), P_ZERO)
    assert qt.u_add(a, a) == zero
    assert qt.u_mul(ring, a, one) == a
    # u^2 * u = u^3 = 0 in ring[u]/(u^3)
    u = (P_ZERO, P_ONE, P_ZERO)
    u2 = qt.u_mul(ring, u, u)
    assert u2 == (P_ZERO, P_ZERO, P_ONE)
    assert qt.u_mul(ring, u2, u) == zero
    assert qt.u_scale(ring, a, (0, 1)) == tuple(ring.mul(x, (0, 1)) for x in a)


@pytest.mark.parametrize("s", [1, 2, 3])
def test_u_units_and_inverses(fdata, s):
    fd = fdata(3, 1)
    ring = qt.field_ring(fd, 1)           # F_4
    units = list(qt.u_units(ring, s))
    q = ring.size()
    assert len(units) == (q - 1) * q ** (s - 1)
    assert len(set(units)) == len(units)
    one = qt.u_one(s)
    for w in units:
        assert qt.is_unit(ring, w)
        assert qt.u_mul(ring, w, qt.u_inv(ring, w)) == one
    assert not qt.is_unit(ring, qt.u_zero(s))
    if s > 1:
        nilp = (P_ZERO, P_ONE) + (P_ZERO,) * (s - 2)
        assert not qt.is_unit(ring, nilp)


def test_x_inverse(fdata):
    for (n, m, j) in [(7, 1, 1), (7, 1, 2), (15, 1, 2), (5, 2, 1)]:
        fd = fdata(n, m)
        ring = qt.field_ring(fd, j)
        xi = qt.x_inverse(fd, j)
        assert ring.mul(xi, (0, 1)) == P_ONE


def test_hat_involution_selfrec(fdata):
    fd = fdata(15, 1)
    for j in (1, 2):                      # self-reciprocal components
        ring = qt.field_ring(fd, j)
        for a in ring.elements():
            assert qt.hat(fd, j, qt.hat(fd, j, a)) == a
        # hat is a ring morphism
        a, b = (1, 1), (0, 1)
        assert qt.hat(fd, j, ring.mul(a, b)) == ring.mul(
            qt.hat(fd, j, a), qt.hat(fd, j, b))


def test_hat_pair_roundtrip(fdata):
    fd = fdata(7, 1)
    j, jm = 1, 2
    ring_src = qt.field_ring(fd, j)
    for a in ring_src.elements():
        b = qt.hat(fd, j, a)              # lands mod f_mate
        assert qt.hat(fd, jm, b) == a


def test_omega_prime_roundtrip(fdata):
    # omega'' = delta^2 x^(-2d) hat(hat(w)) = w since delta in F_{2^m},
    # hat an involution on the pair, and x^(-d) transported consistently
    for (n, m) in [(7, 1), (15, 1), (3, 2)]:
        fd = fdata(n, m)
        for j in fd.component_indices():
            ring = qt.field_ring(fd, j)
            for s in (1, 2):
                for w in list(qt.u_units(ring, s))[:6]:
                    wp = qt.omega_prime(fd, j, w)
                    wpp = qt.omega_prime(fd, fd.mate(j), wp)
                    assert wpp == w


def test_u_key_orders(fdata):
    fd = fdata(3, 1)
    ring = qt.field_ring(fd, 1)
    units = list(qt.u_units(ring, 2))
    keys = [qt.u_key(fd.ctx, w) for w in units]
    assert len(set(keys)) == len(keys)
    assert all(k[0] != 0 for k in keys)   # unit constant term
