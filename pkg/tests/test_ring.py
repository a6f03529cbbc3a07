import random

import pytest

from blobalg.ring import RingElem, parse_scalar

Q = RingElem.q_power
ONE = RingElem.one()
ZERO = RingElem.zero()
G = RingElem.gamma()
DE = RingElem.delta_e()
LOOP = RingElem.loop()


def test_additive_inverse():
    assert Q(1) + (-Q(1)) == ZERO
    assert not (Q(1) + (-Q(1)))


def test_loop_scalar_is_q_plus_qinv():
    assert Q(1) + Q(-1) == LOOP


def test_doubling():
    assert G + G == RingElem({(0, 1, 0): 2})


def test_q_inverse():
    assert Q(1) * Q(-1) == ONE
    assert (Q(1) * Q(-1)).is_one()


def test_loop_squared():
    assert LOOP * LOOP == Q(2) + RingElem.integer(2) + Q(-2)


def test_gamma_times_loop():
    assert G * LOOP == G * Q(1) + G * Q(-1)


def test_negative_g_exponent_rejected():
    with pytest.raises(ValueError):
        RingElem({(0, -1, 0): 1})


def _random_elem(rng):
    terms = {}
    for _ in range(rng.randrange(0, 4)):
        mono = (rng.randrange(-3, 4), rng.randrange(0, 3), rng.randrange(0, 3))
        terms[mono] = rng.randrange(-5, 6)
    return RingElem(terms)


def test_ring_axioms_bulk():
    # associativity and distributivity on >= 10^4 random triples
    rng = random.Random("ring-axioms")
    for _ in range(10_000):
        a, b, c = (_random_elem(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c


def test_pow_matches_repeated_mul():
    rng = random.Random("ring-pow")
    for _ in range(200):
        a = _random_elem(rng)
        k = rng.randrange(0, 5)
        by_hand = ONE
        for _ in range(k):
            by_hand = by_hand * a
        assert a ** k == by_hand


def test_specialize_examples():
    p = 1_000_003
    assert LOOP.specialize(1, 7, 7, p) == 2
    assert G.specialize(5, 5, 9, p) == 5
    # q^2 at q=3 mod 7: plain modular arithmetic gives 9 mod 7 = 2
    assert Q(2).specialize(3, 1, 1, 7) == (3 * 3) % 7 == 2


def test_specialize_rejects_zero_q():
    with pytest.raises(ValueError):
        LOOP.specialize(0, 1, 1, 101)
    with pytest.raises(ValueError):
        LOOP.specialize(202, 1, 1, 101)


def test_specialize_is_ring_homomorphism():
    rng = random.Random("ring-hom")
    p = 2_147_483_647
    for _ in range(500):
        a, b = _random_elem(rng), _random_elem(rng)
        q0 = rng.randrange(1, p)
        g0 = rng.randrange(0, p)
        d0 = rng.randrange(0, p)
        sa = a.specialize(q0, g0, d0, p)
        sb = b.specialize(q0, g0, d0, p)
        assert (a * b).specialize(q0, g0, d0, p) == (sa * sb) % p
        assert (a + b).specialize(q0, g0, d0, p) == (sa + sb) % p


def test_canonical_string_forms():
    assert str(LOOP) == "q^-1 + q"
    assert str(G * Q(2)) == "g*q^2"
    assert str(DE) == "de"
    assert str(ZERO) == "0"
    assert str(RingElem.integer(-2) * Q(1) + ONE) == "1 - 2*q"


def test_parse_roundtrip():
    rng = random.Random("ring-parse")
    for _ in range(300):
        a = _random_elem(rng)
        assert parse_scalar(str(a)) == a
    assert parse_scalar("g*q^0") == G
    assert parse_scalar("3*de^2") == RingElem.integer(3) * DE * DE


def test_equal_elements_have_identical_term_maps():
    a = Q(1) + G - Q(1)
    assert a.terms == G.terms
    assert hash(a) == hash(G)
