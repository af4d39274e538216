import random
from fractions import Fraction

import pytest

from qgrass.identities import (
    PoleError,
    a_series_g2n,
    bailey_specialization_check,
    constant_term_g2n,
    harmonic,
    pochhammer_q,
    prop35_check,
)
from qgrass.jfunction import j_grassmannian
from qgrass.partitions import EMPTY
from qgrass.rings import RingSpecG


def test_harmonic_values():
    assert harmonic(0) == 0
    assert harmonic(1) == 1
    assert harmonic(4) == Fraction(25, 12)
    with pytest.raises(ValueError):
        harmonic(-1)


def test_constant_term_examples():
    assert constant_term_g2n(5, 0) == 1
    assert constant_term_g2n(4, 1) == 2
    # the identity-class coefficient of the degree-1 series on G(2,4)
    series = j_grassmannian(RingSpecG(2, 4), 1)
    assert series.components[0][EMPTY] == constant_term_g2n(4, 1)


def test_a_series_examples():
    assert a_series_g2n(6, 0) == 1
    assert a_series_g2n(4, 1) == 2
    # empty chain for three-row case: 1/(d!)^3
    assert a_series_g2n(3, 2) == Fraction(1, 8)
    assert a_series_g2n(3, 3) == Fraction(1, 216)


def test_constant_term_equals_chain_series():
    for n in range(3, 8):
        for d in range(6):
            assert constant_term_g2n(n, d) == a_series_g2n(n, d), (n, d)


def test_both_equal_j_series_component():
    for n in range(3, 6):
        for d in range(4):
            series = j_grassmannian(RingSpecG(2, n), d)
            k0 = series.components.get(0, {}).get(EMPTY, Fraction(0))
            assert k0 == constant_term_g2n(n, d) == a_series_g2n(n, d), (n, d)


def test_prop35_examples():
    assert prop35_check(3, 1) == (1, 1, True)
    lhs, rhs, ok = prop35_check(6, 0)
    assert (lhs, rhs, ok) == (1, 1, True)
    lhs, rhs, ok = prop35_check(4, 2)
    assert ok and lhs == rhs


def test_prop35_sweep():
    for n in range(3, 9):
        for d in range(9):
            assert prop35_check(n, d)[2], (n, d)


def test_pochhammer():
    q = Fraction(1, 2)
    assert pochhammer_q(Fraction(3), q, 0) == 1
    assert pochhammer_q(Fraction(3), q, 2) == (1 - 3) * (1 - Fraction(3, 2))


def test_bailey_examples():
    assert bailey_specialization_check(3, 1, Fraction(1, 2), Fraction(1, 3))
    assert bailey_specialization_check(4, 2, Fraction(2, 3), Fraction(1, 5))
    assert bailey_specialization_check(5, 0, Fraction(1, 7), Fraction(2, 3))


def test_bailey_random_rational_points():
    rng = random.Random(97)
    for n in range(3, 6):
        for d in range(4):
            for _ in range(10):
                qv = Fraction(rng.randint(1, 9), rng.randint(10, 23))
                av = Fraction(rng.randint(1, 9), rng.randint(10, 23))
                assert bailey_specialization_check(n, d, qv, av), (n, d, qv, av)


def test_bailey_pole_detection():
    with pytest.raises(PoleError):
        bailey_specialization_check(3, 1, Fraction(1, 2), Fraction(1))
    with pytest.raises(PoleError):
        bailey_specialization_check(3, 1, Fraction(0), Fraction(1, 3))
    with pytest.raises(PoleError):
        # a = q^{-(1+d)} makes (aq^{1+d};q)_m vanish for m >= 1
        bailey_specialization_check(3, 1, Fraction(1, 2), Fraction(4))
