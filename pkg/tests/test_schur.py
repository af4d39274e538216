from fractions import Fraction

import pytest

from qgrass.algebra import SparsePolynomial, VariableRegistry, alternant_determinant
from qgrass.partitions import EMPTY, Partition, partitions_with_rows
from qgrass.schur import (
    delta_vector,
    lr_product,
    schur_expand,
    schur_polynomial,
    straighten_alternant,
)


def test_schur_basic_values():
    reg = VariableRegistry(num_x=2)
    x1, x2 = SparsePolynomial.x(reg, 1), SparsePolynomial.x(reg, 2)
    assert schur_polynomial(EMPTY, 2, reg) == SparsePolynomial.constant(reg, 1)
    assert schur_polynomial(Partition((1,)), 2, reg) == x1 + x2
    # monomial-listing oracle: the only column-strict filling of a 2-box
    # column with entries from {1,2} is [1;2]
    assert schur_polynomial(Partition((1, 1)), 2, reg) == x1 * x2


def test_schur_rejects_too_many_rows():
    with pytest.raises(ValueError):
        schur_polynomial(Partition((1, 1, 1)), 2)


def test_straighten_examples():
    assert straighten_alternant((2, 1, 0)) == (1, EMPTY)
    assert straighten_alternant((0, 2)) == (-1, Partition((1,)))
    assert straighten_alternant((1, 1)) is None


def test_straighten_matches_alternant_sign():
    reg = VariableRegistry(num_x=3)
    delta = delta_vector(3)
    for alpha in [(0, 2, 5), (4, 0, 1), (3, 2, 0), (1, 3, 2)]:
        sign, lam = straighten_alternant(alpha)
        target = tuple(m + d for m, d in zip(lam.padded(3), delta))
        assert alternant_determinant(reg, alpha) == alternant_determinant(
            reg, target
        ) * sign


def test_lr_examples():
    assert lr_product(Partition((1,)), Partition((1,)), 2) == {
        Partition((2,)): 1,
        Partition((1, 1)): 1,
    }
    assert lr_product(Partition((2, 1)), EMPTY, 2) == {Partition((2, 1)): 1}
    assert lr_product(Partition((2,)), Partition((1, 1)), 2) == {Partition((3, 1)): 1}


def test_lr_against_polynomial_product_oracle():
    # the expansion must reproduce the literal product of Schur polynomials
    for r in (2, 3):
        reg = VariableRegistry(num_x=r)
        shapes = [p for s in range(5) for p in partitions_with_rows(s, r)]
        for mu in shapes:
            for nu in shapes:
                product = schur_polynomial(mu, r, reg) * schur_polynomial(nu, r, reg)
                rebuilt = SparsePolynomial.zero(reg)
                for rho, coeff in lr_product(mu, nu, r).items():
                    rebuilt = rebuilt + schur_polynomial(rho, r, reg) * coeff
                assert rebuilt == product, (mu, nu)


def test_lr_symmetry_and_nonnegativity():
    shapes = [p for s in range(5) for p in partitions_with_rows(s, 3)]
    for mu in shapes:
        for nu in shapes:
            ab = lr_product(mu, nu, 3)
            assert ab == lr_product(nu, mu, 3)
            assert all(c > 0 for c in ab.values())


def test_schur_expand_round_trip():
    reg = VariableRegistry(num_x=2)
    poly = (
        schur_polynomial(Partition((2, 1)), 2, reg) * Fraction(3, 2)
        + schur_polynomial(Partition((3,)), 2, reg) * (-2)
    )
    assert schur_expand(poly, 2) == {
        Partition((2, 1)): Fraction(3, 2),
        Partition((3,)): Fraction(-2),
    }


def test_schur_expand_rejects_asymmetric():
    reg = VariableRegistry(num_x=2)
    with pytest.raises(ValueError):
        schur_expand(SparsePolynomial.x(reg, 1), 2)
