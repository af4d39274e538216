import random
from fractions import Fraction

import pytest

from qgrass.algebra import (
    InexactDivision,
    RegistryMismatch,
    SparsePolynomial,
    TruncationPolicy,
    VariableRegistry,
    alternant_determinant,
    antisym_div_vandermonde,
    inv_linear_power_series,
    is_antisymmetric,
    perm_sign,
    poly_arith,
    sign_isotypic_projection,
    vandermonde,
)
from qgrass.partitions import Partition
from qgrass.schur import schur_polynomial


def xh_registry(r):
    return VariableRegistry(num_x=r, has_hbar=True)


def x_vars(reg):
    return [SparsePolynomial.x(reg, i) for i in range(1, reg.num_x + 1)]


def test_difference_of_squares():
    reg = xh_registry(2)
    x1, x2 = x_vars(reg)
    assert poly_arith(x1 - x2, x1 + x2, "mul") == x1 * x1 - x2 * x2


def test_exact_division_recovers_factor():
    reg = xh_registry(2)
    x1, x2 = x_vars(reg)
    assert poly_arith(x1 * x1 - x2 * x2, x1 - x2, "exact_div") == x1 + x2


def test_inexact_division_is_an_error():
    reg = xh_registry(2)
    x1, x2 = x_vars(reg)
    with pytest.raises(InexactDivision):
        (x1 * x1 - x2 * x2 + 1).exact_div(x1 - x2)


def test_registry_mismatch_rejected():
    a = SparsePolynomial.x(xh_registry(2), 1)
    b = SparsePolynomial.x(VariableRegistry(num_x=3, has_hbar=True), 1)
    with pytest.raises(RegistryMismatch):
        a * b


def test_negative_exponent_only_for_hbar():
    reg = xh_registry(2)
    SparsePolynomial(reg, {(0, 0, -3): Fraction(1)})  # hbar slot, fine
    with pytest.raises(ValueError):
        SparsePolynomial(reg, {(-1, 0, 0): Fraction(1)})


def test_ring_properties_on_random_inputs():
    reg = xh_registry(3)
    rng = random.Random(11)

    def rand_poly():
        terms = {}
        for _ in range(rng.randint(1, 6)):
            exp = (
                rng.randint(0, 3),
                rng.randint(0, 3),
                rng.randint(0, 3),
                rng.randint(-2, 2),
            )
            terms[exp] = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        return SparsePolynomial(reg, terms)

    for _ in range(40):
        p, q, s = rand_poly(), rand_poly(), rand_poly()
        assert (p + q) - q == p
        assert p * q == q * p
        assert (p * q) * s == p * (q * s)
        assert p * (q + s) == p * q + p * s


def test_inv_linear_power_series_frozen_values():
    reg = xh_registry(1)
    # hand expansion of (x + h)^(-2) to x-degree 2
    got = inv_linear_power_series(reg, 1, 1, 2, TruncationPolicy(2))
    assert got.terms == {
        (0, -2): Fraction(1),
        (1, -3): Fraction(-2),
        (2, -4): Fraction(3),
    }
    # constant term of the geometric series
    got = inv_linear_power_series(reg, 1, 1, 1, TruncationPolicy(0))
    assert got.terms == {(0, -1): Fraction(1)}
    # (x + 2h)^(-1) to x-degree 1
    got = inv_linear_power_series(reg, 1, 2, 1, TruncationPolicy(1))
    assert got.terms == {(0, -1): Fraction(1, 2), (1, -2): Fraction(-1, 4)}


def test_inv_linear_power_series_multiplies_back_to_one():
    reg = xh_registry(2)
    x1 = SparsePolynomial.x(reg, 1)
    h = SparsePolynomial.hbar(reg)
    for l in range(1, 5):
        for n in range(1, 7):
            for cap in (0, 3, 8):
                policy = TruncationPolicy(cap)
                series = inv_linear_power_series(reg, 1, l, n, policy)
                back = SparsePolynomial.constant(reg, 1)
                for _ in range(n):
                    back = back * (x1 + h * l)
                assert series.mul(back, policy) == SparsePolynomial.constant(reg, 1)


def test_vandermonde_self_division():
    reg = xh_registry(3)
    assert antisym_div_vandermonde(vandermonde(reg)) == SparsePolynomial.constant(reg, 1)


def test_antisym_div_examples():
    reg = xh_registry(2)
    x1, x2 = x_vars(reg)
    assert antisym_div_vandermonde(x1 * x1 - x2 * x2) == x1 + x2
    with pytest.raises(ValueError):
        antisym_div_vandermonde(x1 + x2)  # symmetric, not antisymmetric


def test_antisym_div_alternant_gives_schur():
    # D_{mu+delta} / D_delta is the corresponding Schur polynomial
    reg = VariableRegistry(num_x=3)
    mu = Partition((2, 1))
    alt = alternant_determinant(reg, (2 + 2, 1 + 1, 0))
    assert antisym_div_vandermonde(alt) == schur_polynomial(mu, 3, reg)


def test_antisym_div_random_symmetric_products():
    rng = random.Random(5)
    for r in (2, 3):
        reg = VariableRegistry(num_x=r)
        vdm = vandermonde(reg)
        for _ in range(12):
            sym = SparsePolynomial.zero(reg)
            for _ in range(rng.randint(1, 3)):
                size = rng.randint(0, 8)
                parts = []
                while sum(parts) < size and len(parts) < r:
                    parts.append(rng.randint(1, max(1, size - sum(parts))))
                mu = Partition(sorted((p for p in parts if p), reverse=True))
                sym = sym + schur_polynomial(mu, r, reg) * Fraction(
                    rng.randint(-4, 4), rng.randint(1, 3)
                )
            assert antisym_div_vandermonde(sym * vdm) == sym


def test_alternant_examples():
    reg = xh_registry(2)
    x1, x2 = x_vars(reg)
    assert alternant_determinant(reg, (1, 0)) == x1 - x2  # delta case equals Vandermonde
    assert alternant_determinant(reg, (1, 1)).is_zero()
    assert alternant_determinant(reg, (2, 0)) == x1 * x1 - x2 * x2


def test_alternant_sign_under_index_permutations():
    from itertools import permutations

    reg = VariableRegistry(num_x=3)
    for alpha in [(3, 1, 0), (4, 2, 1), (2, 1, 0)]:
        base = alternant_determinant(reg, alpha)
        for w in permutations(range(3)):
            permuted = tuple(alpha[w[i]] for i in range(3))
            assert alternant_determinant(reg, permuted) == base * perm_sign(w)


def test_sign_projection_idempotent_and_kills_symmetric():
    reg = VariableRegistry(num_x=2)
    x1, x2 = x_vars(reg)
    assert sign_isotypic_projection(x1 + x2).is_zero()
    p = sign_isotypic_projection(x1 * x1 * x2)
    assert sign_isotypic_projection(p) == p
    assert is_antisymmetric(p)


def test_truncation_idempotent():
    reg = xh_registry(2)
    x1, x2 = x_vars(reg)
    p = (x1 + x2) * (x1 + x2) * (x1 + x2) + 1
    policy = TruncationPolicy(2)
    once = p.truncate(policy)
    assert once.truncate(policy) == once
    assert once.max_x_degree() <= 2


def test_substitute_evaluates_hbar():
    reg = xh_registry(1)
    x1 = SparsePolynomial.x(reg, 1)
    h = SparsePolynomial.hbar(reg)
    p = x1 * h + SparsePolynomial(reg, {(0, -2): Fraction(3)})
    got = p.substitute(reg.hbar_index, Fraction(1, 2))
    assert got == x1 * Fraction(1, 2) + 12


def test_json_round_trip():
    reg = VariableRegistry(num_x=2, has_hbar=True, novikov="single")
    p = SparsePolynomial(
        reg, {(1, 2, -1, 0): Fraction(-3, 7), (0, 0, 0, 2): Fraction(5)}
    )
    doc = p.to_json()
    assert doc["vars"] == ["x1", "x2", "h", "q"]
    assert all("/" in t["coeff"] for t in doc["terms"])
    assert SparsePolynomial.from_json(reg, doc) == p
