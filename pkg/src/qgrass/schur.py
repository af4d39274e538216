"""Schur polynomials via bialternants, straightening, and LR products.

A Schur polynomial is the exact quotient D_{mu+delta} / D_delta of two
alternants, with delta = (r-1, r-2, ..., 0).  Products of Schur polynomials
are expanded in the Schur basis by multiplying one factor monomial-by-monomial
against the shifted exponent of the other and straightening each resulting
alternant index, which reuses the exact-division kernels instead of tableau
combinatorics.
"""

from __future__ import annotations

from functools import lru_cache

from .algebra import (
    SparsePolynomial,
    VariableRegistry,
    alternant_determinant,
    antisym_div_vandermonde,
    vandermonde,
)
from .partitions import Partition


def delta_vector(r):
    return tuple(range(r - 1, -1, -1))


@lru_cache(maxsize=None)
def _x_registry(r):
    return VariableRegistry(num_x=r)


@lru_cache(maxsize=None)
def schur_monomials(mu_parts, r):
    """Monomials of the Schur polynomial s_mu in r variables, as {x-exp: coeff}."""
    mu = Partition(mu_parts)
    if len(mu) > r:
        raise ValueError(f"{mu} has more than {r} rows")
    reg = _x_registry(r)
    alpha = tuple(m + d for m, d in zip(mu.padded(r), delta_vector(r)))
    quot = antisym_div_vandermonde(alternant_determinant(reg, alpha))
    return {exp: c for exp, c in quot.terms.items()}


def schur_polynomial(mu, r, registry=None):
    """The Schur polynomial s_mu embedded in ``registry`` (x-only by default)."""
    monos = schur_monomials(mu.parts, r)
    if registry is None:
        registry = _x_registry(r)
    if registry.num_x != r:
        raise ValueError("registry has the wrong number of x-variables")
    pad = registry.width - r
    return SparsePolynomial(registry, {exp + (0,) * pad: c for exp, c in monos.items()})


def straighten_alternant(alpha):
    """Sort an alternant index, tracking the sign.

    Returns None when two entries coincide (the alternant vanishes),
    otherwise (sign, lam) with alpha = w(lam + delta) and sign = sgn(w).
    """
    if len(set(alpha)) < len(alpha):
        return None
    order = sorted(range(len(alpha)), key=lambda i: -alpha[i])
    inversions = 0
    for a in range(len(order)):
        for b in range(a + 1, len(order)):
            if order[a] > order[b]:
                inversions += 1
    sign = -1 if inversions % 2 else 1
    srt = [alpha[i] for i in order]
    lam = [s - d for s, d in zip(srt, delta_vector(len(alpha)))]
    return sign, Partition(lam)


@lru_cache(maxsize=None)
def _lr_product_cached(mu_parts, nu_parts, r):
    mu = Partition(mu_parts)
    alpha0 = tuple(m + d for m, d in zip(mu.padded(r), delta_vector(r)))
    out = {}
    for exp, c in schur_monomials(nu_parts, r).items():
        st = straighten_alternant(tuple(a + e for a, e in zip(alpha0, exp)))
        if st is None:
            continue
        sign, lam = st
        n = out.get(lam, 0) + sign * c
        if n == 0:
            out.pop(lam, None)
        else:
            out[lam] = n
    for lam, n in out.items():
        if n != int(n) or n < 0:
            raise AssertionError(f"LR coefficient {n} at {lam} is not a nonneg integer")
    return tuple((lam, int(n)) for lam, n in sorted(out.items(), key=lambda t: t[0].parts))


def lr_product(mu, nu, r):
    """Expansion of s_mu * s_nu: {rho: N_{mu,nu}^rho} over partitions with <= r rows."""
    if len(mu) > r or len(nu) > r:
        raise ValueError("both partitions must fit in r rows")
    return dict(_lr_product_cached(mu.parts, nu.parts, r))


def schur_expand(poly, r):
    """Expand a symmetric x-polynomial in the Schur basis: {lam: coefficient}.

    Multiplies by the Vandermonde determinant, reads off the coefficients of
    the strictly decreasing exponents lam + delta, and verifies the resulting
    alternant combination reproduces the product (which fails loudly if the
    input was not symmetric).
    """
    reg = poly.registry
    if any(e != 0 for exp in poly.terms for e in exp[r:]):
        raise ValueError("schur_expand expects a polynomial in the x-variables only")
    prod = poly * vandermonde(reg)
    delta = delta_vector(r)
    out = {}
    for exp, c in prod.terms.items():
        xs = exp[:r]
        if all(xs[i] > xs[i + 1] for i in range(r - 1)):
            out[Partition(tuple(a - d for a, d in zip(xs, delta)))] = c
    check = SparsePolynomial.zero(reg)
    for lam, c in out.items():
        alpha = tuple(m + d for m, d in zip(lam.padded(r), delta))
        check = check + alternant_determinant(reg, alpha) * c
    if check != prod:
        raise ValueError("polynomial is not symmetric in the x-variables")
    return out
