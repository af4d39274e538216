"""Combinatorial identities behind the constant term of the J-function.

For G(2,n) the coefficient of the identity class in the degree-d J-function
has two closed forms: a nested-binomial chain sum and a harmonic-number sum.
Their equality is a q-hypergeometric identity in disguise; the specialized
q-identity it degenerates from is evaluated here exactly at rational points.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial


class PoleError(ZeroDivisionError):
    """A chosen (q, a) point makes a denominator factor vanish."""


def harmonic(m):
    """Partial sum of the harmonic series, with harmonic(0) = 0."""
    if m < 0:
        raise ValueError("harmonic numbers need m >= 0")
    return sum((Fraction(1, j) for j in range(1, m + 1)), Fraction(0))


def _chains(length, cap):
    """Nondecreasing tuples (j_1 <= ... <= j_length) with entries in 0..cap."""
    if length == 0:
        yield ()
        return
    for rest in _chains(length - 1, cap):
        lo = rest[-1] if rest else 0
        for j in range(lo, cap + 1):
            yield rest + (j,)


def constant_term_g2n(n, d):
    """Identity-class coefficient of the degree-d J-function of G(2,n):

    1/(d!)^n * (-1)^d/2 * sum_{m=0..d} C(d,m)^n (n(d-2m)(g(m)-g(d-m)) + 2),

    with g the harmonic partial sum.
    """
    if n < 3 or d < 0:
        raise ValueError("need n >= 3 and d >= 0")
    total = Fraction(0)
    for m in range(d + 1):
        inner = n * (d - 2 * m) * (harmonic(m) - harmonic(d - m)) + 2
        total += Fraction(comb(d, m) ** n) * inner
    total *= Fraction((-1) ** d, 2)
    return total / Fraction(factorial(d) ** n)


def a_series_g2n(n, d):
    """Degree-d coefficient of the toric-degeneration series for G(2,n):

    1/(d!)^n * sum over chains j_1 <= ... <= j_{n-3} <= d of
    C(d, j_{n-3})^2 C(d, j_{n-4}) ... C(d, j_1) C(j_{n-3}, j_{n-4}) ... C(j_2, j_1).
    """
    if n < 3 or d < 0:
        raise ValueError("need n >= 3 and d >= 0")
    total = 0
    for chain in _chains(n - 3, d):
        term = 1
        if chain:
            term *= comb(d, chain[-1])  # the top index enters squared
        for j in chain:
            term *= comb(d, j)
        for lo, hi in zip(chain, chain[1:]):
            term *= comb(hi, lo)
        total += term
    return Fraction(total, factorial(d) ** n)


def prop35_check(n, d):
    """Both closed forms of the constant term, without the 1/(d!)^n factor.

    Left: the chain sum written with factorials,
        sum over chains of d!^(n-2) / ((d-j_{n-3})! *
        prod_{m=1..n-3} (d-j_m)! (j_m - j_{m-1})! j_m!),  j_0 = 0.
    Right: (-1)^d/2 sum_m C(d,m)^n (n(d-2m)(g(m)-g(d-m)) + 2).
    Returns (lhs, rhs, equal).
    """
    if n < 3 or d < 0:
        raise ValueError("need n >= 3 and d >= 0")
    lhs = Fraction(0)
    for chain in _chains(n - 3, d):
        den = factorial(d - chain[-1]) if chain else factorial(d)
        prev = 0
        for j in chain:
            den *= factorial(d - j) * factorial(j - prev) * factorial(j)
            prev = j
        lhs += Fraction(factorial(d) ** (n - 2), den)
    rhs = Fraction(0)
    for m in range(d + 1):
        rhs += Fraction(comb(d, m) ** n) * (
            n * (d - 2 * m) * (harmonic(m) - harmonic(d - m)) + 2
        )
    rhs *= Fraction((-1) ** d, 2)
    return lhs, rhs, lhs == rhs


def pochhammer_q(a, q, m):
    """q-shifted factorial (a;q)_m = prod_{l=0..m-1} (1 - a q^l)."""
    out = Fraction(1)
    for l in range(m):
        out *= 1 - a * q**l
    return out


def bailey_specialization_check(n, d, qs, a):
    """The chain-sum q-identity behind the constant-term equality, evaluated
    exactly at rational (qs, a).  Raises PoleError when a denominator factor
    vanishes; otherwise returns whether the two finite sums agree.

    Left side:
      (aq;q)_d/(aq^{1+d};q)_d * sum over chains 0 <= j_1 <= ... <= j_{n-3} <= d
      of  (q^{-d};q)_{j_{n-3}} prod_{m=1..n-3} (q^{-d};q)_{j_m}
          / ( prod_{m=1..n-3} (aq^{1+d};q)_{j_m} (q;q)_{j_m - j_{m-1}} )
          * (-1)^{j_{n-3}} q^{d j_{n-3}} q^{-C(j_{n-3},2)}
          * prod_{m=1..n-3} (-1)^{j_m} q^{d j_m} a^{j_m} q^{C(j_m+1,2)}.

    The standalone top-index factor q^{d j_{n-3}} comes from rewriting
    (q;q)_d/(q;q)_{d-j} as (q^{-d};q)_j (-1)^j q^{dj - C(j,2)} in the
    iterated-chain expansion, and is pinned both against the right side and
    against a direct exact implementation of the chain recursion.

    Right side:
      sum_{m=0..d} (q^{-d};q)_m^{n-1} / (aq^{1+d};q)_m^{n-1}
          * (-1)^{(n-1)m} q^{(n-2)C(m,2)} a^{(n-2)m} q^{(n-2+d)m + d m (n-2)}
          * q^{-C(m,2)} alpha_m,
      alpha_m = (-1)^m q^{C(m,2)} (a;q)_m/(q;q)_m * (1 - a q^{2m})/(1 - a).
    """
    if n < 3 or d < 0:
        raise ValueError("need n >= 3 and d >= 0")
    qs, a = Fraction(qs), Fraction(a)
    if qs == 0 or a == 0:
        raise PoleError("q and a must be nonzero")
    if a == 1:
        raise PoleError("a = 1 makes 1 - a vanish")

    def safe_div(num, den, what):
        if den == 0:
            raise PoleError(f"{what} vanishes at (q={qs}, a={a})")
        return num / den

    aq1d = a * qs ** (1 + d)
    qinv_d = qs ** (-d)

    lhs_pref = safe_div(pochhammer_q(a * qs, qs, d), pochhammer_q(aq1d, qs, d), "(aq^{1+d};q)_d")
    lhs_sum = Fraction(0)
    for chain in _chains(n - 3, d):
        top = chain[-1] if chain else 0
        num = pochhammer_q(qinv_d, qs, top)
        den = Fraction(1)
        prev = 0
        for j in chain:
            num *= pochhammer_q(qinv_d, qs, j)
            den *= pochhammer_q(aq1d, qs, j) * pochhammer_q(qs, qs, j - prev)
            prev = j
        term = safe_div(num, den, "a chain denominator")
        term *= (-1) ** top * qs ** (d * top) * qs ** (-comb(top, 2))
        for j in chain:
            term *= (-1) ** j * qs ** (d * j) * a**j * qs ** comb(j + 1, 2)
        lhs_sum += term
    lhs = lhs_pref * lhs_sum

    rhs = Fraction(0)
    for m in range(d + 1):
        num = pochhammer_q(qinv_d, qs, m) ** (n - 1)
        den = pochhammer_q(aq1d, qs, m) ** (n - 1)
        term = safe_div(num, den, "(aq^{1+d};q)_m")
        term *= (
            (-1) ** ((n - 1) * m)
            * qs ** ((n - 2) * comb(m, 2))
            * a ** ((n - 2) * m)
            * qs ** ((n - 2 + d) * m + d * m * (n - 2))
            * qs ** (-comb(m, 2))
        )
        alpha = (
            (-1) ** m
            * qs ** comb(m, 2)
            * safe_div(pochhammer_q(a, qs, m), pochhammer_q(qs, qs, m), "(q;q)_m")
            * safe_div(1 - a * qs ** (2 * m), 1 - a, "1 - a")
        )
        rhs += term * alpha
    return lhs == rhs
