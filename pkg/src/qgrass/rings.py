"""Small quantum cohomology of G(r,n) and of the product of projective spaces.

The Grassmannian side works in the Schubert basis with rim-hook reduction;
the product-of-projective-spaces side works in the reduced monomial basis
x_1^{i_1}...x_r^{i_r}, 0 <= i_j <= n-1, with the relations x_i^n = q_i.
The two are tied together by the map gamma -> (lift of gamma) * Vandermonde,
which this module implements together with the integration formulas, the
compatibility checks between the two quantum products, and the
Vafa-Intriligator numeric evaluation of Gromov-Witten invariants.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import comb, factorial

import mpmath

from .algebra import (
    SparsePolynomial,
    VariableRegistry,
    alternant_determinant,
    perm_sign,
    sign_isotypic_projection,
    vandermonde,
)
from .partitions import Partition, dual_partition, partitions_in_rectangle, remove_n_rim
from .schur import delta_vector, lr_product, schur_polynomial

ZERO = Fraction(0)


class PrecisionError(ArithmeticError):
    """Numeric rounding residue exceeded the allowed tolerance."""


@dataclass(frozen=True)
class RingSpecG:
    """The Grassmannian G(r,n); the Novikov variable q has degree n."""

    r: int
    n: int

    def __post_init__(self):
        if not 0 < self.r < self.n:
            raise ValueError("need 0 < r < n")

    @property
    def dim(self):
        return self.r * (self.n - self.r)

    def basis(self):
        return partitions_in_rectangle(self.r, self.n - self.r)

    @property
    def top(self):
        return Partition((self.n - self.r,) * self.r)


@lru_cache(maxsize=None)
def p_registry(r):
    """x_1..x_r with Novikov vector q_1..q_r."""
    return VariableRegistry(num_x=r, novikov="vector")


@lru_cache(maxsize=None)
def pbar_registry(r):
    """x_1..x_r with a single Novikov variable q (the specialized quotient)."""
    return VariableRegistry(num_x=r, novikov="single")


# ---------------------------------------------------------------------------
# Classes on the Grassmannian side: Schubert basis with q-polynomial weights
# ---------------------------------------------------------------------------


@dataclass
class ClassG:
    """Element of QH*(G): {partition: {q_power: coefficient}}."""

    spec: RingSpecG
    expansion: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for mu, qpoly in self.expansion.items():
            cq = {k: Fraction(c) for k, c in qpoly.items() if c != 0}
            if cq:
                if not mu.fits(self.spec.r, self.spec.n - self.spec.r):
                    raise ValueError(f"{mu} does not fit the basis rectangle")
                clean[mu] = cq
        self.expansion = clean

    @classmethod
    def schubert(cls, spec, mu, q_power=0, coeff=1):
        return cls(spec, {mu: {q_power: Fraction(coeff)}})

    @classmethod
    def zero(cls, spec):
        return cls(spec, {})

    def is_zero(self):
        return not self.expansion

    def is_classical(self):
        return all(k == 0 for qp in self.expansion.values() for k in qp)

    def __add__(self, other):
        if self.spec != other.spec:
            raise ValueError("ring mismatch")
        out = {mu: dict(qp) for mu, qp in self.expansion.items()}
        for mu, qp in other.expansion.items():
            tgt = out.setdefault(mu, {})
            for k, c in qp.items():
                tgt[k] = tgt.get(k, ZERO) + c
        return ClassG(self.spec, out)

    def scale(self, coeff, q_power=0):
        coeff = Fraction(coeff)
        out = {
            mu: {k + q_power: c * coeff for k, c in qp.items()}
            for mu, qp in self.expansion.items()
        }
        return ClassG(self.spec, out)

    def coefficient(self, mu, q_power=0):
        return self.expansion.get(mu, {}).get(q_power, ZERO)

    def __eq__(self, other):
        return (
            isinstance(other, ClassG)
            and self.spec == other.spec
            and self.expansion == other.expansion
        )

    def __repr__(self):
        if not self.expansion:
            return "0"
        bits = []
        for mu in sorted(self.expansion, key=lambda p: (p.size, p.parts)):
            for k in sorted(self.expansion[mu]):
                c = self.expansion[mu][k]
                txt = "" if c == 1 else ("-" if c == -1 else f"{c} ")
                if k:
                    txt += "q " if k == 1 else f"q^{k} "
                bits.append(f"{txt}s[{','.join(map(str, mu.parts))}]")
        return " + ".join(bits).replace("+ -", "- ")


@dataclass
class ClassP:
    """Element of QH*(P) in the reduced monomial basis (exponents < n)."""

    spec: RingSpecG
    poly: SparsePolynomial

    def __post_init__(self):
        if self.poly.registry != p_registry(self.spec.r):
            raise ValueError("polynomial lives in the wrong registry")
        if any(e >= self.spec.n for exp in self.poly.terms for e in exp[: self.spec.r]):
            raise ValueError("class is not in reduced normal form")

    def __eq__(self, other):
        return (
            isinstance(other, ClassP)
            and self.spec == other.spec
            and self.poly == other.poly
        )


def class_p_from_poly(spec, poly):
    """Reduce an arbitrary registry polynomial by x_i^n = q_i and wrap it."""
    return ClassP(spec, _reduce_p(poly, spec))


def _reduce_p(poly, spec):
    reg = poly.registry
    r, n = spec.r, spec.n
    out = {}
    for exp, c in poly.terms.items():
        exp = list(exp)
        for i in range(r):
            carry, exp[i] = divmod(exp[i], n)
            if carry:
                exp[reg.q_index(i + 1)] += carry
        exp = tuple(exp)
        s = out.get(exp, ZERO) + c
        if s == 0:
            out.pop(exp, None)
        else:
            out[exp] = s
    return SparsePolynomial(reg, out)


# ---------------------------------------------------------------------------
# Quantum products
# ---------------------------------------------------------------------------


def quantum_reduce_schur(rho, spec):
    """Reduce a Schur class s_rho into the Schubert basis of QH*(G).

    Repeatedly removes an n-rim hook starting from the top row while the
    first part exceeds n-r, accumulating (-1)^(r-s) q per hook of height s;
    a walk that runs out of boxes or ends in an illegal rim kills the class.
    """
    r, n = spec.r, spec.n
    if len(rho) > r:
        raise ValueError(f"{rho} has more than {r} rows")
    sign, hooks = 1, 0
    while rho.parts and rho.parts[0] > n - r:
        outcome = remove_n_rim(rho, n, 1)
        if outcome.kind != "hook":
            return ClassG.zero(spec)
        sign *= (-1) ** (r - outcome.height)
        hooks += 1
        rho = outcome.remainder
    return ClassG.schubert(spec, rho, q_power=hooks, coeff=sign)


@lru_cache(maxsize=None)
def _basis_product_g(r, n, mu_parts, nu_parts):
    spec = RingSpecG(r, n)
    total = ClassG.zero(spec)
    for rho, mult in lr_product(Partition(mu_parts), Partition(nu_parts), r).items():
        total = total + quantum_reduce_schur(rho, spec).scale(mult)
    return total


def quantum_product_G(a, b):
    """Bilinear extension of the rim-hook product of Schubert classes."""
    if a.spec != b.spec:
        raise ValueError("ring mismatch")
    spec = a.spec
    total = ClassG.zero(spec)
    for mu, qa in a.expansion.items():
        for nu, qb in b.expansion.items():
            base = _basis_product_g(spec.r, spec.n, mu.parts, nu.parts)
            for ka, ca in qa.items():
                for kb, cb in qb.items():
                    total = total + base.scale(ca * cb, q_power=ka + kb)
    return total


def classical_product_G(a, b):
    """Cup product in H*(G): the q^0 part of the quantum product."""
    prod = quantum_product_G(a, b)
    out = {}
    for mu, qp in prod.expansion.items():
        if 0 in qp:
            out[mu] = {0: qp[0]}
    return ClassG(prod.spec, out)


def quantum_product_P(a, b):
    """Monomial product followed by the substitution x_i^n -> q_i."""
    if a.spec != b.spec:
        raise ValueError("ring mismatch")
    return ClassP(a.spec, _reduce_p(a.poly * b.poly, a.spec))


# ---------------------------------------------------------------------------
# Integration, the antisymmetrizing map, and the projector
# ---------------------------------------------------------------------------


def integrate_G(a):
    """Coefficient of the top Schubert class, as {q_power: coefficient}."""
    return dict(a.expansion.get(a.spec.top, {}))


def integrate_P(a):
    """Coefficient of x_1^{n-1}...x_r^{n-1}, as {(d_1..d_r): coefficient}."""
    spec = a.spec
    r, n = spec.r, spec.n
    top = (n - 1,) * r
    out = {}
    for exp, c in a.poly.terms.items():
        if exp[:r] == top:
            out[exp[r:]] = c
    return out


def integrate_P_raw(poly, spec):
    """Classical integral of an unreduced polynomial: its top x-coefficient.

    Dropping (classically zero) monomials with an exponent >= n cannot change
    the coefficient of the top monomial, so no reduction is needed.
    """
    top = (spec.n - 1,) * spec.r
    out = ZERO
    for exp, c in poly.terms.items():
        if exp[: spec.r] == top:
            out += c
    return out


def lift_classical(gamma):
    """Evaluate the Schur representatives of a classical class in H*(P)."""
    if not gamma.is_classical():
        raise ValueError("class has Novikov terms")
    spec = gamma.spec
    reg = p_registry(spec.r)
    out = SparsePolynomial.zero(reg)
    for mu, qp in gamma.expansion.items():
        out = out + schur_polynomial(mu, spec.r, reg) * qp[0]
    return ClassP(spec, out)


def theta(gamma):
    """gamma -> (lift of gamma) * Vandermonde, injective with antisymmetric image.

    The highest power of each x_i in a Schur polynomial times the Vandermonde
    determinant is at most n-1, so the product is already in reduced form.
    """
    if not gamma.is_classical():
        raise ValueError("theta is defined on classical classes")
    spec = gamma.spec
    reg = p_registry(spec.r)
    delta = delta_vector(spec.r)
    out = SparsePolynomial.zero(reg)
    for mu, qp in gamma.expansion.items():
        alpha = tuple(m + d for m, d in zip(mu.padded(spec.r), delta))
        out = out + alternant_determinant(reg, alpha) * qp[0]
    return ClassP(spec, out)


def theta_bar(gamma):
    """Extension of theta over q: ClassG -> polynomial in the single-q quotient."""
    spec = gamma.spec
    reg = pbar_registry(spec.r)
    delta = delta_vector(spec.r)
    qslot = reg.q_index()
    out = SparsePolynomial.zero(reg)
    for mu, qp in gamma.expansion.items():
        alpha = tuple(m + d for m, d in zip(mu.padded(spec.r), delta))
        alt = alternant_determinant(reg, alpha)
        for k, c in qp.items():
            shift = [0] * reg.width
            shift[qslot] = k
            out = out + alt * SparsePolynomial.monomial(reg, shift, c)
    return out


def specialize_novikov(a):
    """Substitute q_i -> (-1)^(r-1) q, landing in the single-q quotient ring."""
    spec = a.spec
    r = spec.r
    dst = pbar_registry(r)
    qslot = dst.q_index()
    out = {}
    for exp, c in a.poly.terms.items():
        d = sum(exp[r:])
        new = [0] * dst.width
        new[:r] = exp[:r]
        new[qslot] = d
        if (r - 1) * d % 2:
            c = -c
        new = tuple(new)
        s = out.get(new, ZERO) + c
        if s == 0:
            out.pop(new, None)
        else:
            out[new] = s
    return SparsePolynomial(dst, out)


def project_antisymmetric(a):
    """Orthogonal projection onto the antisymmetric classes (x-variables only)."""
    return ClassP(a.spec, sign_isotypic_projection(a.poly))


# ---------------------------------------------------------------------------
# Integration formulas and compatibility checks
# ---------------------------------------------------------------------------


def martin_check(gamma):
    """Compare the integral over G with the weighted integral over P.

    integral_G gamma  ==  (-1)^C(r,2)/r! * integral_P (lift gamma) Delta^2.
    Returns (lhs, rhs, equal).
    """
    spec = gamma.spec
    lhs = integrate_G(gamma).get(0, ZERO)
    lift = lift_classical(gamma)
    vdm = vandermonde(p_registry(spec.r))
    rhs = integrate_P_raw(lift.poly * vdm * vdm, spec)
    rhs *= Fraction((-1) ** comb(spec.r, 2), factorial(spec.r))
    return lhs, rhs, lhs == rhs


def theorem25_check(mu, nu, spec):
    """Both routes from (mu, nu) into the specialized quotient ring agree.

    Left: rim-hook quantum product in QH*(G), then multiply by the Vandermonde
    determinant with q kept.  Right: quantum product against theta(s_mu) in
    QH*(P), then substitute q_i -> (-1)^(r-1) q.  Returns structural equality.
    """
    lhs = theta_bar(quantum_product_G(ClassG.schubert(spec, mu), ClassG.schubert(spec, nu)))
    rhs_p = quantum_product_P(theta(ClassG.schubert(spec, mu)), lift_classical(ClassG.schubert(spec, nu)))
    rhs = specialize_novikov(rhs_p)
    return lhs == rhs


def lemma26_check(nu, f, spec):
    """The antisymmetric projector commutes with s_nu * (.) after specialization."""
    snu = lift_classical(ClassG.schubert(spec, nu))
    lhs = sign_isotypic_projection(specialize_novikov(quantum_product_P(snu, f)))
    rhs = specialize_novikov(quantum_product_P(snu, project_antisymmetric(f)))
    return lhs == rhs


# ---------------------------------------------------------------------------
# Gromov-Witten invariants: exact and numeric
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GWInvariant:
    value: Fraction
    degree: int
    insertions: tuple


def admissible(mu, nu, rho, d, spec):
    return mu.size + nu.size + rho.size == spec.n * d + spec.dim


def gw_invariant_G(mu, nu, rho, d, spec):
    """Structure constant <s_mu, s_nu, s_rho>_d from the rim-hook product."""
    if d < 0 or not admissible(mu, nu, rho, d, spec):
        return GWInvariant(ZERO, d, (mu, nu, rho))
    prod = quantum_product_G(ClassG.schubert(spec, mu), ClassG.schubert(spec, nu))
    value = prod.coefficient(dual_partition(rho, spec.r, spec.n), q_power=d)
    return GWInvariant(value, d, (mu, nu, rho))


def gw_invariant_P(a, b, c, degrees):
    """Coefficient of q_1^{d_1}...q_r^{d_r} in integral_P(a * b * c)."""
    if any(d < 0 for d in degrees):
        raise ValueError("degrees must be nonnegative")
    triple = quantum_product_P(quantum_product_P(a, b), c)
    return integrate_P(triple).get(tuple(degrees), ZERO)


def _compositions(d, r):
    if r == 1:
        yield (d,)
        return
    for first in range(d + 1):
        for rest in _compositions(d - first, r - 1):
            yield (first,) + rest


def qintegration_check(mu, nu, rho, d, spec):
    """Quantum analogue of the integration formula, both sides computed.

    <s_mu,s_nu,s_rho>_d  ==  (-1)^C(r,2)/r! * (-1)^(d(r-1)) *
        sum over d_1+..+d_r = d of <s_mu Delta, s_nu, s_rho Delta>_(d_i).
    """
    r = spec.r
    lhs = gw_invariant_G(mu, nu, rho, d, spec).value
    a = theta(ClassG.schubert(spec, mu))
    b = lift_classical(ClassG.schubert(spec, nu))
    c = theta(ClassG.schubert(spec, rho))
    total = ZERO
    for degs in _compositions(d, r):
        total += gw_invariant_P(a, b, c, degs)
    rhs = total * Fraction((-1) ** (comb(r, 2) + d * (r - 1)), factorial(r))
    return lhs, rhs, lhs == rhs


@dataclass(frozen=True)
class VIResult:
    value: Fraction
    residue: float


def _det_numeric(rows):
    size = len(rows)
    total = mpmath.mpc(0)
    for w in permutations(range(size)):
        term = mpmath.mpc(perm_sign(w))
        for i in range(size):
            term *= rows[i][w[i]]
        total += term
    return total


def vafa_intriligator(mu, nu, rho, d, spec, precision=50, tolerance=1e-6):
    """Gromov-Witten invariant as a residue sum over tuples of roots of unity.

    <s_mu,s_nu,s_rho>_d = (-1)^(C(r,2)+d(r-1)) / (r! n^r) *
        sum over (eps_1..eps_r), eps_i^n = 1, of
        s_mu(eps) s_nu(eps) s_rho(eps) prod_i eps_i prod_{i<j}(eps_i - eps_j)^2.

    Evaluated in high-precision complex arithmetic and rounded to the nearest
    rational with denominator dividing r!; a residue above the tolerance
    raises PrecisionError rather than rounding silently.
    """
    r, n = spec.r, spec.n
    if not admissible(mu, nu, rho, d, spec):
        raise ValueError("insertions do not satisfy the degree condition")
    delta = delta_vector(r)
    alphas = [
        tuple(m + dd for m, dd in zip(p.padded(r), delta)) for p in (mu, nu, rho)
    ]
    with mpmath.workdps(precision):
        roots = [mpmath.expjpi(mpmath.mpf(2 * k) / n) for k in range(n)]
        total = mpmath.mpc(0)
        for pick in product(range(n), repeat=r):
            if len(set(pick)) < r:
                continue  # the squared Vandermonde factor vanishes
            eps = [roots[k] for k in pick]
            dnm = _det_numeric([[e**dd for dd in delta] for e in eps])
            val = mpmath.mpc(1)
            for alpha in alphas:
                val *= _det_numeric([[e**a for a in alpha] for e in eps]) / dnm
            for e in eps:
                val *= e
            for i in range(r):
                for j in range(i + 1, r):
                    val *= (eps[i] - eps[j]) ** 2
            total += val
        sign = (-1) ** (comb(r, 2) + d * (r - 1))
        total = total * sign / (factorial(r) * n**r)
        scaled = total.real * factorial(r)
        num = int(mpmath.nint(scaled))
        value = Fraction(num, factorial(r))
        residue = float(abs(total - mpmath.mpf(num) / factorial(r)))
    if residue > tolerance:
        raise PrecisionError(
            f"rounding residue {residue:g} exceeds tolerance {tolerance:g}"
        )
    return VIResult(value, residue)
