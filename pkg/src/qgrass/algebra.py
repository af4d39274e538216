"""Exact sparse multivariate polynomial arithmetic.

All coefficients are exact rationals (`fractions.Fraction`).  A polynomial
lives in a fixed :class:`VariableRegistry` describing the exponent-vector
layout: Chern-root variables x_1..x_r, optionally hbar (written ``h``),
Novikov variables (a single ``q`` or a vector ``q_1..q_r``), and optionally
torus weights ``l_1..l_n``.  Exponents are dense integer tuples; only the
hbar slot may carry negative exponents (Laurent).

Term order is graded lexicographic on the full exponent vector, which makes
polynomial equality a structural dictionary comparison and drives the exact
division routine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import comb, factorial

ZERO = Fraction(0)
ONE = Fraction(1)


class RegistryMismatch(ValueError):
    """Operands live in different variable registries."""


class InexactDivision(ArithmeticError):
    """A polynomial division left a nonzero remainder."""


@dataclass(frozen=True)
class VariableRegistry:
    """Exponent-vector layout: x-block, then hbar, then Novikov, then weights."""

    num_x: int
    has_hbar: bool = False
    novikov: str = "none"  # "none", "single" or "vector"
    num_lambda: int = 0

    def __post_init__(self):
        if self.num_x < 0 or self.num_lambda < 0:
            raise ValueError("variable counts must be nonnegative")
        if self.novikov not in ("none", "single", "vector"):
            raise ValueError("novikov must be 'none', 'single' or 'vector'")

    @property
    def num_novikov(self):
        if self.novikov == "none":
            return 0
        if self.novikov == "single":
            return 1
        return self.num_x

    @property
    def width(self):
        return self.num_x + int(self.has_hbar) + self.num_novikov + self.num_lambda

    def x_index(self, i):
        """Slot of x_i (1-based, matching the mathematical notation)."""
        if not 1 <= i <= self.num_x:
            raise ValueError(f"x index {i} out of range 1..{self.num_x}")
        return i - 1

    @property
    def hbar_index(self):
        if not self.has_hbar:
            raise ValueError("registry has no hbar variable")
        return self.num_x

    def q_index(self, i=1):
        """Slot of q (single) or q_i (vector), 1-based."""
        if not 1 <= i <= self.num_novikov:
            raise ValueError(f"Novikov index {i} out of range")
        return self.num_x + int(self.has_hbar) + (i - 1)

    def lambda_index(self, j):
        if not 1 <= j <= self.num_lambda:
            raise ValueError(f"lambda index {j} out of range")
        return self.num_x + int(self.has_hbar) + self.num_novikov + (j - 1)

    def var_names(self):
        names = [f"x{i}" for i in range(1, self.num_x + 1)]
        if self.has_hbar:
            names.append("h")
        if self.novikov == "single":
            names.append("q")
        elif self.novikov == "vector":
            names += [f"q{i}" for i in range(1, self.num_x + 1)]
        names += [f"l{j}" for j in range(1, self.num_lambda + 1)]
        return tuple(names)


@dataclass(frozen=True)
class TruncationPolicy:
    """Cap on total degree in the x-variables; truncation is idempotent."""

    max_x_degree: int

    def __post_init__(self):
        if self.max_x_degree < 0:
            raise ValueError("max_x_degree must be nonnegative")


def _order_key(exp):
    # graded lex: compare total degree first, then the exponent tuple
    return (sum(exp), exp)


class SparsePolynomial:
    """Dictionary-backed exact polynomial over a variable registry."""

    __slots__ = ("registry", "terms")

    def __init__(self, registry, terms=None):
        self.registry = registry
        clean = {}
        if terms:
            w = registry.width
            hslot = registry.num_x if registry.has_hbar else -1
            for exp, c in terms.items():
                c = Fraction(c)
                if c == 0:
                    continue
                if len(exp) != w:
                    raise ValueError(f"exponent width {len(exp)} != registry width {w}")
                for k, e in enumerate(exp):
                    if e < 0 and k != hslot:
                        raise ValueError("negative exponent outside the hbar slot")
                exp = tuple(exp)
                prev = clean.get(exp, ZERO) + c
                if prev == 0:
                    clean.pop(exp, None)
                else:
                    clean[exp] = prev
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, registry):
        return cls(registry)

    @classmethod
    def constant(cls, registry, c):
        return cls(registry, {(0,) * registry.width: Fraction(c)})

    @classmethod
    def monomial(cls, registry, exp, c=ONE):
        return cls(registry, {tuple(exp): Fraction(c)})

    @classmethod
    def variable(cls, registry, slot):
        exp = [0] * registry.width
        exp[slot] = 1
        return cls.monomial(registry, exp)

    @classmethod
    def x(cls, registry, i):
        return cls.variable(registry, registry.x_index(i))

    @classmethod
    def hbar(cls, registry):
        return cls.variable(registry, registry.hbar_index)

    # -- basic queries --------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.registry == other.registry and self.terms == other.terms

    def __hash__(self):
        return hash((self.registry, frozenset(self.terms.items())))

    def x_degree(self, exp):
        return sum(exp[: self.registry.num_x])

    def max_x_degree(self):
        return max((self.x_degree(e) for e in self.terms), default=0)

    def sorted_terms(self):
        """Terms in descending graded-lex order (the canonical order)."""
        return sorted(self.terms.items(), key=lambda t: _order_key(t[0]), reverse=True)

    # -- arithmetic -----------------------------------------------------

    def _check(self, other):
        if self.registry != other.registry:
            raise RegistryMismatch("polynomials live in different registries")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SparsePolynomial.constant(self.registry, other)
        self._check(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, ZERO) + c
            if s == 0:
                out.pop(exp, None)
            else:
                out[exp] = s
        p = SparsePolynomial.__new__(SparsePolynomial)
        p.registry, p.terms = self.registry, out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = SparsePolynomial.__new__(SparsePolynomial)
        p.registry = self.registry
        p.terms = {e: -c for e, c in self.terms.items()}
        return p

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SparsePolynomial.constant(self.registry, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def mul(self, other, policy=None):
        """Product, optionally dropping terms above a total x-degree cap."""
        self._check(other)
        cap = policy.max_x_degree if policy is not None else None
        nx = self.registry.num_x
        out = {}
        for ea, ca in self.terms.items():
            da = sum(ea[:nx])
            for eb, cb in other.terms.items():
                if cap is not None and da + sum(eb[:nx]) > cap:
                    continue
                exp = tuple(a + b for a, b in zip(ea, eb))
                s = out.get(exp, ZERO) + ca * cb
                if s == 0:
                    out.pop(exp, None)
                else:
                    out[exp] = s
        p = SparsePolynomial.__new__(SparsePolynomial)
        p.registry, p.terms = self.registry, out
        return p

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if c == 0:
                return SparsePolynomial.zero(self.registry)
            p = SparsePolynomial.__new__(SparsePolynomial)
            p.registry = self.registry
            p.terms = {e: cc * c for e, cc in self.terms.items()}
            return p
        return self.mul(other)

    __rmul__ = __mul__

    def truncate(self, policy):
        cap = policy.max_x_degree
        nx = self.registry.num_x
        p = SparsePolynomial.__new__(SparsePolynomial)
        p.registry = self.registry
        p.terms = {e: c for e, c in self.terms.items() if sum(e[:nx]) <= cap}
        return p

    def exact_div(self, divisor):
        """Exact quotient; raises InexactDivision if the divisor does not divide.

        Leading-term elimination in graded-lex order.  Sound for any divisor;
        termination is guaranteed for the divisors used here (x-homogeneous,
        hbar-free), and a step guard covers pathological inputs.
        """
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        hslot = self.registry.num_x if self.registry.has_hbar else -1
        div_terms = divisor.sorted_terms()
        d_exp, d_coeff = div_terms[0]
        rem = dict(self.terms)
        quo = {}
        guard = 0
        limit = 1000 * (len(self.terms) + len(divisor.terms) + 10) ** 2
        while rem:
            guard += 1
            if guard > limit:
                raise InexactDivision("division did not terminate; divisor unsuitable")
            r_exp = max(rem, key=_order_key)
            q_exp = tuple(a - b for a, b in zip(r_exp, d_exp))
            if any(e < 0 for k, e in enumerate(q_exp) if k != hslot):
                raise InexactDivision("inexact polynomial division (nonzero remainder)")
            q_c = rem[r_exp] / d_coeff
            quo[q_exp] = quo.get(q_exp, ZERO) + q_c
            for de, dc in div_terms:
                exp = tuple(a + b for a, b in zip(q_exp, de))
                s = rem.get(exp, ZERO) - q_c * dc
                if s == 0:
                    rem.pop(exp, None)
                else:
                    rem[exp] = s
        return SparsePolynomial(self.registry, quo)

    # -- substitutions and symmetries ------------------------------------

    def permute_x(self, perm):
        """Apply x_i -> x_{perm[i]} (perm is 0-based on the x-block)."""
        nx = self.registry.num_x
        out = {}
        for exp, c in self.terms.items():
            new = list(exp)
            for i in range(nx):
                new[perm[i]] = exp[i]
            out[tuple(new)] = c
        p = SparsePolynomial.__new__(SparsePolynomial)
        p.registry, p.terms = self.registry, out
        return p

    def substitute(self, slot, value):
        """Evaluate one variable at an exact rational; its slot is zeroed."""
        value = Fraction(value)
        out = {}
        for exp, c in self.terms.items():
            e = exp[slot]
            if e:
                if value == 0:
                    if e < 0:
                        raise ZeroDivisionError("negative power evaluated at 0")
                    continue
                c = c * value**e
                exp = exp[:slot] + (0,) + exp[slot + 1 :]
            s = out.get(exp, ZERO) + c
            if s == 0:
                out.pop(exp, None)
            else:
                out[exp] = s
        p = SparsePolynomial.__new__(SparsePolynomial)
        p.registry, p.terms = self.registry, out
        return p

    # -- serialization and display ----------------------------------------

    def to_json(self):
        return {
            "vars": list(self.registry.var_names()),
            "terms": [
                {"exp": list(exp), "coeff": f"{c.numerator}/{c.denominator}"}
                for exp, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, registry, doc):
        if tuple(doc["vars"]) != registry.var_names():
            raise ValueError("variable names do not match the registry")
        return cls(registry, {tuple(t["exp"]): Fraction(t["coeff"]) for t in doc["terms"]})

    def __repr__(self):
        if not self.terms:
            return "0"
        names = self.registry.var_names()
        chunks = []
        for exp, c in self.sorted_terms():
            factors = [] if abs(c) == 1 else [str(abs(c))]
            factors += [
                n if e == 1 else f"{n}^{e}" for n, e in zip(names, exp) if e != 0
            ]
            body = "*".join(factors) or "1"
            chunks.append(("- " if c < 0 else "+ " if chunks else "") + body)
        return " ".join(chunks).lstrip("+ ")


def poly_arith(a, b, op):
    """Dispatch table for the four ring operations, by name."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "exact_div":
        return a.exact_div(b)
    raise ValueError(f"unknown operation {op!r}")


def perm_sign(perm):
    """Sign of a permutation given as a tuple of images."""
    inv = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inv += 1
    return -1 if inv % 2 else 1


def vandermonde(registry):
    """prod_{i<j} (x_i - x_j)."""
    p = SparsePolynomial.constant(registry, 1)
    for i in range(1, registry.num_x + 1):
        for j in range(i + 1, registry.num_x + 1):
            p = p * (SparsePolynomial.x(registry, i) - SparsePolynomial.x(registry, j))
    return p


def alternant_determinant(registry, alpha):
    """det(x_i^{alpha_j}): zero exactly when two exponents coincide."""
    r = registry.num_x
    if len(alpha) != r:
        raise ValueError("alpha must have one entry per x-variable")
    if any(a < 0 for a in alpha):
        raise ValueError("alpha entries must be nonnegative")
    terms = {}
    for w in permutations(range(r)):
        exp = [0] * registry.width
        for i in range(r):
            exp[i] = alpha[w[i]]
        exp = tuple(exp)
        s = terms.get(exp, ZERO) + perm_sign(w)
        if s == 0:
            terms.pop(exp, None)
        else:
            terms[exp] = s
    return SparsePolynomial(registry, terms)


def is_antisymmetric(p):
    """Check sign change under every transposition of the x-variables."""
    r = p.registry.num_x
    for i in range(r):
        for j in range(i + 1, r):
            t = list(range(r))
            t[i], t[j] = j, i
            if p.permute_x(tuple(t)) != -p:
                return False
    return True


def antisym_div_vandermonde(p):
    """Divide a (checked) antisymmetric polynomial exactly by prod_{i<j}(x_i-x_j)."""
    if not is_antisymmetric(p):
        raise ValueError("polynomial is not antisymmetric in the x-variables")
    return p.exact_div(vandermonde(p.registry))


def sign_isotypic_projection(p):
    """(1/r!) sum_w sgn(w) w(p): projection onto the antisymmetric part."""
    r = p.registry.num_x
    total = SparsePolynomial.zero(p.registry)
    for w in permutations(range(r)):
        total = total + p.permute_x(w) * perm_sign(w)
    return total * Fraction(1, factorial(r))


def inv_linear_power_series(registry, i, l, n, policy):
    """Truncated expansion of (x_i + l*hbar)^(-n).

    Returns sum_{k=0..K} binom(n-1+k, k) (-1)^k x_i^k l^{-(n+k)} h^{-(n+k)};
    multiplying back by (x_i + l*hbar)^n gives 1 modulo x-degree > K.
    """
    if l < 1 or n < 1:
        raise ValueError("need l >= 1 and n >= 1")
    xi = registry.x_index(i)
    hi = registry.hbar_index
    terms = {}
    for k in range(policy.max_x_degree + 1):
        exp = [0] * registry.width
        exp[xi] = k
        exp[hi] = -(n + k)
        c = Fraction(comb(n - 1 + k, k), l ** (n + k))
        terms[tuple(exp)] = -c if k % 2 else c
    return SparsePolynomial(registry, terms)
