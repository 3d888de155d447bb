"""Truncated multivariate polynomial rings Q(zeta)[x_1..x_r]/(x_i^{b_i}).

These model rational Chow rings of products of (weighted) projective spaces,
where every variable is a nilpotent hyperplane class.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import ConstantTermError, NonUnitError, SpecMismatchError
from .exact_arith import Cyclotomic


@dataclass(frozen=True)
class GradedRingSpec:
    variables: tuple
    bounds: tuple

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "bounds", tuple(self.bounds))
        if len(self.variables) != len(self.bounds):
            raise ValueError("one nilpotency bound per variable is required")
        if any(b < 1 for b in self.bounds):
            raise ValueError(f"nilpotency bounds must be positive: {self.bounds}")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names: {self.variables}")

    @property
    def max_degree(self):
        """Largest total degree of a surviving monomial."""
        return sum(b - 1 for b in self.bounds)

    def admits(self, exps):
        return all(0 <= e < b for e, b in zip(exps, self.bounds))

    def zero_exponent(self):
        return (0,) * len(self.variables)

    def index(self, var):
        if isinstance(var, int):
            return var
        return self.variables.index(var)


def univariate(name, bound):
    return GradedRingSpec((name,), (bound,))


_ZERO = Cyclotomic.zero()


class GradedPoly:
    """Immutable sparse polynomial in a truncated ring; zero terms are never stored."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec, terms=None):
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != len(spec.variables):
                raise SpecMismatchError(f"exponent {exps} does not fit ring {spec.variables}")
            if not spec.admits(exps):
                continue
            c = Cyclotomic.coerce(c)
            if not c.is_zero():
                clean[exps] = c
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("GradedPoly is immutable")

    @classmethod
    def constant(cls, spec, c):
        return cls(spec, {spec.zero_exponent(): c})

    @classmethod
    def variable(cls, spec, var, coeff=1):
        exps = [0] * len(spec.variables)
        exps[spec.index(var)] = 1
        return cls(spec, {tuple(exps): coeff})

    @classmethod
    def monomial(cls, spec, exps, coeff=1):
        return cls(spec, {tuple(exps): coeff})

    def _check(self, other):
        if isinstance(other, GradedPoly):
            if other.spec != self.spec:
                raise SpecMismatchError(f"ring mismatch: {self.spec} vs {other.spec}")
            return other
        c = Cyclotomic.coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return GradedPoly.constant(self.spec, c)

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms[e] + c if e in terms else c
        return GradedPoly(self.spec, terms)

    __radd__ = __add__

    def __neg__(self):
        return GradedPoly(self.spec, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, GradedPoly):
            c = Cyclotomic.coerce(other)
            if c is NotImplemented:
                return c
            return GradedPoly(self.spec, {e: v * c for e, v in self.terms.items()})
        other = self._check(other)
        bounds = self.spec.bounds
        terms = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                if any(x >= b for x, b in zip(e, bounds)):
                    continue
                v = ca * cb
                terms[e] = terms[e] + v if e in terms else v
        return GradedPoly(self.spec, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, GradedPoly):
            return self * invert_unit(other)
        c = Cyclotomic.coerce(other)
        if c is NotImplemented:
            return c
        return self * c.inverse()

    def __pow__(self, k):
        if k < 0:
            return invert_unit(self) ** (-k)
        result = GradedPoly.constant(self.spec, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, GradedPoly):
            if other.spec != self.spec:
                return False
        else:
            other = self._check(other)
            if other is NotImplemented:
                return other
        diff = self - other
        return not diff.terms

    __hash__ = None

    def is_zero(self):
        return not self.terms

    @property
    def constant_term(self):
        return self.terms.get(self.spec.zero_exponent(), _ZERO)

    def coefficient(self, exps):
        return coefficient_of(self, exps)

    def homogeneous_part(self, degree):
        return GradedPoly(self.spec, {e: c for e, c in self.terms.items() if sum(e) == degree})

    def map_coefficients(self, fn):
        return GradedPoly(self.spec, {e: fn(e, c) for e, c in self.terms.items()})

    def conjugate(self):
        return self.map_coefficients(lambda e, c: c.conjugate())

    def __repr__(self):
        return f"GradedPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), tuple(-x for x in e))):
            c = self.terms[e]
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.spec.variables, e) if k
            )
            cs = str(c)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            else:
                parts.append(f"({cs})*{mono}")
        return " + ".join(parts)


def poly_add(a, b):
    return a + b


def poly_mul(a, b):
    return a * b


def coefficient_of(p, monomial):
    monomial = tuple(monomial)
    if not p.spec.admits(monomial):
        raise ValueError(f"monomial {monomial} violates bounds {p.spec.bounds}")
    return p.terms.get(monomial, _ZERO)


def _require_nilpotent(x, what):
    if not x.constant_term.is_zero():
        raise ConstantTermError(f"{what} needs zero constant term, got {x.constant_term}")


def power_series_at(coeffs, x):
    """sum_k coeffs[k] * x^k for nilpotent x (Horner)."""
    _require_nilpotent(x, "power series substitution")
    coeffs = list(coeffs)
    n = min(len(coeffs), x.spec.max_degree + 1)
    result = GradedPoly.constant(x.spec, 0)
    for c in reversed(coeffs[:n]):
        result = result * x + c
    return result


def exp_nilpotent(x):
    _require_nilpotent(x, "exp")
    d = x.spec.max_degree
    return power_series_at([Fraction(1, factorial(k)) for k in range(d + 1)], x)


def invert_unit(p):
    """Inverse of p = c(1 - u) with u nilpotent, as c^-1 * sum u^k."""
    c = p.constant_term
    if c.is_zero():
        raise NonUnitError(f"cannot invert {p}: constant term is zero")
    cinv = c.inverse()
    u = 1 - p * cinv
    result = GradedPoly.constant(p.spec, 1)
    term = result
    for _ in range(p.spec.max_degree):
        term = term * u
        if term.is_zero():
            break
        result = result + term
    return result * cinv


@lru_cache(maxsize=None)
def _todd_coefficients(n):
    """First n Taylor coefficients of s / (1 - e^-s), by exact series division."""
    spec = univariate("s", n)
    # (1 - e^-s)/s = sum (-1)^k s^k / (k+1)!
    denom = GradedPoly(
        spec, {(k,): Fraction((-1) ** k, factorial(k + 1)) for k in range(n)}
    )
    inv = invert_unit(denom)
    return tuple(coefficient_of(inv, (k,)).coeffs[0] for k in range(n))


def todd_factor(x):
    _require_nilpotent(x, "todd_factor")
    return power_series_at(_todd_coefficients(x.spec.max_degree + 1), x)
