"""Localization Riemann-Roch: sector integrands, stacky degrees, totals.

For a weighted projective stack P(w) and a root of unity h with fixed indices
I, the h-sector lives on the sub-stack P(w_I) whose rational Chow ring is
Q[t]/t^|I| with t^(|I|-1) of degree 1/prod(w_I).  For a permutation quotient,
each group element g contributes an integral over its fixed locus
(P^n)^{#cycles(g)}, and the total is averaged over G.
"""
from collections import OrderedDict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, prod

from .errors import IntegralityError, NotRationalError
from .exact_arith import Cyclotomic, to_rational
from .lambda_ops import EigenSummand, line_bundle, twisted_euler_class
from .series import GradedPoly, coefficient_of, invert_unit, todd_factor, univariate
from .stacks import fixed_data_pqs, fixed_data_wps, sectors_pqs, support_wps


@dataclass(frozen=True, eq=False)
class SectorContribution:
    sector: object
    value: Cyclotomic
    integrand: GradedPoly = None


def _require_integer(total, what):
    try:
        q = to_rational(total)
    except NotRationalError as exc:
        raise IntegralityError(f"{what}: sector sum is not rational ({exc})") from None
    if q.denominator != 1:
        raise IntegralityError(f"{what}: total {q} is not an integer")
    return int(q)


# -- weighted projective stacks -----------------------------------------------


def integrate_wps(p, fixed_weights):
    """Degree of the top class on P(fixed_weights): coefficient of t^dim / prod(w)."""
    top = len(fixed_weights) - 1
    return coefficient_of(p, (top,)) / prod(fixed_weights)


@lru_cache(maxsize=4096)
def _wps_twist_free(stack, sector):
    """Todd class times the inverted twisted normal Euler class; independent of l."""
    fixed, normal = fixed_data_wps(stack, sector)
    spec = univariate("t", len(fixed))
    t = GradedPoly.variable(spec, "t")
    h = sector.element()
    factor = GradedPoly.constant(spec, 1)
    if normal:
        summands = [EigenSummand(line_bundle(w * t), h**w) for w in normal]
        factor = invert_unit(twisted_euler_class(summands).value)
    for w in fixed:
        factor = factor * todd_factor(w * t)
    return fixed, factor


def _wps_integrand(stack, sector, l):
    fixed, factor = _wps_twist_free(stack, sector)
    t = GradedPoly.variable(factor.spec, "t")
    return fixed, factor * line_bundle(l * t).value * sector.element() ** l


def sector_value_wps(stack, sector, l):
    fixed, integrand = _wps_integrand(stack, sector, l)
    return integrate_wps(integrand, fixed)


def sector_contributions_wps(stack, l):
    out = []
    for s in support_wps(stack):
        fixed, integrand = _wps_integrand(stack, s, l)
        out.append(SectorContribution(s, integrate_wps(integrand, fixed), integrand))
    return out


def euler_characteristic_wps(stack, l):
    total = sum((c.value for c in sector_contributions_wps(stack, l)), Cyclotomic.zero())
    return _require_integer(total, f"chi({stack}, O({l}))")


# -- permutation quotients ----------------------------------------------------


@lru_cache(maxsize=4096)
def _pqs_twist_free(stack, sector):
    spec, data = fixed_data_pqs(stack, sector)
    factor = GradedPoly.constant(spec, 1)
    summands = []
    for cyc in data:
        h = GradedPoly.variable(spec, cyc.variable)
        factor = factor * todd_factor(h) ** (stack.n + 1)
        summands.extend(cyc.normal)
    if summands:
        factor = factor * invert_unit(twisted_euler_class(summands).value)
    return data, factor


def _pqs_integrand(stack, sector, m):
    data, integrand = _pqs_twist_free(stack, sector)
    for cyc in data:
        h = GradedPoly.variable(integrand.spec, cyc.variable)
        integrand = integrand * line_bundle(cyc.length * m * h).value
    return integrand


def sector_value_pqs(stack, sector, m):
    """Integral over the fixed locus of g, without the 1/|G| factor."""
    integrand = _pqs_integrand(stack, sector, m)
    return coefficient_of(integrand, (stack.n,) * len(sector.cycles))


def sector_contributions_pqs(stack, m):
    out = []
    for s in sectors_pqs(stack):
        integrand = _pqs_integrand(stack, s, m)
        value = coefficient_of(integrand, (stack.n,) * len(s.cycles))
        out.append(SectorContribution(s, value, integrand))
    return out


def euler_characteristic_pqs(stack, m):
    total = sum(
        (c.value for c in sector_contributions_pqs(stack, m)), Cyclotomic.zero()
    ) / stack.order
    return _require_integer(total, f"chi({stack}, O({m})^box)")


def class_aggregation_pqs(stack, m):
    """Per cycle-type totals |class|/|G| * value, in order of first appearance."""
    groups = OrderedDict()
    for c in sector_contributions_pqs(stack, m):
        key = c.sector.cycle_type
        groups[key] = groups.get(key, Cyclotomic.zero()) + c.value
    out = []
    for key, total in groups.items():
        out.append((key, to_rational(total / stack.order)))
    return out


def interpolate(xs, ys):
    """Coefficients (lowest degree first) of the polynomial through (xs, ys)."""
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        for k, b in enumerate(basis):
            coeffs[k] += yi * b / denom
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def chi_polynomial_pqs(stack):
    nodes = list(range(stack.dimension + 1))
    return interpolate(nodes, [euler_characteristic_pqs(stack, m) for m in nodes])


def evaluate_polynomial(coeffs, x):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


# -- coarse Todd class ----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class CoarseToddClass:
    """td of the coarse space of P(w) in the basis [W_k] = image of V(x_0..x_{k-1})."""

    weights: tuple
    coefficients: tuple
    pieces: tuple  # (sector, tuple of Cyclotomic) per sector

    def basis_labels(self):
        return [basis_label(self.weights, k) for k in range(len(self.weights))]


def basis_label(weights, k):
    if k == 0:
        return "1"
    if k == 1 and len(weights) > 2:
        return "[D0]"
    if k == len(weights) - 1:
        return "[P0]"
    return f"[W{k}]"


def coarse_pushforward_factor(weights, k):
    """p_*(t^k) = factor * [W_k], weights ascending."""
    return Fraction(1, prod(weights[:k]) * gcd(*weights[k:]))


def coarse_todd_wps(stack):
    w = stack.weights
    dim = len(w)
    pieces = []
    totals = [Cyclotomic.zero() for _ in range(dim)]
    for s in support_wps(stack):
        fixed, normal = fixed_data_wps(stack, s)
        fixed_integrand = _wps_integrand(stack, s, 0)[1]
        codim = len(normal)
        embed = prod(normal)
        piece = [Cyclotomic.zero() for _ in range(dim)]
        for k in range(len(fixed)):
            c = coefficient_of(fixed_integrand, (k,))
            piece[codim + k] = c * embed * coarse_pushforward_factor(w, codim + k)
        pieces.append((s, tuple(piece)))
        totals = [a + b for a, b in zip(totals, piece)]
    coefficients = tuple(to_rational(c) for c in totals)
    return CoarseToddClass(w, coefficients, tuple(pieces))
