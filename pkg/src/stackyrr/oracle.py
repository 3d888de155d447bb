"""Brute-force Euler characteristics that do not use localization.

For nonnegative twists the higher cohomology of O(l) on P(w) and of
O(m)^box on (P^n)^k vanishes, so chi is the dimension of the (invariant)
global sections. Outside that range these functions refuse to answer.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb

from .errors import OracleRangeError
from .stacks import compose, cycles


def weighted_monomial_count(weights, l):
    """#{a in Z_{>=0}^{n+1} : sum a_i w_i = l}, by enumerating the lattice."""
    if l < 0:
        raise OracleRangeError(f"monomial count only valid for l >= 0, got {l}")
    weights = tuple(weights)

    def count(i, remaining):
        if i == len(weights) - 1:
            return 1 if remaining % weights[i] == 0 else 0
        return sum(count(i + 1, remaining - a * weights[i]) for a in range(remaining // weights[i] + 1))

    return count(0, l)


def burnside_invariant_dimension(n, k, group, m):
    """dim H^0((P^n)^k, O(m)^box)^G = (1/|G|) sum_g D^{#cycles(g)}, D = C(m+n, n)."""
    if m < 0:
        raise OracleRangeError(f"invariant count only valid for m >= 0, got {m}")
    d = comb(m + n, n)
    total = Fraction(sum(d ** len(cycles(g)) for g in group), len(group))
    assert total.denominator == 1
    return int(total)


def orbit_count_invariant_dimension(n, k, group, m):
    """Same dimension by counting G-orbits on the tensor monomial basis.

    Exponential in k; only for tiny cross-checks.
    """
    if m < 0:
        raise OracleRangeError(f"invariant count only valid for m >= 0, got {m}")
    monomials = [e for e in product(range(m + 1), repeat=n + 1) if sum(e) == m]
    seen = set()
    orbits = 0
    for basis in product(range(len(monomials)), repeat=k):
        if basis in seen:
            continue
        orbits += 1
        for g in group:
            # g moves factor i to position g[i]
            image = [None] * k
            for i, b in enumerate(basis):
                image[g[i]] = b
            seen.add(tuple(image))
    return orbits


@dataclass(frozen=True)
class OracleReport:
    engine: Fraction
    oracle: Fraction
    agree: bool
    note: str = "oracle valid for nonnegative twists only"


def compare(engine_value, oracle_value):
    e, o = Fraction(engine_value), Fraction(oracle_value)
    return OracleReport(e, o, e == o)


def check_wps(stack, l):
    from .engine import euler_characteristic_wps

    return compare(euler_characteristic_wps(stack, l), weighted_monomial_count(stack.weights, l))


def check_pqs(stack, m):
    from .engine import euler_characteristic_pqs

    oracle = burnside_invariant_dimension(stack.n, stack.k, stack.group, m)
    return compare(euler_characteristic_pqs(stack, m), oracle)


__all__ = [
    "OracleReport",
    "burnside_invariant_dimension",
    "check_pqs",
    "check_wps",
    "compare",
    "compose",
    "orbit_count_invariant_dimension",
    "weighted_monomial_count",
]
