import random
from fractions import Fraction
from math import comb, lcm, prod

import pytest

from stackyrr.engine import (
    chi_polynomial_pqs,
    class_aggregation_pqs,
    coarse_pushforward_factor,
    coarse_todd_wps,
    euler_characteristic_pqs,
    euler_characteristic_wps,
    evaluate_polynomial,
    integrate_wps,
    interpolate,
    sector_contributions_pqs,
    sector_contributions_wps,
    sector_value_pqs,
    sector_value_wps,
)
from stackyrr.exact_arith import Cyclotomic, to_rational
from stackyrr.oracle import burnside_invariant_dimension, weighted_monomial_count
from stackyrr.series import GradedPoly, univariate
from stackyrr.stacks import (
    PermutationQuotientStack,
    WeightedProjectiveStack,
    cyclic_group,
    cycles,
    inverse,
    sectors_pqs,
    support_wps,
    symmetric_group,
)

F = Fraction
P12 = WeightedProjectiveStack((1, 2))
Z3 = PermutationQuotientStack(2, 3, cyclic_group(3))
S3 = PermutationQuotientStack(2, 3, symmetric_group(3))

Z3_IDENTITY = [1, F(9, 2), F(33, 4), F(63, 8), F(33, 8), F(9, 8), F(1, 8)]
Z3_ROTATION = [1, F(3, 2), F(1, 2)]
S3_TRANSPOSITION = [1, 3, F(13, 4), F(3, 2), F(1, 4)]
Z3_POLY = [1, F(5, 2), F(37, 12), F(21, 8), F(11, 8), F(3, 8), F(1, 24)]
S3_POLY = [1, F(11, 4), F(19, 6), F(33, 16), F(13, 16), F(3, 16), F(1, 48)]

WPS_BATTERY = [(1,), (1, 1), (1, 2), (2, 3), (4, 6), (1, 1, 1), (1, 1, 2), (1, 2, 3), (2, 2, 3),
               (1, 3, 8), (2, 4, 6), (3, 4, 5), (1, 1, 1, 1), (3, 4, 5, 7)]
PQS_BATTERY = [
    (1, 2, cyclic_group(2)),
    (2, 2, cyclic_group(2)),
    (2, 3, cyclic_group(3)),
    (2, 3, symmetric_group(3)),
    (1, 3, symmetric_group(2, 3)),
    (1, 4, cyclic_group(4)),
    (1, 4, symmetric_group(4)),
    (3, 2, cyclic_group(2)),
    (0, 3, symmetric_group(3)),
]


def sector(stack, label):
    return next(s for s in support_wps(stack) if s.label == label)


def test_integrate_wps_examples():
    spec = univariate("t", 2)
    p = GradedPoly(spec, {(0,): 1, (1,): F(5, 2)})
    assert integrate_wps(p, (1, 2)) == F(5, 4)
    for n in range(0, 4):
        spec = univariate("t", n + 1)
        assert integrate_wps(GradedPoly.monomial(spec, (n,)), (1,) * (n + 1)) == 1
    spec = univariate("t", 3)
    assert integrate_wps(GradedPoly.monomial(spec, (2,)), (1, 1, 2)) == F(1, 2)


def test_p12_sector_values():
    for l in range(0, 7):
        assert sector_value_wps(P12, sector(P12, (1, 0)), l) == F(2 * l + 3, 4)
        assert sector_value_wps(P12, sector(P12, (2, 1)), l) == F((-1) ** l, 4)


def test_p2_identity_sector():
    p2 = WeightedProjectiveStack((1, 1, 1))
    assert sector_value_wps(p2, sector(p2, (1, 0)), 1) == 3 == weighted_monomial_count((1, 1, 1), 1)


def test_euler_characteristic_wps_examples():
    assert euler_characteristic_wps(P12, 0) == 1
    assert euler_characteristic_wps(P12, 1) == 1
    assert euler_characteristic_wps(P12, 2) == 2
    p46 = WeightedProjectiveStack((4, 6))
    assert [euler_characteristic_wps(p46, k) for k in (0, 4, 6, 10, 12)] == [1, 1, 1, 1, 2]
    assert [weighted_monomial_count((4, 6), k) for k in (0, 4, 6, 10, 12)] == [1, 1, 1, 1, 2]


@pytest.mark.parametrize("m", range(-3, 7))
def test_pqs_sector_values(m):
    ident, rot, _ = sorted(sectors_pqs(Z3), key=lambda s: -len(s.cycles))
    assert sector_value_pqs(Z3, ident, m) == evaluate_polynomial(Z3_IDENTITY, m)
    assert sector_value_pqs(Z3, rot, m) == evaluate_polynomial(Z3_ROTATION, m)
    for s in sectors_pqs(S3):
        if s.cycle_type == (2, 1):
            assert sector_value_pqs(S3, s, m) == evaluate_polynomial(S3_TRANSPOSITION, m)


def test_euler_characteristic_pqs_examples():
    assert [euler_characteristic_pqs(Z3, m) for m in range(4)] == [1, 11, 76, 340]
    assert euler_characteristic_pqs(S3, 1) == 10 == (27 + 27 + 6) // 6
    triv = PermutationQuotientStack(2, 1, [(0,)])
    assert euler_characteristic_pqs(triv, 1) == 3


def test_chi_polynomials():
    assert chi_polynomial_pqs(Z3) == Z3_POLY
    assert chi_polynomial_pqs(S3) == S3_POLY
    assert chi_polynomial_pqs(PermutationQuotientStack(1, 1, [(0,)])) == [1, 1]


def test_interpolate():
    xs = [0, 1, 2, 3]
    assert interpolate(xs, [evaluate_polynomial([3, 0, F(1, 2), -1], x) for x in xs]) == [3, 0, F(1, 2), -1]


@pytest.mark.parametrize("m", range(-2, 5))
def test_class_aggregation(m):
    classes = dict(class_aggregation_pqs(S3, m))
    assert classes[(2, 1)] == F(1, 2) * evaluate_polynomial(S3_TRANSPOSITION, m)
    assert classes[(3,)] == F(1, 3) * evaluate_polynomial(Z3_ROTATION, m)
    assert classes[(1, 1, 1)] == F(1, 6) * evaluate_polynomial(Z3_IDENTITY, m)
    z3 = dict(class_aggregation_pqs(Z3, m))
    assert z3[(3,)] == F(2, 3) * evaluate_polynomial(Z3_ROTATION, m)
    assert z3[(1, 1, 1)] == F(1, 3) * evaluate_polynomial(Z3_IDENTITY, m)


def test_coarse_todd_p112():
    td = coarse_todd_wps(WeightedProjectiveStack((1, 1, 2)))
    pieces = {s.label: [to_rational(c) for c in p] for s, p in td.pieces}
    assert pieces[(1, 0)] == [1, 2, F(21, 24)]
    assert pieces[(2, 1)] == [0, 0, F(1, 8)]
    assert td.coefficients == (1, 2, 1)
    assert td.basis_labels() == ["1", "[D0]", "[P0]"]


# -- properties over the battery ----------------------------------------------


@pytest.mark.parametrize("weights", WPS_BATTERY)
def test_wps_integrality_and_oracle(weights):
    stack = WeightedProjectiveStack(weights)
    for l in range(-25, 26):
        chi = euler_characteristic_wps(stack, l)
        assert isinstance(chi, int)
        if l >= 0:
            assert chi == weighted_monomial_count(weights, l)


@pytest.mark.parametrize("weights", WPS_BATTERY)
def test_wps_serre_symmetry(weights):
    stack = WeightedProjectiveStack(weights)
    n, s = stack.dimension, sum(weights)
    for l in range(-12, 13):
        assert euler_characteristic_wps(stack, l) == (-1) ** n * euler_characteristic_wps(stack, -s - l)
    # reflected oracle: chi(O(l)) for l <= -s equals (-1)^n times a nonnegative count
    for l in range(-s - 10, -s + 1):
        assert euler_characteristic_wps(stack, l) == (-1) ** n * weighted_monomial_count(weights, -s - l)


@pytest.mark.parametrize("weights", WPS_BATTERY)
def test_conjugate_sectors(weights):
    stack = WeightedProjectiveStack(weights)
    for l in (-3, 0, 2, 7):
        values = {s.label: c.value for s, c in ((c.sector, c) for c in sector_contributions_wps(stack, l))}
        for (n, k), v in values.items():
            partner = (n, (-k) % n) if n > 1 else (1, 0)
            assert values[partner] == v.conjugate()
        # each Galois orbit (all sectors of one order) sums to a rational
        for order in {n for n, _ in values}:
            orbit = [v for (n, _), v in values.items() if n == order]
            assert sum(orbit, Cyclotomic.zero()).is_rational()


@pytest.mark.parametrize("n, k, group", PQS_BATTERY)
def test_pqs_integrality_oracle_and_class_form(n, k, group):
    stack = PermutationQuotientStack(n, k, group)
    for m in range(-10, 11):
        contribs = sector_contributions_pqs(stack, m)
        chi = euler_characteristic_pqs(stack, m)
        assert isinstance(chi, int)
        element_total = sum((c.value for c in contribs), Cyclotomic.zero()) / stack.order
        class_total = sum(v for _, v in class_aggregation_pqs(stack, m))
        assert element_total == class_total == chi
        if m >= 0:
            assert chi == burnside_invariant_dimension(n, k, stack.group, m)


def sign(perm):
    return (-1) ** sum(len(c) - 1 for c in cycles(perm))


@pytest.mark.parametrize("n, k, group", PQS_BATTERY)
def test_pqs_negative_twists_by_duality(n, k, group):
    # For m <= -n-1 only top cohomology survives; Serre duality identifies it with
    # invariants of O(-m-n-1)^box twisted by sign^n (blocks of n odd classes permute).
    stack = PermutationQuotientStack(n, k, group)
    for m in range(-n - 6, 0):
        if m > -n - 1:
            assert euler_characteristic_pqs(stack, m) == 0
            continue
        d = comb(-m - 1, n)
        total = F(sum(sign(g) ** n * d ** len(cycles(g)) for g in stack.group), stack.order)
        assert euler_characteristic_pqs(stack, m) == (-1) ** (n * k) * total


@pytest.mark.parametrize("n, k, group", PQS_BATTERY)
def test_pqs_polynomial_reproduces_values(n, k, group):
    stack = PermutationQuotientStack(n, k, group)
    poly = chi_polynomial_pqs(stack)
    assert len(poly) - 1 <= stack.dimension
    for m in range(-4, 8):
        assert evaluate_polynomial(poly, m) == euler_characteristic_pqs(stack, m)


@pytest.mark.parametrize("n", range(0, 4))
def test_identity_only_reproduces_classical_hrr(n):
    pn = WeightedProjectiveStack((1,) * (n + 1))
    assert [s.label for s in support_wps(pn)] == [(1, 0)]
    for l in range(0, 8):
        assert euler_characteristic_wps(pn, l) == comb(l + n, n)
    for k in (1, 2, 3):
        triv = PermutationQuotientStack(n, k, [tuple(range(k))])
        for m in range(0, 5):
            assert euler_characteristic_pqs(triv, m) == comb(m + n, n) ** k


def test_pqs_conjugate_sectors():
    stack = PermutationQuotientStack(1, 4, cyclic_group(4))
    vals = {c.sector.perm: c.value for c in sector_contributions_pqs(stack, 3)}
    for g, v in vals.items():
        assert vals[inverse(g)] == v.conjugate()


def coarse_degree_check(weights, l):
    """chi(O(l)) from the coarse Todd class: sum_k td_k * deg([W_k] . c1(O(l))^(n-k)/(n-k)!)."""
    stack = WeightedProjectiveStack(weights)
    w = stack.weights
    n = stack.dimension
    td = coarse_todd_wps(stack)
    total = F(0)
    for k, coeff in enumerate(td.coefficients):
        stack_class = 1 / coarse_pushforward_factor(w, k)  # [W_k] = this multiple of t^k
        total += coeff * stack_class * F(l ** (n - k), prod(range(1, n - k + 1))) / prod(w)
    return total


@pytest.mark.parametrize("l", range(0, 20, 2))
def test_coarse_todd_degree_consistency(l):
    assert coarse_degree_check((1, 1, 2), l) == weighted_monomial_count((1, 1, 2), l)


@pytest.mark.parametrize("weights", [(1, 2), (1, 1, 3), (1, 2, 3), (2, 3), (1, 1, 1, 2)])
def test_coarse_todd_cartier_twists(weights):
    c = lcm(*weights)
    td = coarse_todd_wps(WeightedProjectiveStack(weights))
    assert td.coefficients[0] == 1
    for j in range(0, 4):
        l = c * j
        assert coarse_degree_check(weights, l) == weighted_monomial_count(weights, l)


def test_random_weights_integrality():
    rng = random.Random(7)
    for _ in range(10):
        weights = tuple(rng.randint(1, 7) for _ in range(rng.randint(1, 4)))
        stack = WeightedProjectiveStack(weights)
        for l in range(-10, 11):
            chi = euler_characteristic_wps(stack, l)
            if l >= 0:
                assert chi == weighted_monomial_count(weights, l)
