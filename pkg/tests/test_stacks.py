from collections import Counter
from math import factorial

import pytest

from stackyrr.errors import GroupClosureError
from stackyrr.exact_arith import root_of_unity
from stackyrr.stacks import (
    PermutationQuotientStack,
    WeightedProjectiveStack,
    compose,
    cyclic_group,
    fixed_data_pqs,
    fixed_data_wps,
    inverse,
    k_relation_wps,
    sectors_pqs,
    support_wps,
    symmetric_group,
)


def labels(stack):
    return [(s.order, s.exponent) for s in support_wps(stack)]


def test_support_p12():
    sectors = support_wps(WeightedProjectiveStack((1, 2)))
    assert [(s.label, s.fixed) for s in sectors] == [((1, 0), (0, 1)), ((2, 1), (1,))]


def test_support_p46_has_eight_points():
    sectors = support_wps(WeightedProjectiveStack((4, 6)))
    assert len(sectors) == 8
    elements = [s.element() for s in sectors]
    i, w, eta = root_of_unity(4), root_of_unity(3), root_of_unity(6)
    expected = [1, -1, i, -i, w, w**-1, eta, eta**-1]
    for e in expected:
        assert sum(1 for x in elements if x == e) == 1


def test_support_trivial_weights():
    assert labels(WeightedProjectiveStack((1, 1, 1))) == [(1, 0)]


@pytest.mark.parametrize(
    "weights", [(1,), (1, 2), (4, 6), (1, 1, 2), (2, 3, 5), (3, 4, 5, 7), (2, 2, 6), (6, 10, 15)]
)
def test_support_invariants(weights):
    stack = WeightedProjectiveStack(weights)
    sectors = support_wps(stack)
    assert len(sectors) <= sum(weights)
    assert sectors[0].label == (1, 0)
    assert sectors[0].fixed == tuple(range(len(weights)))
    for s in sectors:
        assert s.fixed
        h = s.element()
        # fixed index set is exactly {i : h^{w_i} = 1}
        assert s.fixed == tuple(i for i, w in enumerate(stack.weights) if h**w == 1)
    # brute force: every root of unity of order dividing some weight appears once
    brute = set()
    for n in range(1, max(weights) + 1):
        for k in range(n):
            if any((root_of_unity(n, k)) ** w == 1 for w in weights):
                brute.add(_numeric_key(root_of_unity(n, k)))
    got = [_numeric_key(s.element()) for s in sectors]
    assert len(set(got)) == len(got)
    assert set(got) == brute


def _numeric_key(c):
    z = c.to_complex()
    return (round(z.real, 9) + 0.0, round(z.imag, 9) + 0.0)


def test_fixed_data_wps():
    p12 = WeightedProjectiveStack((1, 2))
    s1, sm1 = support_wps(p12)
    assert fixed_data_wps(p12, sm1) == ((2,), (1,))
    assert fixed_data_wps(p12, s1) == ((1, 2), ())
    p112 = WeightedProjectiveStack((1, 1, 2))
    minus = [s for s in support_wps(p112) if s.label == (2, 1)][0]
    assert fixed_data_wps(p112, minus) == ((2,), (1, 1))


def test_k_relation():
    assert k_relation_wps(WeightedProjectiveStack((1,))) == {0: 1, -1: -1}
    # (1 - x^-1)(1 - x^-2) = 1 - x^-1 - x^-2 + x^-3
    assert k_relation_wps(WeightedProjectiveStack((1, 2))) == {0: 1, -1: -1, -2: -1, -3: 1}
    assert k_relation_wps(WeightedProjectiveStack((4, 6))) == {0: 1, -4: -1, -6: -1, -10: 1}


def test_sectors_z3_and_s3():
    z3 = PermutationQuotientStack(2, 3, cyclic_group(3))
    assert sorted(len(s.cycles) for s in sectors_pqs(z3)) == [1, 1, 3]
    s3 = PermutationQuotientStack(2, 3, symmetric_group(3))
    assert sorted(len(s.cycles) for s in sectors_pqs(s3)) == [1, 1, 2, 2, 2, 3]
    triv = PermutationQuotientStack(1, 4, [tuple(range(4))])
    (only,) = sectors_pqs(triv)
    assert len(only.cycles) == 4


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_cycle_type_counts_match_class_sizes(k):
    stack = PermutationQuotientStack(1, k, symmetric_group(k))
    counts = Counter(s.cycle_type for s in sectors_pqs(stack))
    for ctype, size in counts.items():
        # |class| = k! / prod(j^{m_j} m_j!)
        mult = Counter(ctype)
        centralizer = 1
        for j, mj in mult.items():
            centralizer *= j**mj * factorial(mj)
        assert size == factorial(k) // centralizer
        # and equals |G| / |centralizer| computed by brute force
        g = next(s.perm for s in sectors_pqs(stack) if s.cycle_type == ctype)
        z = [h for h in stack.group if compose(h, g) == compose(g, h)]
        assert size == len(stack.group) // len(z)


def test_group_validation():
    with pytest.raises(GroupClosureError):
        PermutationQuotientStack(1, 3, [(0, 1, 2), (1, 0, 2), (2, 1, 0)])
    with pytest.raises(GroupClosureError):
        PermutationQuotientStack(1, 3, [(1, 2, 0), (1, 0, 2)])
    g = PermutationQuotientStack(1, 4, cyclic_group(4)).group
    assert all(inverse(p) in g for p in g)


def test_fixed_data_pqs():
    z3 = PermutationQuotientStack(2, 3, cyclic_group(3))
    rot = [s for s in sectors_pqs(z3) if len(s.cycles) == 1][0]
    spec, data = fixed_data_pqs(z3, rot)
    (cyc,) = data
    assert cyc.length == 3
    assert [s.eigenvalue for s in cyc.normal] == [root_of_unity(3, 1), root_of_unity(3, 2)]
    assert all(s.base.integer_rank() == 2 for s in cyc.normal)

    s3 = PermutationQuotientStack(2, 3, symmetric_group(3))
    tau = [s for s in sectors_pqs(s3) if s.cycle_type == (2, 1)][0]
    spec, data = fixed_data_pqs(s3, tau)
    lengths = sorted(c.length for c in data)
    assert lengths == [1, 2]
    two = [c for c in data if c.length == 2][0]
    assert [s.eigenvalue for s in two.normal] == [-1]

    ident = [s for s in sectors_pqs(s3) if s.is_identity][0]
    spec, data = fixed_data_pqs(s3, ident)
    assert all(not c.normal for c in data)
