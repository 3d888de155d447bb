"""Stack descriptors and sector enumeration.

Two families are supported: weighted projective stacks P(w_0, ..., w_n), and
permutation quotients [(P^n)^k / G] for G a subgroup of S_k.
"""
from dataclasses import dataclass
from itertools import permutations
from math import gcd

from .errors import GroupClosureError
from .exact_arith import root_of_unity
from .lambda_ops import EigenSummand, projective_tangent
from .series import GradedPoly, GradedRingSpec


@dataclass(frozen=True)
class WeightedProjectiveStack:
    weights: tuple

    def __post_init__(self):
        w = tuple(sorted(int(x) for x in self.weights))
        if not w:
            raise ValueError("a weighted projective stack needs at least one weight")
        if any(x < 1 for x in w):
            raise ValueError(f"weights must be positive integers: {w}")
        object.__setattr__(self, "weights", w)

    @property
    def dimension(self):
        return len(self.weights) - 1

    def __str__(self):
        return "P(" + ",".join(map(str, self.weights)) + ")"


@dataclass(frozen=True)
class CharacterBundle:
    exponent: int


@dataclass(frozen=True)
class BoxLineBundle:
    m: int


@dataclass(frozen=True)
class WpsSector:
    """The root of unity exp(2 pi i k / order), gcd(k, order) = 1, with its fixed indices."""

    order: int
    exponent: int
    fixed: tuple

    @property
    def label(self):
        return (self.order, self.exponent)

    @property
    def is_identity(self):
        return self.order == 1

    def element(self):
        return root_of_unity(self.order, self.exponent)

    def __str__(self):
        return f"({self.order}, {self.exponent})"


def support_wps(stack):
    """Roots of unity h with nonempty fixed locus, ordered by (order, exponent)."""
    labels = set()
    for w in stack.weights:
        for k in range(w):
            g = gcd(w, k)
            labels.add((w // g, k // g))
    sectors = []
    for n, k in sorted(labels):
        fixed = tuple(i for i, w in enumerate(stack.weights) if w % n == 0)
        sectors.append(WpsSector(n, k, fixed))
    return sectors


def fixed_data_wps(stack, sector):
    fixed = tuple(stack.weights[i] for i in sector.fixed)
    normal = tuple(w for i, w in enumerate(stack.weights) if i not in sector.fixed)
    return fixed, normal


def k_relation_wps(stack):
    """prod_i (1 - xi^-w_i) as a Laurent polynomial {exponent: coefficient}."""
    poly = {0: 1}
    for w in stack.weights:
        out = {}
        for e, c in poly.items():
            out[e] = out.get(e, 0) + c
            out[e - w] = out.get(e - w, 0) - c
        poly = {e: c for e, c in out.items() if c}
    return dict(sorted(poly.items(), reverse=True))


# -- permutation groups -------------------------------------------------------


def compose(p, q):
    """(p o q)(i) = p[q[i]]."""
    return tuple(p[i] for i in q)


def inverse(p):
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def cycles(p):
    """Cycle decomposition including fixed points; each cycle starts at its minimum."""
    seen = set()
    out = []
    for start in range(len(p)):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        j = p[start]
        while j != start:
            cyc.append(j)
            seen.add(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


def cycle_type(p):
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def cycle_string(p):
    nontrivial = [c for c in cycles(p) if len(c) > 1]
    if not nontrivial:
        return "(1)"
    sep = "" if len(p) <= 9 else " "
    return "".join("(" + sep.join(str(i + 1) for i in c) + ")" for c in nontrivial)


def validate_group(elements, k):
    elements = [tuple(p) for p in elements]
    for p in elements:
        if len(p) != k or sorted(p) != list(range(k)):
            raise GroupClosureError(f"{p} is not a permutation of {k} points")
    group = set(elements)
    if len(group) != len(elements):
        raise GroupClosureError("duplicate group elements")
    if not group:
        raise GroupClosureError("empty group")
    for p in sorted(group):
        for q in sorted(group):
            if compose(p, q) not in group:
                raise GroupClosureError(
                    f"not closed under composition: {cycle_string(p)} * {cycle_string(q)}"
                    f" = {cycle_string(compose(p, q))} is missing"
                )
    # a finite set closed under composition is a group; these cannot fail now
    assert tuple(range(k)) in group
    assert all(inverse(p) in group for p in group)
    return tuple(sorted(group))


def cyclic_group(j, k=None):
    k = j if k is None else k
    if not 1 <= j <= k:
        raise ValueError(f"Z{j} cannot act on {k} factors")
    gen = tuple(list(range(1, j)) + [0] + list(range(j, k)))
    elems = [tuple(range(k))]
    while True:
        nxt = compose(gen, elems[-1])
        if nxt == elems[0]:
            break
        elems.append(nxt)
    return tuple(sorted(elems))


def symmetric_group(j, k=None):
    k = j if k is None else k
    if not 1 <= j <= k:
        raise ValueError(f"S{j} cannot act on {k} factors")
    return tuple(sorted(tuple(p) + tuple(range(j, k)) for p in permutations(range(j))))


@dataclass(frozen=True)
class PermutationQuotientStack:
    n: int
    k: int
    group: tuple

    def __post_init__(self):
        if self.n < 0 or self.k < 1:
            raise ValueError(f"need n >= 0 and k >= 1, got n={self.n}, k={self.k}")
        object.__setattr__(self, "group", validate_group(self.group, self.k))

    @property
    def dimension(self):
        return self.n * self.k

    @property
    def order(self):
        return len(self.group)

    def __str__(self):
        return self.describe()

    def describe(self, group_name=None):
        if group_name is None:
            if self.order > 6:
                group_name = f"G(order {self.order})"
            else:
                group_name = "{" + ",".join(cycle_string(g) for g in self.group) + "}"
        return f"[(P^{self.n})^{self.k}/{group_name}]"


@dataclass(frozen=True)
class PermSector:
    perm: tuple
    cycles: tuple

    @property
    def label(self):
        return cycle_string(self.perm)

    @property
    def is_identity(self):
        return all(len(c) == 1 for c in self.cycles)

    @property
    def cycle_type(self):
        return tuple(sorted((len(c) for c in self.cycles), reverse=True))

    def __str__(self):
        return self.label


def sectors_pqs(stack):
    return [PermSector(g, tuple(cycles(g))) for g in stack.group]


@dataclass(frozen=True, eq=False)
class CycleData:
    length: int
    members: tuple
    variable: str
    normal: tuple  # EigenSummands


def fixed_ring_spec(stack, sector):
    names = tuple(f"H{c[0] + 1}" for c in sector.cycles)
    return GradedRingSpec(names, (stack.n + 1,) * len(names))


def fixed_data_pqs(stack, sector):
    """Per-cycle geometry of the fixed locus (P^n)^{#cycles} of a permutation.

    A cycle of length d restricts O(m)^{box d} to O(d m) on its diagonal
    copy of P^n, and contributes normal summands T P^n (x) chi^j, j = 1..d-1,
    with chi the order-d character.
    """
    spec = fixed_ring_spec(stack, sector)
    data = []
    for cyc, var in zip(sector.cycles, spec.variables):
        d = len(cyc)
        tangent = projective_tangent(GradedPoly.variable(spec, var), stack.n)
        normal = tuple(EigenSummand(tangent, root_of_unity(d, j)) for j in range(1, d))
        data.append(CycleData(d, cyc, var, normal))
    return spec, data
