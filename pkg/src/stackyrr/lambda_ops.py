"""Lambda-ring operations on Chern characters.

Everything works on ch data alone: Adams operations give the power sums of
the exponential Chern roots, and Newton's identities turn those into the
exterior powers.
"""
from dataclasses import dataclass
from fractions import Fraction

from .errors import RankError
from .exact_arith import Cyclotomic, NotRationalError, to_rational
from .series import GradedPoly, exp_nilpotent


@dataclass(frozen=True, eq=False)
class ChernCharacter:
    value: GradedPoly

    @property
    def rank(self):
        return self.value.constant_term

    @property
    def spec(self):
        return self.value.spec

    def integer_rank(self):
        try:
            r = to_rational(self.rank)
        except NotRationalError:
            raise RankError(f"rank {self.rank} is not a rational integer") from None
        if r.denominator != 1:
            raise RankError(f"rank {r} is not an integer")
        return int(r)

    def __add__(self, other):
        return ChernCharacter(self.value + _value(other))

    def __sub__(self, other):
        return ChernCharacter(self.value - _value(other))

    def __mul__(self, other):
        return ChernCharacter(self.value * _value(other))

    __rmul__ = __mul__

    def __eq__(self, other):
        return self.value == _value(other)

    __hash__ = None

    def __str__(self):
        return str(self.value)


def _value(x):
    return x.value if isinstance(x, ChernCharacter) else x


@dataclass(frozen=True, eq=False)
class EigenSummand:
    """A bundle on a fixed locus on which the stabilizer acts by a root of unity."""

    base: ChernCharacter
    eigenvalue: Cyclotomic


def line_bundle(c1):
    """ch of a line bundle with first Chern class c1."""
    return ChernCharacter(exp_nilpotent(c1))


def trivial(spec, rank=1):
    return ChernCharacter(GradedPoly.constant(spec, rank))


def projective_tangent(hyperplane, n):
    """ch(T P^n) = (n+1) e^H - 1 from the Euler sequence."""
    return ChernCharacter((n + 1) * exp_nilpotent(hyperplane) - 1)


def adams(c, m):
    return ChernCharacter(c.value.map_coefficients(lambda e, v: v * Fraction(m) ** sum(e)))


def dualize(c):
    return adams(c, -1)


def exterior_power_ch(c, p):
    """ch(Lambda^p E) from ch(E) via Newton's identities."""
    if p < 0:
        raise ValueError(f"exterior power degree must be nonnegative, got {p}")
    r = c.integer_rank()
    if p > r:
        raise RankError(f"Lambda^{p} of a rank-{r} bundle is zero; p exceeds rank")
    return _exterior_powers(c, p)[p]


def _exterior_powers(c, top):
    """[ch(Lambda^0 E), ..., ch(Lambda^top E)]."""
    spec = c.spec
    sums = [None] + [adams(c, j).value for j in range(1, top + 1)]
    es = [GradedPoly.constant(spec, 1)]
    for p in range(1, top + 1):
        acc = GradedPoly.constant(spec, 0)
        for j in range(1, p + 1):
            term = es[p - j] * sums[j]
            acc = acc + term if j % 2 == 1 else acc - term
        es.append(acc * Fraction(1, p))
    return [ChernCharacter(e) for e in es]


def lambda_minus_one(c):
    """ch(lambda_{-1} E) = sum_p (-1)^p ch(Lambda^p E)."""
    r = c.integer_rank()
    total = GradedPoly.constant(c.spec, 0)
    for p, e in enumerate(_exterior_powers(c, r)):
        total = total + e.value * (-1) ** p
    return ChernCharacter(total)


def twisted_euler_class(summands, spec=None):
    """ch(t_h lambda_{-1}(N^*)) for N the direct sum of eigen-summands.

    Summand E with eigenvalue z contributes sum_p (-z^-1)^p ch(Lambda^p E^*):
    the dual carries the inverse character, and t_h scales Lambda^p of it by
    z^-p.
    """
    if not summands:
        if spec is None:
            raise ValueError("an empty normal bundle needs an explicit ring spec")
        return trivial(spec)
    result = None
    for s in summands:
        dual = dualize(s.base)
        powers = _exterior_powers(dual, dual.integer_rank())
        twist = -Cyclotomic.coerce(s.eigenvalue).inverse()
        factor = GradedPoly.constant(dual.spec, 0)
        scale = Cyclotomic.one()
        for e in powers:
            factor = factor + e.value * scale
            scale = scale * twist
        result = factor if result is None else result * factor
    return ChernCharacter(result)
