"""Exact rationals and elements of cyclotomic fields Q(zeta_N).

Elements are stored in the power basis 1, z, ..., z^(phi(N)-1) reduced modulo
the N-th cyclotomic polynomial, so equality is coefficient comparison.
"""
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational as _RationalABC

from .errors import NotRationalError

Rational = Fraction


def lcm(a, b):
    return a * b // gcd(a, b)


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def _poly_divmod_monic(num, den):
    """Divide integer/rational polynomials (low degree first); den must be monic."""
    num = list(num)
    dn = len(den) - 1
    if len(num) - 1 < dn:
        return [0], num
    quot = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            quot[i - dn] = c
            for j in range(dn + 1):
                num[i - dn + j] -= c * den[j]
    rem = num[:dn] or [0]
    return quot, rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError(f"cyclotomic order must be positive, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly, rem = _poly_divmod_monic(poly, cyclotomic_polynomial(d))
        assert not any(rem), "x^n - 1 not divisible by Phi_d"
    return tuple(poly)


def totient(n):
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _power_table(n):
    """Reduced coefficient vectors of x^e mod Phi_n for 0 <= e < 2n."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows = []
    cur = [1] + [0] * (deg - 1)
    for _ in range(2 * n):
        rows.append(tuple(cur))
        # multiply by x and reduce using x^deg = -sum phi_i x^i
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * phi[i] for i, c in enumerate(cur)]
    return tuple(rows)


def _reduce(n, poly):
    """Reduce a polynomial in z (low degree first, any length) modulo Phi_n."""
    table = _power_table(n)
    deg = len(table[0])
    out = [Fraction(0)] * deg
    for e, c in enumerate(poly):
        if not c:
            continue
        row = table[e % n]
        for i, r in enumerate(row):
            if r:
                out[i] += c * r
    return out


class Cyclotomic:
    """Immutable element of Q(zeta_order)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs):
        if order < 1:
            raise ValueError(f"order must be positive, got {order}")
        deg = totient(order)
        coeffs = tuple(c if type(c) is Fraction else Fraction(c) for c in coeffs)
        if len(coeffs) != deg:
            coeffs = tuple(_reduce(order, coeffs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic is immutable")

    @classmethod
    def rational(cls, value):
        return cls(1, (Fraction(value),))

    @classmethod
    def zero(cls, order=1):
        return cls(order, (0,) * totient(order))

    @classmethod
    def one(cls, order=1):
        return cls(order, (1,) + (0,) * (totient(order) - 1))

    # -- coercion -------------------------------------------------------------

    def promote(self, order):
        """Embed into Q(zeta_order); order must be a multiple of self.order."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot embed Q(zeta_{self.order}) into Q(zeta_{order})")
        step = order // self.order
        poly = [0] * (step * (len(self.coeffs) - 1) + 1)
        for i, c in enumerate(self.coeffs):
            poly[i * step] = c
        return Cyclotomic(order, _reduce(order, poly))

    @staticmethod
    def coerce(x):
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, _RationalABC)):
            return Cyclotomic.rational(x)
        return NotImplemented

    def _common(self, other):
        other = Cyclotomic.coerce(other)
        if other is NotImplemented:
            return NotImplemented, None, None
        n = lcm(self.order, other.order)
        return n, self.promote(n), other.promote(n)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        n, a, b = self._common(other)
        if n is NotImplemented:
            return n
        return Cyclotomic(n, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        n, a, b = self._common(other)
        if n is NotImplemented:
            return n
        return Cyclotomic(n, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, _RationalABC)):
            return Cyclotomic(self.order, tuple(c * other for c in self.coeffs))
        n, a, b = self._common(other)
        if n is NotImplemented:
            return n
        if n == 1:
            return Cyclotomic(1, (a.coeffs[0] * b.coeffs[0],))
        prod = [Fraction(0)] * (2 * len(a.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return Cyclotomic(n, _reduce(n, prod))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, _RationalABC)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(zeta)")
            return Cyclotomic(self.order, tuple(c / other for c in self.coeffs))
        other = Cyclotomic.coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Cyclotomic.coerce(other) * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = Cyclotomic.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self):
        """Multiplicative inverse by the extended Euclidean algorithm over Q."""
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse in Q(zeta)")
        if len(self.coeffs) == 1:
            return Cyclotomic(self.order, (1 / self.coeffs[0],))
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        s = _trim(list(self.coeffs))
        # invariant: r_i = u_i * a  (mod phi)
        r0, u0 = phi, [Fraction(0)]
        r1, u1 = s, [Fraction(1)]
        while len(r1) > 1 or r1[0] != 0:
            q, r = _poly_divmod_field(r0, r1)
            r0, r1 = r1, r
            u0, u1 = u1, _poly_sub(u0, _poly_mul(q, u1))
        # r0 is a nonzero constant because phi is irreducible
        c = r0[0]
        return Cyclotomic(self.order, _reduce(self.order, [x / c for x in u0]))

    def conjugate(self):
        """Image under z -> z^-1 (complex conjugation)."""
        n = self.order
        poly = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            poly[(-i) % n] += c
        return Cyclotomic(n, _reduce(n, poly))

    def galois(self, a):
        """Image under z -> z^a, gcd(a, order) = 1."""
        n = self.order
        if gcd(a, n) != 1:
            raise ValueError(f"{a} is not a unit mod {n}")
        poly = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            poly[(a * i) % n] += c
        return Cyclotomic(n, _reduce(n, poly))

    # -- predicates and conversion -------------------------------------------

    def is_zero(self):
        return not any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def __eq__(self, other):
        n, a, b = self._common(other)
        if n is NotImplemented:
            return NotImplemented
        return a.coeffs == b.coeffs

    __hash__ = None

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"Cyclotomic({self.order}, [{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        return f"[{self.order}; {', '.join(str(c) for c in self.coeffs)}]"

    def to_complex(self):
        """Floating-point value; reporting only, never used in the engine."""
        import cmath

        z = cmath.exp(2j * cmath.pi / self.order)
        return sum(float(c) * z**i for i, c in enumerate(self.coeffs))


def _trim(p):
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _poly_divmod_field(num, den):
    num = list(num)
    den = _trim(list(den))
    dn = len(den) - 1
    lead = den[-1]
    if len(num) - 1 < dn:
        return [Fraction(0)], _trim(num)
    quot = [Fraction(0)] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i] / lead
        if c:
            quot[i - dn] = c
            for j in range(dn + 1):
                num[i - dn + j] -= c * den[j]
    return _trim(quot), _trim(num[:dn] or [Fraction(0)])


def root_of_unity(n, k=1):
    """zeta_n ** k as an element of Q(zeta_n)."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    poly = [0] * n
    poly[k % n] = 1
    return Cyclotomic(n, _reduce(n, poly))


def cyc_add(a, b):
    return Cyclotomic.coerce(a) + b


def cyc_mul(a, b):
    return Cyclotomic.coerce(a) * b


def cyc_neg(a):
    return -Cyclotomic.coerce(a)


def cyc_inverse(a):
    return Cyclotomic.coerce(a).inverse()


def to_rational(a):
    """Return a as a Fraction, raising NotRationalError if a is not in Q."""
    a = Cyclotomic.coerce(a)
    if not a.is_rational():
        raise NotRationalError(a.order, a.coeffs)
    return a.coeffs[0]


def format_rational(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
