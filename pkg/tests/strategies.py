from fractions import Fraction

from hypothesis import strategies as st

from stackyrr.exact_arith import Cyclotomic, totient
from stackyrr.series import GradedPoly, GradedRingSpec

ORDERS = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12]

small_fractions = st.builds(
    Fraction, st.integers(-9, 9), st.integers(1, 6)
)


@st.composite
def cyclotomics(draw, orders=ORDERS):
    n = draw(st.sampled_from(orders))
    coeffs = draw(st.lists(small_fractions, min_size=totient(n), max_size=totient(n)))
    return Cyclotomic(n, coeffs)


@st.composite
def nonzero_cyclotomics(draw, orders=ORDERS):
    c = draw(cyclotomics(orders))
    if c.is_zero():
        c = c + 1
    return c


RING_3 = GradedRingSpec(("x", "y", "z"), (3, 2, 4))


@st.composite
def graded_polys(draw, spec=RING_3, nilpotent=False, orders=(1, 3, 4)):
    terms = {}
    for _ in range(draw(st.integers(0, 5))):
        exps = tuple(draw(st.integers(0, b - 1)) for b in spec.bounds)
        if nilpotent and not any(exps):
            continue
        terms[exps] = draw(cyclotomics(orders))
    return GradedPoly(spec, terms)
