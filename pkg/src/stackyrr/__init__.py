"""Exact Euler characteristics on quotient stacks via localization Riemann-Roch."""
from .engine import (
    chi_polynomial_pqs,
    class_aggregation_pqs,
    coarse_todd_wps,
    euler_characteristic_pqs,
    euler_characteristic_wps,
    sector_value_pqs,
    sector_value_wps,
)
from .exact_arith import Cyclotomic, Rational, root_of_unity, to_rational
from .stacks import (
    PermutationQuotientStack,
    WeightedProjectiveStack,
    cyclic_group,
    symmetric_group,
)

__all__ = [
    "Cyclotomic",
    "PermutationQuotientStack",
    "Rational",
    "WeightedProjectiveStack",
    "chi_polynomial_pqs",
    "class_aggregation_pqs",
    "coarse_todd_wps",
    "cyclic_group",
    "euler_characteristic_pqs",
    "euler_characteristic_wps",
    "root_of_unity",
    "sector_value_pqs",
    "sector_value_wps",
    "symmetric_group",
    "to_rational",
]
