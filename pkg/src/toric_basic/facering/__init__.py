"""Face ring quotients R[v]/(I_K + J): Gröbner route, Hilbert function, cup
products, and the Gröbner-free oracle and Koszul checks."""
from .groebner import groebner_basis, normal_form
from .koszul import (KoszulReport, graded_dimension_oracle, koszul_homology,
                     koszul_report)
from .polynomial import Monomial, Polynomial, format_monomial, grevlex_key
from .quotient import (GradedQuotient, LinearSystemOfParameters, LsopError,
                       SocleDegreeError, basic_betti, cup_product_table,
                       graded_quotient, linear_ideal, lsop_check, lsop_witness,
                       ring_presentation, stanley_reisner_ideal)

__all__ = [
    "GradedQuotient", "KoszulReport", "LinearSystemOfParameters", "LsopError",
    "Monomial", "Polynomial", "SocleDegreeError", "basic_betti",
    "cup_product_table", "format_monomial", "graded_dimension_oracle",
    "graded_quotient", "grevlex_key", "groebner_basis", "koszul_homology",
    "koszul_report", "linear_ideal", "lsop_check", "lsop_witness",
    "normal_form", "ring_presentation", "stanley_reisner_ideal",
]
