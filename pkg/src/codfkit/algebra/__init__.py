"""Exact differential and ordinary polynomial algebra over Q."""

from .poly import Poly, Monomial
from .diffpoly import (
    JetVar,
    jet,
    derive,
    order,
    separant,
    algebraize,
    flat_name,
    indeterminates,
    evaluate_diff,
    taylor_coefficients,
    pseudo_divide,
    prem,
)
from .euclid import (
    exact_div,
    divides,
    gcd,
    gcd_list,
    content_and_primitive,
    primitive_part,
    subresultant_prs,
    subresultant_polys,
    psc_chain,
    resultant,
    squarefree_part,
    coprime_squarefree_basis,
)

__all__ = [
    "Poly", "Monomial", "JetVar", "jet", "derive", "order", "separant",
    "algebraize", "flat_name", "indeterminates", "evaluate_diff",
    "taylor_coefficients", "pseudo_divide", "prem", "exact_div", "divides",
    "gcd", "gcd_list", "content_and_primitive", "primitive_part",
    "subresultant_prs", "subresultant_polys", "psc_chain", "resultant",
    "squarefree_part", "coprime_squarefree_basis",
]
