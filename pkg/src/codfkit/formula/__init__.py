"""Formula ASTs, parsing, normal forms and the star translation."""

from .ast import (
    TRUE, FALSE, Atom, And, Or, Not, Quantifier, Formula, TrueF, FalseF,
    conj, disj, exists, forall, atoms_of, polys_of, free_vars,
    is_quantifier_free, substitute, evaluate_formula, map_atoms,
)
from .parser import parse, parse_poly, as_algebraic
from .printer import render_formula, render_poly
from .transform import (
    nnf, to_dnf, dnf_formula, split_weak_relations, max_orders,
    StarContext, star_context, star_translate, unstar,
)

__all__ = [
    "TRUE", "FALSE", "Atom", "And", "Or", "Not", "Quantifier", "Formula",
    "TrueF", "FalseF", "conj", "disj", "exists", "forall", "atoms_of",
    "polys_of", "free_vars", "is_quantifier_free", "substitute",
    "evaluate_formula", "map_atoms", "parse", "parse_poly", "as_algebraic",
    "render_formula", "render_poly", "nnf", "to_dnf", "dnf_formula",
    "split_weak_relations", "max_orders", "StarContext", "star_context",
    "star_translate", "unstar",
]
