"""Formula ASTs over polynomial atoms.

The same node classes serve both dialects: differential formulas carry
Poly atoms over JetVar keys, algebraic formulas carry Poly atoms over flat
string variables.  Atoms are normalized to ``poly rel 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Tuple

from codfkit.algebra.poly import Poly

RELS = ("=", "!=", "<", "<=", ">", ">=")
NEGATED = {"=": "!=", "!=": "=", "<": ">=", "<=": ">", ">": "<=", ">=": "<"}
FLIPPED = {"=": "=", "!=": "!=", "<": ">", "<=": ">=", ">": "<", ">=": "<="}


class Formula:
    """Base class; nodes are immutable dataclasses."""

    __slots__ = ()

    def __and__(self, other):
        return conj(self, other)

    def __or__(self, other):
        return disj(self, other)

    def __invert__(self):
        return Not(self)

    def __repr__(self):
        from codfkit.formula.printer import render_formula
        return f"Formula({render_formula(self)})"


@dataclass(frozen=True, repr=False)
class TrueF(Formula):
    pass


@dataclass(frozen=True, repr=False)
class FalseF(Formula):
    pass


@dataclass(frozen=True, repr=False)
class Atom(Formula):
    poly: Poly
    rel: str

    def __post_init__(self):
        if self.rel not in RELS:
            raise ValueError(f"unknown relation {self.rel!r}")

    def negated(self) -> "Atom":
        return Atom(self.poly, NEGATED[self.rel])

    def holds(self, value: Fraction) -> bool:
        return evaluate_rel(value, self.rel)


@dataclass(frozen=True, repr=False)
class Not(Formula):
    arg: Formula


@dataclass(frozen=True, repr=False)
class And(Formula):
    args: Tuple[Formula, ...]


@dataclass(frozen=True, repr=False)
class Or(Formula):
    args: Tuple[Formula, ...]


@dataclass(frozen=True, repr=False)
class Quantifier(Formula):
    kind: str  # "exists" | "forall"
    var: str
    body: Formula

    def __post_init__(self):
        if self.kind not in ("exists", "forall"):
            raise ValueError(f"unknown quantifier {self.kind!r}")


TRUE = TrueF()
FALSE = FalseF()


def evaluate_rel(value, rel: str) -> bool:
    if rel == "=":
        return value == 0
    if rel == "!=":
        return value != 0
    if rel == "<":
        return value < 0
    if rel == "<=":
        return value <= 0
    if rel == ">":
        return value > 0
    return value >= 0


def conj(*parts) -> Formula:
    flat = []
    for part in parts:
        if isinstance(part, FalseF):
            return FALSE
        if isinstance(part, TrueF):
            continue
        if isinstance(part, And):
            flat.extend(part.args)
        else:
            flat.append(part)
    if not flat:
        return TRUE
    if len(flat) == 1:
        return flat[0]
    return And(tuple(flat))


def disj(*parts) -> Formula:
    flat = []
    for part in parts:
        if isinstance(part, TrueF):
            return TRUE
        if isinstance(part, FalseF):
            continue
        if isinstance(part, Or):
            flat.extend(part.args)
        else:
            flat.append(part)
    if not flat:
        return FALSE
    if len(flat) == 1:
        return flat[0]
    return Or(tuple(flat))


def exists(var: str, body: Formula) -> Formula:
    return Quantifier("exists", var, body)


def forall(var: str, body: Formula) -> Formula:
    return Quantifier("forall", var, body)


def atoms_of(formula: Formula) -> list:
    out = []

    def walk(node):
        if isinstance(node, Atom):
            out.append(node)
        elif isinstance(node, Not):
            walk(node.arg)
        elif isinstance(node, (And, Or)):
            for a in node.args:
                walk(a)
        elif isinstance(node, Quantifier):
            walk(node.body)

    walk(formula)
    return out


def polys_of(formula: Formula) -> list:
    seen, out = set(), []
    for atom in atoms_of(formula):
        if atom.poly not in seen:
            seen.add(atom.poly)
            out.append(atom.poly)
    return out


def free_vars(formula: Formula) -> set:
    """Free variables; for algebraic formulas these are the flat names."""

    def walk(node, bound):
        if isinstance(node, Atom):
            return {v for v in node.poly.variables()} - bound
        if isinstance(node, Not):
            return walk(node.arg, bound)
        if isinstance(node, (And, Or)):
            out = set()
            for a in node.args:
                out |= walk(a, bound)
            return out
        if isinstance(node, Quantifier):
            return walk(node.body, bound | {node.var})
        return set()

    return walk(formula, set())


def is_quantifier_free(formula: Formula) -> bool:
    if isinstance(formula, Quantifier):
        return False
    if isinstance(formula, Not):
        return is_quantifier_free(formula.arg)
    if isinstance(formula, (And, Or)):
        return all(is_quantifier_free(a) for a in formula.args)
    return True


def substitute(formula: Formula, mapping: Mapping) -> Formula:
    """Substitute polynomials/rationals for free variables in all atoms."""
    if isinstance(formula, Atom):
        return Atom(formula.poly.subs(mapping), formula.rel)
    if isinstance(formula, Not):
        return Not(substitute(formula.arg, mapping))
    if isinstance(formula, And):
        return conj(*(substitute(a, mapping) for a in formula.args))
    if isinstance(formula, Or):
        return disj(*(substitute(a, mapping) for a in formula.args))
    if isinstance(formula, Quantifier):
        if formula.var in mapping:
            raise ValueError(f"substituting bound variable {formula.var!r}")
        return Quantifier(formula.kind, formula.var, substitute(formula.body, mapping))
    return formula


def evaluate_formula(formula: Formula, assignment: Mapping) -> bool:
    """Truth value of a quantifier-free formula at an exact point."""
    if isinstance(formula, Atom):
        return formula.holds(formula.poly.evaluate(assignment))
    if isinstance(formula, Not):
        return not evaluate_formula(formula.arg, assignment)
    if isinstance(formula, And):
        return all(evaluate_formula(a, assignment) for a in formula.args)
    if isinstance(formula, Or):
        return any(evaluate_formula(a, assignment) for a in formula.args)
    if isinstance(formula, TrueF):
        return True
    if isinstance(formula, FalseF):
        return False
    raise ValueError("quantified formula cannot be evaluated pointwise")


def map_atoms(formula: Formula, fn) -> Formula:
    if isinstance(formula, Atom):
        return fn(formula)
    if isinstance(formula, Not):
        return Not(map_atoms(formula.arg, fn))
    if isinstance(formula, And):
        return conj(*(map_atoms(a, fn) for a in formula.args))
    if isinstance(formula, Or):
        return disj(*(map_atoms(a, fn) for a in formula.args))
    if isinstance(formula, Quantifier):
        return Quantifier(formula.kind, formula.var, map_atoms(formula.body, fn))
    return formula
