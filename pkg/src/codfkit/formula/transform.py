"""Normal forms and the star translation.

to_dnf rewrites a quantifier-free formula into a disjunction of
conjunctions of literals, with negations pushed onto the relations
(never a Not node in the output).  star_translate replaces each jet
variable x^(j) by the flat variable x_<i>_<j> through one shared
StarContext, so every atom of a formula lands in the same flat space.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from codfkit.algebra.diffpoly import JetVar, flat_name
from codfkit.algebra.poly import Poly
from codfkit.errors import BudgetError
from .ast import (
    FALSE,
    TRUE,
    And,
    Atom,
    FalseF,
    Formula,
    Not,
    Or,
    Quantifier,
    TrueF,
    conj,
    disj,
)

DNF_LITERAL_CAP = 10 ** 5


def nnf(formula: Formula) -> Formula:
    """Negation normal form; negated atoms become their opposite relation."""

    def walk(node, neg):
        if isinstance(node, Atom):
            return node.negated() if neg else node
        if isinstance(node, TrueF):
            return FALSE if neg else TRUE
        if isinstance(node, FalseF):
            return TRUE if neg else FALSE
        if isinstance(node, Not):
            return walk(node.arg, not neg)
        if isinstance(node, And):
            parts = [walk(a, neg) for a in node.args]
            return disj(*parts) if neg else conj(*parts)
        if isinstance(node, Or):
            parts = [walk(a, neg) for a in node.args]
            return conj(*parts) if neg else disj(*parts)
        if isinstance(node, Quantifier):
            kind = node.kind
            if neg:
                kind = "forall" if kind == "exists" else "exists"
            return Quantifier(kind, node.var, walk(node.body, neg))
        raise TypeError(f"not a formula: {node!r}")

    return walk(formula, False)


def _simplify_atom(atom: Atom) -> Formula:
    if atom.poly.is_constant():
        value = atom.poly.constant_value() if not atom.poly.is_zero() else 0
        return TRUE if atom.holds(value) else FALSE
    return atom


def to_dnf(formula: Formula, cap: int = DNF_LITERAL_CAP) -> List[List[Atom]]:
    """Disjunctive normal form as a list of conjunctions of literals.

    Duplicate literals inside a conjunct are dropped; conjuncts containing
    both an atom and its negation are pruned.  Sizes beyond ``cap`` total
    literals abort with a budget error rather than looping.
    """
    normal = nnf(formula)

    def walk(node) -> List[List[Atom]]:
        if isinstance(node, TrueF):
            return [[]]
        if isinstance(node, FalseF):
            return []
        if isinstance(node, Atom):
            simplified = _simplify_atom(node)
            if isinstance(simplified, TrueF):
                return [[]]
            if isinstance(simplified, FalseF):
                return []
            return [[simplified]]
        if isinstance(node, Or):
            out = []
            for arg in node.args:
                out.extend(walk(arg))
                _check_cap(out, cap)
            return out
        if isinstance(node, And):
            out = [[]]
            for arg in node.args:
                branches = walk(arg)
                merged = []
                for left in out:
                    for right in branches:
                        combo = _merge_literals(left, right)
                        if combo is not None:
                            merged.append(combo)
                out = merged
                _check_cap(out, cap)
            return out
        raise TypeError(f"to_dnf expects a quantifier-free formula: {node!r}")

    return walk(normal)


def _merge_literals(left: List[Atom], right: List[Atom]):
    merged = list(left)
    seen = {(a.poly, a.rel) for a in left}
    for atom in right:
        key = (atom.poly, atom.rel)
        if key in seen:
            continue
        if (atom.poly, atom.negated().rel) in seen:
            return None
        merged.append(atom)
        seen.add(key)
    return merged


def _check_cap(conjuncts, cap):
    total = sum(len(c) for c in conjuncts)
    if total > cap:
        raise BudgetError(f"DNF exceeded the literal cap ({total} > {cap})")


def dnf_formula(formula: Formula, cap: int = DNF_LITERAL_CAP) -> Formula:
    conjuncts = to_dnf(formula, cap)
    return disj(*(conj(*c) for c in conjuncts))


def split_weak_relations(formula: Formula) -> Formula:
    """Rewrite p <= 0 as (p < 0 | p = 0), and similarly for >=."""

    def fix(atom: Atom) -> Formula:
        if atom.rel == "<=":
            return disj(Atom(atom.poly, "<"), Atom(atom.poly, "="))
        if atom.rel == ">=":
            return disj(Atom(atom.poly, ">"), Atom(atom.poly, "="))
        return atom

    from .ast import map_atoms
    return map_atoms(nnf(formula), fix)


def max_orders(formula: Formula) -> Dict[str, int]:
    """Per-indeterminate maximal jet order over all atoms."""
    orders: Dict[str, int] = {}
    from .ast import atoms_of
    for atom in atoms_of(formula):
        for var in atom.poly.variables():
            if not isinstance(var, JetVar):
                raise TypeError("max_orders expects differential atoms")
            if orders.get(var.name, -1) < var.order:
                orders[var.name] = var.order
    return orders


@dataclass(frozen=True)
class StarContext:
    """Shared flat coordinate system for one differential formula.

    ``variables`` fixes the indeterminate order; ``orders[name]`` is the
    maximal jet order m_i; the flat dimension is N = sum(m_i) + n.
    """

    variables: Tuple[str, ...]
    orders: Dict[str, int] = field(hash=False)

    @property
    def total_dim(self) -> int:
        return sum(self.orders[v] + 1 for v in self.variables)

    def flat(self, name: str, order: int) -> str:
        return flat_name(name, self.variables.index(name), order)

    def flat_vars(self) -> List[str]:
        """All flat coordinates, jet blocks in variable order, orders ascending."""
        out = []
        for name in self.variables:
            for j in range(self.orders[name] + 1):
                out.append(self.flat(name, j))
        return out

    def block(self, name: str) -> List[str]:
        return [self.flat(name, j) for j in range(self.orders[name] + 1)]

    def jet_map(self) -> Dict[JetVar, str]:
        return {JetVar(name, j): self.flat(name, j)
                for name in self.variables for j in range(self.orders[name] + 1)}

    def unflatten(self) -> Dict[str, JetVar]:
        return {flat: jetv for jetv, flat in self.jet_map().items()}


def star_context(formula: Formula, variables: Sequence[str] | None = None) -> StarContext:
    orders = max_orders(formula)
    if variables is None:
        variables = sorted(orders)
    else:
        variables = list(variables)
        for name in orders:
            if name not in variables:
                raise ValueError(f"indeterminate {name!r} missing from the variable order")
    full = {name: orders.get(name, 0) for name in variables}
    return StarContext(tuple(variables), full)


def star_translate(formula: Formula, variables: Sequence[str] | None = None,
                   context: StarContext | None = None) -> Tuple[Formula, StarContext]:
    """The f -> f* translation on a quantifier-free differential formula."""
    from .ast import is_quantifier_free, map_atoms
    if not is_quantifier_free(formula):
        raise ValueError("star translation expects a quantifier-free formula")
    ctx = context or star_context(formula, variables)
    mapping = ctx.jet_map()

    def fix(atom: Atom) -> Atom:
        return Atom(atom.poly.rename(mapping), atom.rel)

    return map_atoms(formula, fix), ctx


def unstar(formula: Formula, context: StarContext) -> Formula:
    """Map flat jet coordinates back to derivatives (the inverse of star)."""
    from .ast import map_atoms
    back = context.unflatten()

    def fix(atom: Atom) -> Atom:
        return Atom(atom.poly.rename(back), atom.rel)

    return map_atoms(formula, fix)
