"""Differential polynomial operations: derivation, order, separant,
algebraization, Taylor data and pseudo-division.

A differential polynomial in indeterminates X_1, ..., X_n is an ordinary
polynomial in the jet variables X_i^(j), represented as a Poly whose
variable keys are JetVar(name, order).  The formal derivation maps
X_i^(j) to X_i^(j+1) and is zero on rational constants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Sequence, Tuple

from .poly import Poly


@dataclass(frozen=True, order=True)
class JetVar:
    """The jet variable X_name^(order); order 0 is the indeterminate itself."""

    name: str
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("jet order must be >= 0")

    def derived(self) -> "JetVar":
        return JetVar(self.name, self.order + 1)


def jet(name: str, order: int = 0) -> Poly:
    """The differential monomial X_name^(order) as a polynomial."""
    return Poly.var(JetVar(name, order))


def derive(f: Poly, times: int = 1) -> Poly:
    """Formal derivation: additive, Leibniz, D(X^(j)) = X^(j+1), D(c) = 0."""
    for _ in range(times):
        out = Poly()
        for mono, coeff in f.terms.items():
            # Leibniz rule over the variables of the monomial.
            for i, (var, exp) in enumerate(mono):
                rest = Poly({mono[:i] + mono[i + 1:]: coeff * exp})
                out = out + rest * Poly.var(var, exp - 1) * Poly.var(var.derived())
        f = out
    return f


def order(f: Poly, name: str):
    """Maximal j with X_name^(j) occurring in f, or None if absent."""
    best = None
    for var in f.variables():
        if var.name == name and (best is None or var.order > best):
            best = var.order
    return best


def indeterminates(f: Poly) -> list:
    """Sorted names of the differential indeterminates occurring in f."""
    return sorted({var.name for var in f.variables()})


def separant(f: Poly) -> Poly:
    """df/dX^(m) for a nonconstant single-indeterminate f of order m."""
    names = indeterminates(f)
    if len(names) != 1:
        raise ValueError("no separant: expected exactly one differential indeterminate")
    m = order(f, names[0])
    return f.diff(JetVar(names[0], m))


def algebraize(f: Poly, var_order: Sequence[str] | None = None) -> Tuple[Poly, Dict[JetVar, str]]:
    """Replace each X_i^(j) by a flat variable named ``<name>_<i>_<j>``.

    Returns the plain polynomial together with the jet-to-flat map.  The
    indeterminate index i follows ``var_order`` (default: sorted names).
    """
    names = list(var_order) if var_order is not None else indeterminates(f)
    index = {name: i for i, name in enumerate(names)}
    mapping: Dict[JetVar, str] = {}
    for var in f.variables():
        if var.name not in index:
            raise ValueError(f"indeterminate {var.name!r} not in the declared order")
        mapping[var] = flat_name(var.name, index[var.name], var.order)
    return f.rename(mapping), mapping


def flat_name(name: str, index: int, order: int) -> str:
    return f"{name}_{index}_{order}"


def evaluate_diff(f: Poly, jets: Mapping[str, Sequence[Fraction]]) -> Fraction:
    """Evaluate a differential polynomial at jets (a_i, a_i', ..., a_i^(m))."""
    assignment = {}
    for var in f.variables():
        values = jets.get(var.name)
        if values is None or var.order >= len(values):
            raise KeyError(f"missing assignment for order {var.order} of {var.name!r}")
        assignment[var] = Fraction(values[var.order])
    return f.evaluate(assignment)


def taylor_coefficients(g: Poly, orders: Mapping) -> Poly:
    """The coefficient g_l with l! * g_l = d_l g, for a multi-index l.

    ``orders`` maps variables to their entries of the multi-index; the
    reconstruction identity g(X+Y) = g(X) + sum g_l(X) Y^l holds exactly.
    """
    out = g
    factorial = 1
    for var, k in orders.items():
        for _ in range(int(k)):
            out = out.diff(var)
        factorial *= math.factorial(int(k))
    return out.scale(Fraction(1, factorial))


def pseudo_divide(f: Poly, g: Poly, var) -> Tuple[int, Poly, Poly]:
    """Pseudo-division in one variable: b^d * f = q * g + r, deg_v r < deg_v g.

    b is the leading coefficient of g in ``var``.  d counts the reduction
    steps that actually premultiplied by b (steps with b = +-1 do not), so
    d <= deg_v(f) - deg_v(g) + 1 and is 0 whenever g is monic in ``var``.
    """
    if g.is_zero() or g.degree(var) < 1:
        raise ValueError("invalid divisor")
    deg_g = g.degree(var)
    b = g.leading_coeff(var)
    b_is_unit = b.is_constant() and abs(b.constant_value()) == 1
    unit = b.constant_value() if b_is_unit else None
    d = 0
    q = Poly()
    r = f
    while not r.is_zero() and r.degree(var) >= deg_g:
        deg_r = r.degree(var)
        lc_r = r.leading_coeff(var)
        shift = Poly.var(var, deg_r - deg_g)
        if b_is_unit:
            factor = lc_r.scale(Fraction(1, unit))
            q = q + factor * shift
            r = r - factor * shift * g
        else:
            d += 1
            factor = lc_r * shift
            q = b * q + factor
            r = b * r - factor * g
    return d, q, r


def prem(f: Poly, g: Poly, var) -> Poly:
    """Pseudo-remainder of f by g with respect to ``var``."""
    return pseudo_divide(f, g, var)[2]
