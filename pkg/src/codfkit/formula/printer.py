"""Canonical text rendering for polynomials and formulas.

The rendering is the inverse of the parser grammar: variables as names,
derivatives as apostrophes (x''), rationals as p/q, products with '*',
powers with '^'.  Terms appear in the canonical descending monomial order,
so rendering is deterministic and usable in golden files.
"""

from __future__ import annotations

from fractions import Fraction

from codfkit.algebra.poly import Poly, _mono_sort_key
from codfkit.algebra.diffpoly import JetVar


def render_var(var) -> str:
    if isinstance(var, JetVar):
        return var.name + "'" * var.order
    return str(var)


def _render_monomial(mono, coeff: Fraction) -> str:
    parts = []
    if not mono:
        return _render_coeff(coeff)
    if coeff == -1:
        head = "-"
    elif coeff == 1:
        head = ""
    else:
        head = _render_coeff(coeff) + "*"
    for var, exp in sorted(mono, reverse=True):
        name = render_var(var)
        parts.append(name if exp == 1 else f"{name}^{exp}")
    return head + "*".join(parts)


def _render_coeff(coeff: Fraction) -> str:
    if coeff.denominator == 1:
        return str(coeff.numerator)
    return f"{coeff.numerator}/{coeff.denominator}"


def render_poly(poly: Poly) -> str:
    if poly.is_zero():
        return "0"
    chunks = []
    for mono, coeff in poly.sorted_terms():
        text = _render_monomial(mono, coeff)
        if not chunks:
            chunks.append(text)
        elif text.startswith("-"):
            chunks.append("- " + text[1:])
        else:
            chunks.append("+ " + text)
    return " ".join(chunks)


def render_formula(formula) -> str:
    from codfkit.formula.ast import Atom, Not, And, Or, Quantifier, TrueF, FalseF

    def wrap(sub, parent_rank: int) -> str:
        text, rank = walk(sub)
        return f"({text})" if rank > parent_rank else text

    def walk(node):
        # rank: atoms 0, ~ 1, & 2, | 3, quantifiers 4
        if isinstance(node, TrueF):
            return "true", 0
        if isinstance(node, FalseF):
            return "false", 0
        if isinstance(node, Atom):
            return f"{render_poly(node.poly)} {node.rel} 0", 0
        if isinstance(node, Not):
            return "~" + wrap(node.arg, 1), 1
        if isinstance(node, And):
            return " & ".join(wrap(a, 2) for a in node.args), 2
        if isinstance(node, Or):
            return " | ".join(wrap(a, 3) for a in node.args), 3
        if isinstance(node, Quantifier):
            head = "E" if node.kind == "exists" else "A"
            return f"{head} {node.var}. {wrap(node.body, 4)}", 4
        raise TypeError(f"not a formula node: {node!r}")

    return walk(formula)[0]
