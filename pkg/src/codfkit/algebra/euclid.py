"""Euclidean machinery over Q[x1,...,xk]: exact division, multivariate gcd,
subresultant polynomial remainder sequences, resultants and squarefree parts.

All of this supports the cell-decomposition kernel; the algorithms are the
classical primitive-PRS / subresultant-PRS constructions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .poly import Poly, _mono_sort_key


def exact_div(f: Poly, g: Poly) -> Poly:
    """Exact polynomial division; raises if g does not divide f."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if g.is_constant():
        return f.scale(Fraction(1) / g.constant_value())
    quotient = Poly()
    lead_g, coeff_g = max(g.terms.items(), key=lambda t: _mono_sort_key(t[0]))
    g_exp = dict(lead_g)
    while not f.is_zero():
        lead_f, coeff_f = max(f.terms.items(), key=lambda t: _mono_sort_key(t[0]))
        f_exp = dict(lead_f)
        diff = {}
        for var, e in g_exp.items():
            have = f_exp.get(var, 0)
            if have < e:
                raise ValueError("inexact polynomial division")
            if have > e:
                diff[var] = have - e
        for var, e in f_exp.items():
            if var not in g_exp:
                diff[var] = e
        term = Poly({tuple(sorted(diff.items())): coeff_f / coeff_g})
        quotient = quotient + term
        f = f - term * g
    return quotient


def divides(g: Poly, f: Poly) -> bool:
    try:
        exact_div(f, g)
        return True
    except (ValueError, ZeroDivisionError):
        return False


def _prem_classic(f: Poly, g: Poly, var) -> Poly:
    """Pseudo-remainder with the full premultiplier lc(g)^(deg f - deg g + 1)."""
    deg_g = g.degree(var)
    b = g.leading_coeff(var)
    r = f
    steps = 0
    delta = max(f.degree(var) - deg_g + 1, 0)
    while not r.is_zero() and r.degree(var) >= deg_g:
        lc_r = r.leading_coeff(var)
        shift = Poly.var(var, r.degree(var) - deg_g)
        r = b * r - lc_r * shift * g
        steps += 1
    for _ in range(delta - steps):
        r = b * r
    return r


def gcd(f: Poly, g: Poly) -> Poly:
    """Multivariate gcd over Q, integer-normalized (primitive PRS)."""
    if f.is_zero():
        return g.int_normalized()
    if g.is_zero():
        return f.int_normalized()
    if f.is_constant() or g.is_constant():
        return Poly.const(1)
    both = f.variables() | g.variables()
    var = max(both)
    if f.degree(var) < g.degree(var):
        f, g = g, f
    cont_f, pp_f = content_and_primitive(f, var)
    cont_g, pp_g = content_and_primitive(g, var)
    cont = gcd(cont_f, cont_g)
    while not pp_g.is_zero():
        r = _prem_classic(pp_f, pp_g, var)
        pp_f, pp_g = pp_g, primitive_part(r, var)
    return (cont * pp_f.int_normalized()).int_normalized()


def gcd_list(polys: Sequence[Poly]) -> Poly:
    acc = Poly()
    for p in polys:
        acc = gcd(acc, p)
        if acc.is_constant() and not acc.is_zero():
            return Poly.const(1)
    return acc


def content_and_primitive(f: Poly, var) -> Tuple[Poly, Poly]:
    """Content (gcd of the coefficients in ``var``) and primitive part."""
    coeffs = list(f.coeffs_in(var).values())
    if not coeffs:
        return Poly(), Poly()
    cont = gcd_list(coeffs)
    return cont, exact_div(f, cont)


def primitive_part(f: Poly, var) -> Poly:
    if f.is_zero():
        return f
    return content_and_primitive(f, var)[1].int_normalized()


def subresultant_prs(f: Poly, g: Poly, var) -> List[Poly]:
    """Subresultant polynomial remainder sequence (Brown), deg f >= deg g."""
    if f.is_zero() or g.is_zero():
        raise ValueError("PRS of a zero polynomial")
    prs = [f, g]
    delta = f.degree(var) - g.degree(var)
    beta = Poly.const((-1) ** (delta + 1))
    psi = Poly.const(-1)
    while True:
        rem = _prem_classic(prs[-2], prs[-1], var)
        if rem.is_zero():
            return prs
        rem = exact_div(rem, beta)
        prs.append(rem)
        if prs[-1].degree(var) < 1:
            return prs
        lc = prs[-2].leading_coeff(var)
        prev_delta, delta = delta, prs[-2].degree(var) - prs[-1].degree(var)
        if prev_delta >= 1:
            num = (-lc) ** prev_delta
            psi = exact_div(num, psi ** (prev_delta - 1)) if prev_delta > 1 else num
        beta = -lc * psi ** delta


def subresultant_polys(f: Poly, g: Poly, var) -> List[Poly]:
    """Subresultant polynomials S_0..S_{deg g} (S_0 is the resultant).

    Requires deg_var f >= deg_var g >= 0 after an internal swap; defective
    degree jumps are filled with the standard lc-power correction.
    """
    if f.degree(var) < g.degree(var):
        f, g = g, f
    if g.is_zero() or g.degree(var) < 0:
        return []
    if g.degree(var) == 0:
        # Res(f, c) = c^(deg f)
        return [g ** f.degree(var)]
    prs = subresultant_prs(f, g, var)
    out: List[Poly] = [Poly() for _ in range(g.degree(var) + 1)]
    for i in range(2, len(prs)):
        prev, cur = prs[i - 1], prs[i]
        out[prev.degree(var) - 1] = cur
        jump = prev.degree(var) - cur.degree(var) - 1
        if jump > 0:
            out[cur.degree(var)] = cur * cur.leading_coeff(var) ** jump
    head_jump = f.degree(var) - g.degree(var) - 1
    out[g.degree(var)] = g * g.leading_coeff(var) ** head_jump if head_jump > 0 else g
    return out


def psc_chain(f: Poly, g: Poly, var) -> List[Poly]:
    """Principal subresultant coefficients psc_0, psc_1, ... of (f, g)."""
    subs = subresultant_polys(f, g, var)
    return [s.coeff_in(var, j) for j, s in enumerate(subs)]


def resultant(f: Poly, g: Poly, var) -> Poly:
    """Resultant with respect to one variable."""
    deg_f, deg_g = f.degree(var), g.degree(var)
    if deg_f < 1 and deg_g < 1:
        raise ValueError("resultant needs positive degree in the variable")
    if deg_f < deg_g:
        res = resultant(g, f, var)
        return -res if (deg_f * deg_g) % 2 else res
    if deg_g < 1:
        if g.is_zero():
            return Poly()
        return g ** deg_f
    prs = subresultant_prs(f, g, var)
    last = prs[-1]
    if last.degree(var) > 0:
        return Poly()
    # Normalize the tail of the PRS to the true resultant S_0.
    prev = prs[-2]
    jump = prev.degree(var) - 1
    return last * last.leading_coeff(var) ** jump if jump > 0 else last


def squarefree_part(f: Poly) -> Poly:
    """Product of the distinct irreducible factors of f (char 0)."""
    if f.is_zero() or f.is_constant():
        return f.int_normalized() if not f.is_zero() else f
    out = f
    for var in sorted(f.variables()):
        d = out.diff(var)
        if d.is_zero():
            continue
        g = gcd(out, d)
        if not g.is_constant():
            out = exact_div(out, g)
    return out.int_normalized()


def coprime_squarefree_basis(polys: Sequence[Poly]) -> List[Poly]:
    """Pairwise-coprime squarefree polynomials generating the same zero sets."""
    basis: List[Poly] = []
    queue = [squarefree_part(p).int_normalized() for p in polys
             if not p.is_zero() and not p.is_constant()]
    while queue:
        p = queue.pop()
        if p.is_constant():
            continue
        split = False
        for i, q in enumerate(basis):
            h = gcd(p, q)
            if not h.is_constant():
                basis.pop(i)
                for part in (exact_div(q, h), h):
                    if not part.is_constant():
                        queue.append(part.int_normalized())
                rest = exact_div(p, h)
                if not rest.is_constant():
                    queue.append(rest.int_normalized())
                split = True
                break
        if not split:
            basis.append(p)
    return sorted(basis, key=lambda p: sorted(map(_mono_sort_key, p.terms)))
