"""Exact sparse multivariate polynomial arithmetic over the rationals.

A polynomial is a mapping from monomials to nonzero Fraction coefficients.
A monomial is a tuple of (variable, exponent) pairs, sorted by variable,
with all exponents >= 1; the empty tuple is the constant monomial.  The
zero polynomial is the empty mapping.

Variables are arbitrary hashable, totally ordered keys.  Plain algebraic
polynomials use string names ("x", "y_0_1"); differential polynomials use
JetVar keys (see diffpoly).  All arithmetic is exact; no floats anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, Iterator, Mapping, Tuple

Monomial = Tuple[Tuple[Any, int], ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps: Dict[Any, int] = dict(a)
    for var, e in b:
        exps[var] = exps.get(var, 0) + e
    return tuple(sorted(exps.items()))


def _mono_sort_key(mono: Monomial):
    # Canonical term order: compare by variables/exponents from the highest
    # variable down.  Used for deterministic printing and iteration.
    return tuple(sorted(mono, reverse=True))


class Poly:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        clean: Dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    clean[mono] = coeff
        self.terms = clean
        self._hash = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> Poly:
        return Poly()

    @staticmethod
    def const(value) -> Poly:
        value = Fraction(value)
        return Poly({(): value}) if value else Poly()

    @staticmethod
    def var(key, exp: int = 1) -> Poly:
        if exp < 0:
            raise ValueError("negative exponent")
        if exp == 0:
            return Poly.const(1)
        return Poly({((key, exp),): _ONE})

    @staticmethod
    def _coerce(value) -> Poly:
        if isinstance(value, Poly):
            return value
        return Poly.const(value)

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not mono for mono in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self.terms.get((), _ZERO)

    def variables(self) -> set:
        seen = set()
        for mono in self.terms:
            for var, _ in mono:
                seen.add(var)
        return seen

    def degree(self, var) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        best = 0
        for mono in self.terms:
            for v, e in mono:
                if v == var and e > best:
                    best = e
        return best

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max((sum(e for _, e in mono) for mono in self.terms), default=0)

    def sorted_terms(self) -> list:
        """Terms in canonical (descending) order."""
        return sorted(self.terms.items(), key=lambda t: _mono_sort_key(t[0]), reverse=True)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other) -> Poly:
        other = Poly._coerce(other)
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            acc = out.get(mono, _ZERO) + coeff
            if acc:
                out[mono] = acc
            else:
                out.pop(mono, None)
        result = Poly.__new__(Poly)
        result.terms = out
        result._hash = None
        return result

    __radd__ = __add__

    def __neg__(self) -> Poly:
        result = Poly.__new__(Poly)
        result.terms = {mono: -coeff for mono, coeff in self.terms.items()}
        result._hash = None
        return result

    def __sub__(self, other) -> Poly:
        return self + (-Poly._coerce(other))

    def __rsub__(self, other) -> Poly:
        return Poly._coerce(other) + (-self)

    def __mul__(self, other) -> Poly:
        other = Poly._coerce(other)
        if not self.terms or not other.terms:
            return Poly()
        out: Dict[Monomial, Fraction] = {}
        for mono_a, ca in self.terms.items():
            for mono_b, cb in other.terms.items():
                mono = _mono_mul(mono_a, mono_b)
                acc = out.get(mono, _ZERO) + ca * cb
                if acc:
                    out[mono] = acc
                else:
                    out.pop(mono, None)
        result = Poly.__new__(Poly)
        result.terms = out
        result._hash = None
        return result

    __rmul__ = __mul__

    def __pow__(self, exp: int) -> Poly:
        if exp < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1)
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base if exp > 1 else base
            exp >>= 1
        return result

    def scale(self, factor) -> Poly:
        factor = Fraction(factor)
        if not factor:
            return Poly()
        result = Poly.__new__(Poly)
        result.terms = {mono: coeff * factor for mono, coeff in self.terms.items()}
        result._hash = None
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == Poly.const(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- structure in one variable -------------------------------------------

    def coeffs_in(self, var) -> Dict[int, Poly]:
        """View as a univariate polynomial in ``var``: degree -> coefficient."""
        out: Dict[int, Dict[Monomial, Fraction]] = {}
        for mono, coeff in self.terms.items():
            deg = 0
            rest = []
            for v, e in mono:
                if v == var:
                    deg = e
                else:
                    rest.append((v, e))
            bucket = out.setdefault(deg, {})
            key = tuple(rest)
            acc = bucket.get(key, _ZERO) + coeff
            if acc:
                bucket[key] = acc
            else:
                bucket.pop(key, None)
        return {deg: Poly(bucket) for deg, bucket in out.items() if bucket}

    def coeff_in(self, var, deg: int) -> Poly:
        return self.coeffs_in(var).get(deg, Poly())

    def leading_coeff(self, var) -> Poly:
        deg = self.degree(var)
        if deg <= 0:
            return self
        return self.coeff_in(var, deg)

    def reductum(self, var) -> Poly:
        """Drop the leading term with respect to ``var``."""
        deg = self.degree(var)
        if deg <= 0:
            return Poly()
        return self - self.coeff_in(var, deg) * Poly.var(var, deg)

    def diff(self, var) -> Poly:
        """Partial derivative with respect to one variable."""
        out: Dict[Monomial, Fraction] = {}
        for mono, coeff in self.terms.items():
            for i, (v, e) in enumerate(mono):
                if v != var:
                    continue
                if e == 1:
                    new = mono[:i] + mono[i + 1:]
                else:
                    new = mono[:i] + ((v, e - 1),) + mono[i + 1:]
                acc = out.get(new, _ZERO) + coeff * e
                if acc:
                    out[new] = acc
                else:
                    out.pop(new, None)
        return Poly(out)

    # -- substitution and evaluation ------------------------------------------

    def subs(self, mapping: Mapping[Any, Any]) -> Poly:
        """Substitute polynomials or rationals for variables (exact)."""
        cache: Dict[Tuple[Any, int], Poly] = {}

        def power(var, exp) -> Poly:
            key = (var, exp)
            if key not in cache:
                repl = mapping[var]
                cache[key] = Poly._coerce(repl) ** exp
            return cache[key]

        result = Poly()
        for mono, coeff in self.terms.items():
            term = Poly.const(coeff)
            for var, e in mono:
                if var in mapping:
                    term = term * power(var, e)
                else:
                    term = term * Poly.var(var, e)
            result = result + term
        return result

    def evaluate(self, assignment: Mapping[Any, Fraction]) -> Fraction:
        """Evaluate at a full rational point; missing variables raise."""
        total = _ZERO
        for mono, coeff in self.terms.items():
            value = coeff
            for var, e in mono:
                if var not in assignment:
                    raise KeyError(f"missing assignment for {var!r}")
                value *= Fraction(assignment[var]) ** e
            total += value
        return total

    def rename(self, mapping: Mapping[Any, Any]) -> Poly:
        """Rename variables (injective on the occurring ones)."""
        out: Dict[Monomial, Fraction] = {}
        for mono, coeff in self.terms.items():
            new = tuple(sorted((mapping.get(v, v), e) for v, e in mono))
            if len(set(v for v, _ in new)) != len(new):
                raise ValueError("variable renaming collides")
            out[new] = out.get(new, _ZERO) + coeff
        return Poly(out)

    # -- normalization ----------------------------------------------------------

    def int_normalized(self) -> Poly:
        """Scale to coprime integer coefficients with positive leading term."""
        if not self.terms:
            return self
        from math import gcd
        denom = 1
        for coeff in self.terms.values():
            denom = denom * coeff.denominator // gcd(denom, coeff.denominator)
        numer = 0
        for coeff in self.terms.values():
            numer = gcd(numer, abs(coeff.numerator * (denom // coeff.denominator)))
        factor = Fraction(denom, numer if numer else 1)
        scaled = self.scale(factor)
        lead = scaled.sorted_terms()[0][1]
        if lead < 0:
            scaled = -scaled
        return scaled

    def __repr__(self) -> str:
        from codfkit.formula.printer import render_poly
        return f"Poly({render_poly(self)})"
