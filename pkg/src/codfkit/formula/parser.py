"""Recursive-descent parser for the formula grammar.

Grammar (whitespace insignificant):

    formula   := quantified | disjunction
    quantified:= ('E' | 'A') NAME '.' formula
    disjunction := conjunction ('|' conjunction)*
    conjunction := negation ('&' negation)*
    negation  := '~' negation | '(' formula ')' | atom | 'true' | 'false'
    atom      := arith REL arith          REL in = != < <= > >=
    arith     := term (('+'|'-') term)*
    term      := factor ('*' factor)*
    factor    := '-' factor | power
    power     := primary ('^' INT)?
    primary   := RATIONAL | variable | '(' arith ')'
    variable  := NAME "'"* | 'D' INT? '(' NAME ')'

Variables are [a-z][a-zA-Z0-9_]*; rationals are INT or INT/INT.  Parsed
atoms are differential (JetVar keys); order-0-only formulas convert to the
algebraic dialect with as_algebraic.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, NamedTuple

from codfkit.algebra.diffpoly import JetVar
from codfkit.algebra.poly import Poly
from codfkit.errors import ParseError
from .ast import (
    FALSE,
    TRUE,
    Atom,
    Formula,
    Not,
    Quantifier,
    conj,
    disj,
)

_TOKEN_RE = re.compile(r"""
    (?P<ws>\s+)
  | (?P<dname>D[0-9]*(?=\())
  | (?P<quant>[EA](?=\s|\())
  | (?P<name>[a-z][a-zA-Z0-9_]*)
  | (?P<int>[0-9]+)
  | (?P<op><=|>=|!=|[=<>~&|().,^*+'/-])
""", re.VERBOSE)


class Token(NamedTuple):
    kind: str
    text: str
    column: int


def _tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if not match:
            raise ParseError(f"unexpected character {text[pos]!r}", column=pos + 1)
        kind = match.lastgroup
        if kind != "ws":
            tokens.append(Token(kind, match.group(), pos + 1))
        pos = match.end()
    eof_col = len(text.rstrip()) + 1
    tokens.append(Token("eof", "", eof_col))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.next()
        if tok.text != text:
            raise ParseError(f"expected {text!r}, found {tok.text!r}" if tok.text
                             else f"expected {text!r}", column=tok.column)
        return tok

    def fail(self, message: str):
        tok = self.peek()
        raise ParseError(message, column=tok.column)

    # formula levels ------------------------------------------------------

    def parse_formula(self) -> Formula:
        tok = self.peek()
        if tok.kind == "quant":
            self.next()
            name = self.next()
            if name.kind != "name":
                raise ParseError("expected a variable after quantifier", column=name.column)
            self.expect(".")
            body = self.parse_formula()
            kind = "exists" if tok.text == "E" else "forall"
            return Quantifier(kind, name.text, body)
        return self.parse_disjunction()

    def parse_disjunction(self) -> Formula:
        parts = [self.parse_conjunction()]
        while self.peek().text == "|":
            self.next()
            parts.append(self.parse_conjunction())
        return disj(*parts)

    def parse_conjunction(self) -> Formula:
        parts = [self.parse_negation()]
        while self.peek().text == "&":
            self.next()
            parts.append(self.parse_negation())
        return conj(*parts)

    def parse_negation(self) -> Formula:
        tok = self.peek()
        if tok.text == "~":
            self.next()
            return Not(self.parse_negation())
        if tok.kind == "quant":
            return self.parse_formula()
        if tok.text == "true":
            self.next()
            return TRUE
        if tok.text == "false":
            self.next()
            return FALSE
        if tok.text == "(":
            # Could be a parenthesized formula or a parenthesized arithmetic
            # expression starting an atom; backtrack on relation symbols.
            save = self.pos
            self.next()
            inner = self.parse_formula()
            self.expect(")")
            if self.peek().text in ("=", "!=", "<", "<=", ">", ">="):
                self.pos = save
                return self.parse_atom()
            return inner
        return self.parse_atom()

    def parse_atom(self) -> Formula:
        lhs = self.parse_arith()
        tok = self.next()
        if tok.text not in ("=", "!=", "<", "<=", ">", ">="):
            raise ParseError("expected a relation", column=tok.column)
        rhs = self.parse_arith()
        return Atom(lhs - rhs, tok.text)

    # arithmetic levels -----------------------------------------------------

    def parse_arith(self) -> Poly:
        value = self.parse_term()
        while self.peek().text in ("+", "-"):
            op = self.next().text
            term = self.parse_term()
            value = value + term if op == "+" else value - term
        return value

    def parse_term(self) -> Poly:
        value = self.parse_factor()
        while self.peek().text == "*":
            self.next()
            value = value * self.parse_factor()
        return value

    def parse_factor(self) -> Poly:
        if self.peek().text == "-":
            self.next()
            return -self.parse_factor()
        return self.parse_power()

    def parse_power(self) -> Poly:
        base = self.parse_primary()
        if self.peek().text == "^":
            self.next()
            tok = self.next()
            if tok.kind != "int":
                raise ParseError("expected an integer exponent", column=tok.column)
            return base ** int(tok.text)
        return base

    def parse_primary(self) -> Poly:
        tok = self.next()
        if tok.kind == "int":
            value = Fraction(int(tok.text))
            if self.peek().text == "/":
                self.next()
                den = self.next()
                if den.kind != "int" or int(den.text) == 0:
                    raise ParseError("expected a nonzero integer denominator",
                                     column=den.column)
                value /= int(den.text)
            return Poly.const(value)
        if tok.kind == "dname":
            order = int(tok.text[1:]) if len(tok.text) > 1 else 1
            self.expect("(")
            name = self.next()
            if name.kind != "name":
                raise ParseError("expected a variable inside D(...)", column=name.column)
            self.expect(")")
            return Poly.var(JetVar(name.text, order))
        if tok.kind == "name":
            order = 0
            while self.peek().text == "'":
                self.next()
                order += 1
            return Poly.var(JetVar(tok.text, order))
        if tok.text == "(":
            value = self.parse_arith()
            self.expect(")")
            return value
        raise ParseError("expected a term" if tok.text else "unexpected end of input",
                         column=tok.column)


def parse(text: str) -> Formula:
    """Parse a formula; atoms are differential polynomials in JetVar keys."""
    parser = _Parser(text)
    formula = parser.parse_formula()
    tok = parser.peek()
    if tok.kind != "eof":
        raise ParseError(f"unexpected trailing input {tok.text!r}", column=tok.column)
    return _normalize_binding(formula)


def _normalize_binding(formula: Formula, taken=None) -> Formula:
    """Rename shadowed quantifier variables so scopes never collide."""
    from .ast import And, Or, map_atoms

    def walk(node, bound, renames):
        if isinstance(node, Quantifier):
            name = node.var
            if name in bound:
                fresh = name
                k = 1
                while fresh in bound:
                    fresh = f"{name}_{k}"
                    k += 1
                inner = dict(renames)
                inner[name] = fresh
                body = walk(node.body, bound | {fresh}, inner)
                return Quantifier(node.kind, fresh, body)
            return Quantifier(node.kind, name, walk(node.body, bound | {name}, renames))
        if isinstance(node, Not):
            return Not(walk(node.arg, bound, renames))
        if isinstance(node, And):
            return conj(*(walk(a, bound, renames) for a in node.args))
        if isinstance(node, Or):
            return disj(*(walk(a, bound, renames) for a in node.args))
        if isinstance(node, Atom) and renames:
            mapping = {}
            for var in node.poly.variables():
                if var.name in renames:
                    mapping[var] = JetVar(renames[var.name], var.order)
            if mapping:
                return Atom(node.poly.rename(mapping), node.rel)
        return node

    return walk(formula, set(), {})


def parse_poly(text: str) -> Poly:
    """Parse a bare polynomial expression (differential dialect)."""
    parser = _Parser(text)
    poly = parser.parse_arith()
    tok = parser.peek()
    if tok.kind != "eof":
        raise ParseError(f"unexpected trailing input {tok.text!r}", column=tok.column)
    return poly


def as_algebraic(formula_or_poly):
    """Convert order-0 differential objects to the flat (string-keyed) dialect."""
    from .ast import map_atoms

    def fix_poly(poly: Poly) -> Poly:
        mapping = {}
        for var in poly.variables():
            if isinstance(var, JetVar):
                if var.order != 0:
                    raise ValueError(f"derivative {var!r} in an algebraic context")
                mapping[var] = var.name
        return poly.rename(mapping)

    if isinstance(formula_or_poly, Poly):
        return fix_poly(formula_or_poly)
    return map_atoms(formula_or_poly, lambda a: Atom(fix_poly(a.poly), a.rel))
