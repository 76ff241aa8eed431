"""Text grammar for forms in x, y, z.

    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := power (['*'|'/'] power)*        # juxtaposition multiplies
    power   := atom ('^' INT | '**' INT)*
    atom    := NUMBER | 'x' | 'y' | 'z' | '(' expr ')'

Juxtaposition is implicit multiplication, so ``2x-y``, ``xyz`` and
``x(x+y-z)(x-y+z)`` are all accepted as written in the literature. Division
is only allowed by a nonzero constant. The Unicode minus sign is accepted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import HomPoly, InhomogeneousError, LinearForm, VARS

Poly = dict  # exponent triple -> Fraction, possibly inhomogeneous


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.position = position


@dataclass
class _Tok:
    kind: str  # num, var, op, end
    value: object
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    text = text.replace("−", "-")
    toks = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            if j < len(text) and text[j] == ".":
                raise ParseError("decimal literals are not exact; use p/q", j, text)
            toks.append(_Tok("num", int(text[i:j]), i))
            i = j
        elif ch in VARS:
            toks.append(_Tok("var", ch, i))
            i += 1
        elif text.startswith("**", i):
            toks.append(_Tok("op", "^", i))
            i += 2
        elif ch in "+-*/^()":
            toks.append(_Tok("op", ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i, text)
    toks.append(_Tok("end", None, len(text)))
    return toks


def _mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for m1, a in p.items():
        for m2, b in q.items():
            m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
            out[m] = out.get(m, 0) + a * b
    return {m: c for m, c in out.items() if c}


def _add(p: Poly, q: Poly, sign: int = 1) -> Poly:
    out = dict(p)
    for m, c in q.items():
        out[m] = out.get(m, 0) + sign * c
    return {m: c for m, c in out.items() if c}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg: str, tok: _Tok | None = None):
        tok = tok or self.peek()
        raise ParseError(msg, tok.pos, self.text)

    def starts_atom(self) -> bool:
        t = self.peek()
        return t.kind in ("num", "var") or (t.kind == "op" and t.value == "(")

    def expr(self) -> list[list[Poly]]:
        """Sum of terms; each term kept as its list of factors."""
        terms = []
        sign = 1
        t = self.peek()
        if t.kind == "op" and t.value in "+-":
            self.take()
            sign = -1 if t.value == "-" else 1
        terms.append(self.term(sign))
        while True:
            t = self.peek()
            if t.kind == "op" and t.value in "+-":
                self.take()
                terms.append(self.term(-1 if t.value == "-" else 1))
            else:
                return terms

    def term(self, sign: int) -> list[Poly]:
        factors = [{(0, 0, 0): Fraction(sign)}] if sign < 0 else []
        factors.extend(self.power())
        while True:
            t = self.peek()
            if t.kind == "op" and t.value == "*":
                self.take()
                factors.extend(self.power())
            elif t.kind == "op" and t.value == "/":
                self.take()
                tok = self.peek()
                den = self.power()
                d = _collapse(den)
                if set(d) - {(0, 0, 0)} or not d:
                    self.error("division by a non-constant or zero", tok)
                factors.append({(0, 0, 0): 1 / d[(0, 0, 0)]})
            elif self.starts_atom():
                factors.extend(self.power())
            else:
                return factors

    def power(self) -> list[Poly]:
        base = self.atom()
        while True:
            t = self.peek()
            if t.kind == "op" and t.value == "^":
                self.take()
                e = self.take()
                if e.kind != "num":
                    self.error("exponent must be a nonnegative integer literal", e)
                base = base * e.value if e.value else [{(0, 0, 0): Fraction(1)}]
            else:
                return base

    def atom(self) -> list[Poly]:
        t = self.take()
        if t.kind == "num":
            return [{(0, 0, 0): Fraction(t.value)}]
        if t.kind == "var":
            e = [0, 0, 0]
            e[VARS.index(t.value)] = 1
            return [{tuple(e): Fraction(1)}]
        if t.kind == "op" and t.value == "(":
            inner = self.expr()
            close = self.take()
            if close.kind != "op" or close.value != ")":
                self.error("expected ')'", close)
            return [_sum_terms(inner)]
        self.error("expected a number, variable or '('", t)


def _collapse(factors: list[Poly]) -> Poly:
    out: Poly = {(0, 0, 0): Fraction(1)}
    for f in factors:
        out = _mul(out, f)
    return out


def _sum_terms(terms: list[list[Poly]]) -> Poly:
    out: Poly = {}
    for t in terms:
        out = _add(out, _collapse(t))
    return out


def _run(text: str) -> list[list[Poly]]:
    p = _Parser(text)
    if p.peek().kind == "end":
        p.error("empty expression")
    terms = p.expr()
    if p.peek().kind != "end":
        p.error("unexpected token")
    return terms


def _homogeneous(poly: Poly) -> HomPoly:
    degrees = sorted({sum(m) for m in poly})
    if not degrees:
        return HomPoly.zero(0)
    if len(degrees) > 1:
        raise InhomogeneousError(degrees[0], degrees[1])
    return HomPoly(degrees[0], poly)


def parse(text: str) -> HomPoly:
    """Parse and expand a homogeneous polynomial."""
    return _homogeneous(_sum_terms(_run(text)))


def parse_linear_factors(text: str) -> list[LinearForm] | None:
    """Linear factors of a single-product expression, in order of appearance.

    Returns ``None`` when the expression is not one product of linear forms
    (constants are dropped). Repeated factors are returned as repeated, so
    callers can detect a non-reduced input.
    """
    terms = _run(text)
    if len(terms) != 1:
        try:
            whole = _homogeneous(_sum_terms(terms))
        except InhomogeneousError:
            return None
        return [LinearForm.of(whole)] if whole.degree == 1 else None
    out = []
    for f in terms[0]:
        try:
            h = _homogeneous(f)
        except InhomogeneousError:
            return None
        if h.degree == 0:
            continue
        if h.degree != 1:
            return None
        out.append(LinearForm.of(h))
    return out
