"""Text form for monomial ideals.

Grammar (whitespace-insensitive):

    ideal  :=  "vars" ":" name ("," name)* ";" "gens" ":" term ("," term)*
    term   :=  factor ("*" factor)*
    factor :=  name ("^" positive-integer)?

Example: ``vars: x, y, z; gens: x^3, y^3, z^3, x*y*z``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .monomials import Monomial, MonomialIdeal, minimalize


class IdealSyntaxError(ValueError):
    """Carries the character offset of the offending token."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UndeclaredVariable(IdealSyntaxError):
    pass


@dataclass(frozen=True)
class IdealExpr:
    variables: tuple
    ideal: MonomialIdeal


_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
                    r"|(?P<nat>\d+)"
                    r"|(?P<punct>[:;,*^]))")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self):
        m = _TOKEN.match(self.text, self.pos)
        if m is None:
            rest = self.text[self.pos:].lstrip()
            if not rest:
                return None, len(self.text)
            at = len(self.text) - len(rest)
            raise IdealSyntaxError(f"unexpected character {rest[0]!r}", at)
        return m, m.start() + len(m.group(0)) - len(m.group(0).lstrip())

    def next(self):
        m, at = self.peek()
        if m is None:
            raise IdealSyntaxError("unexpected end of input", at)
        self.pos = m.end()
        return m, at

    def expect(self, punct: str, what: str):
        m, at = self.next()
        if m.group("punct") != punct:
            raise IdealSyntaxError(f"expected {what!r}", at)

    def keyword(self, word: str):
        m, at = self.next()
        if m.group("name") != word:
            raise IdealSyntaxError(f"expected keyword {word!r}", at)

    def name(self, what: str):
        m, at = self.next()
        got = m.group("name")
        if got is None:
            raise IdealSyntaxError(f"expected {what}", at)
        return got, at

    def at_end(self) -> bool:
        m, _ = self.peek()
        return m is None


def parse_ideal(text: str) -> IdealExpr:
    """Parse the `vars: ...; gens: ...` form into an IdealExpr.

    Generators need not be minimal; the resulting MonomialIdeal stores
    the minimalized set.
    """
    sc = _Scanner(text)
    sc.keyword("vars")
    sc.expect(":", ":")
    variables = []
    seen = {}
    while True:
        v, at = sc.name("a variable name")
        if v in seen:
            raise IdealSyntaxError(f"duplicate variable {v!r}", at)
        seen[v] = len(variables)
        variables.append(v)
        m, _ = sc.peek()
        if m is not None and m.group("punct") == ",":
            sc.next()
            continue
        break
    sc.expect(";", ";")
    sc.keyword("gens")
    sc.expect(":", ":")

    gens = []
    while True:
        exps = [0] * len(variables)
        while True:
            v, at = sc.name("a variable name")
            if v not in seen:
                raise UndeclaredVariable(f"undeclared variable {v!r}", at)
            power = 1
            m, _ = sc.peek()
            if m is not None and m.group("punct") == "^":
                sc.next()
                tok, nat_at = sc.next()
                if tok.group("nat") is None:
                    raise IdealSyntaxError("expected an exponent", nat_at)
                power = int(tok.group("nat"))
                if power < 1:
                    raise IdealSyntaxError("exponents must be positive", nat_at)
            exps[seen[v]] += power
            m, _ = sc.peek()
            if m is not None and m.group("punct") == "*":
                sc.next()
                continue
            break
        gens.append(Monomial(tuple(exps)))
        m, at = sc.peek()
        if m is not None and m.group("punct") == ",":
            sc.next()
            continue
        break
    if not sc.at_end():
        _, at = sc.peek()
        raise IdealSyntaxError("trailing input after the generator list", at)
    return IdealExpr(tuple(variables), minimalize(len(variables), gens))


def unparse(expr: IdealExpr) -> str:
    """Canonical text for an IdealExpr; parse(unparse(e)) round-trips."""

    def term(m: Monomial) -> str:
        parts = []
        for v, e in zip(expr.variables, m.exponents):
            if e == 1:
                parts.append(v)
            elif e > 1:
                parts.append(f"{v}^{e}")
        return "*".join(parts) if parts else "1"

    vars_part = ", ".join(expr.variables)
    gens_part = ", ".join(term(g) for g in expr.ideal.gens)
    return f"vars: {vars_part}; gens: {gens_part}"
