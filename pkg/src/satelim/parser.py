"""Polynomial expressions and ``.ideal`` problem files.

Polynomial grammar (no parentheses)::

    poly  := ['-'] term (('+' | '-') term)*
    term  := coeff ['*'] monos | coeff | monos
    monos := var ['^' nat] ('*' var ['^' nat])*
    coeff := nat | nat '/' nat

A vector is written ``[poly, poly, ...]``.

Problem files are line oriented::

    # comment
    field QQ            (or: field Fp 32003)
    vars b1,b2,b3,t
    elim t              (optional; default: every variable is eliminable)
    order degrevlex     (optional)
    gens:
    b1 - t
    ...
"""

from __future__ import annotations

import re
import dataclasses
from dataclasses import dataclass
from pathlib import Path

from .coeff import QQ, FieldSpec
from .errors import ParseError, SatelimError
from .orders import parse_order
from .polyring import MAX_EXPONENT, RingSpec, VectorPoly

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|([-+*/^\[\],])|(\S))")


def _tokenize(text, line=None, offset=0):
    tokens = []
    pos = 0
    text = text.replace("−", "-")
    n = len(text.rstrip())
    while pos < n:
        m = _TOKEN_RE.match(text, pos)
        num, name, op, bad = m.groups()
        col = m.start(m.lastindex) + 1 + offset
        if bad is not None:
            raise ParseError(f"unexpected character {bad!r}", line, col)
        if num is not None:
            tokens.append(("num", num, col))
        elif name is not None:
            tokens.append(("var", name, col))
        else:
            tokens.append(("op", op, col))
        pos = m.end()
    tokens.append(("end", "", n + 1 + offset))
    return tokens


class _Parser:
    def __init__(self, tokens, ring, line):
        self.tokens = tokens
        self.i = 0
        self.ring = ring
        self.line = line

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, self.line, tok[2])

    def expect_op(self, op):
        tok = self.next()
        if tok != ("op", op, tok[2]):
            raise self.error(f"expected {op!r}", tok)

    def poly(self):
        ring = self.ring
        F = ring.field
        acc = {}
        neg = False
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "-":
            self.next()
            neg = True
        while True:
            exps, c = self.term()
            if neg:
                c = F.neg(c)
            old = acc.get(exps)
            acc[exps] = c if old is None else F.add(old, c)
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.next()
                neg = tok[1] == "-"
                continue
            break
        return ring.from_terms((m, c) for m, c in acc.items() if c)

    def term(self):
        F = self.ring.field
        tok = self.peek()
        if tok[0] == "num":
            c = self.coeff()
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "*":
                self.next()
                if self.peek()[0] != "var":
                    raise self.error("expected a variable after '*'")
                return self.monos(), c
            if nxt[0] == "var":
                return self.monos(), c
            return (0,) * self.ring.nvars, c
        if tok[0] == "var":
            return self.monos(), F.one
        if tok[0] == "end":
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected {tok[1]!r}")

    def coeff(self):
        F = self.ring.field
        num = int(self.next()[1])
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "/":
            self.next()
            den = self.next()
            if den[0] != "num":
                raise self.error("expected a denominator", den)
            try:
                return F.from_fraction(num, int(den[1]))
            except SatelimError as exc:
                raise ParseError(str(exc), self.line, den[2]) from None
        return F.from_int(num)

    def monos(self):
        ring = self.ring
        exps = [0] * ring.nvars
        while True:
            tok = self.next()
            if tok[0] != "var":
                raise self.error("expected a variable", tok)
            try:
                i = ring.vars.index(tok[1])
            except ValueError:
                raise self.error(f"unknown identifier {tok[1]!r}", tok) from None
            e = 1
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "^":
                self.next()
                etok = self.next()
                if etok[0] != "num":
                    raise self.error("malformed exponent", etok)
                e = int(etok[1])
            exps[i] += e
            if exps[i] >= MAX_EXPONENT:
                raise self.error(f"exponent exceeds {MAX_EXPONENT - 1}", tok)
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "*":
                self.next()
                continue
            return tuple(exps)

    def vector(self):
        self.expect_op("[")
        comps = [self.poly()]
        while self.peek()[:2] == ("op", ","):
            self.next()
            comps.append(self.poly())
        self.expect_op("]")
        return VectorPoly(self.ring, comps)

    def finish(self):
        tok = self.peek()
        if tok[0] != "end":
            raise self.error(f"unexpected {tok[1]!r}")


def parse_polynomial(text, ring, line=None):
    """Parse ``text`` into a canonical polynomial of ``ring``."""
    if not text.strip():
        raise ParseError("empty polynomial", line, 1)
    p = _Parser(_tokenize(text, line), ring, line)
    f = p.poly()
    p.finish()
    return f


def parse_vector(text, ring, line=None):
    p = _Parser(_tokenize(text, line), ring, line)
    v = p.vector()
    p.finish()
    return v


def parse_element(text, ring, line=None):
    """A polynomial, or a vector when the text starts with ``[``."""
    if text.lstrip().startswith("["):
        return parse_vector(text, ring, line)
    return parse_polynomial(text, ring, line)


@dataclass
class ProblemFile:
    """Parsed ``.ideal`` file; generator texts are kept with line numbers."""

    field: FieldSpec = QQ
    vars: tuple = ()
    elim: tuple | None = None
    order: object = None
    gens: list = dataclasses.field(default_factory=list)
    path: str | None = None

    def ring(self):
        if self.elim is None:
            weights = (1,) * len(self.vars)
        else:
            weights = tuple(1 if v in self.elim else 0 for v in self.vars)
        kwargs = {} if self.order is None else {"order": self.order}
        return RingSpec(self.field, self.vars, weights, **kwargs)

    def elements(self, ring=None):
        ring = ring or self.ring()
        return [parse_element(text, ring, line) for line, text in self.gens]

    def problem(self):
        from .idealops import EliminationProblem
        ring = self.ring()
        return EliminationProblem(ring, self.elements(ring))


def _names(text, line):
    names = tuple(n.strip() for n in text.split(","))
    if not names or any(not re.match(r"[A-Za-z][A-Za-z0-9_]*$", n) for n in names):
        raise ParseError(f"malformed variable list {text.strip()!r}", line)
    return names


def parse_problem(text, path=None):
    prob = ProblemFile(path=path)
    in_gens = False
    seen_vars = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if in_gens:
            prob.gens.append((lineno, line))
            continue
        head, _, rest = line.strip().partition(" ")
        rest = rest.strip()
        if head == "field":
            parts = rest.split()
            if parts == ["QQ"]:
                prob.field = QQ
            elif len(parts) == 2 and parts[0] == "Fp" and parts[1].isdigit():
                try:
                    prob.field = FieldSpec.prime(int(parts[1]))
                except SatelimError as exc:
                    raise ParseError(str(exc), lineno) from None
            else:
                raise ParseError(f"unknown field {rest!r}", lineno)
        elif head == "vars":
            prob.vars = _names(rest, lineno)
            if len(set(prob.vars)) != len(prob.vars):
                raise ParseError("duplicate variable", lineno)
            seen_vars = True
        elif head == "elim":
            if not seen_vars:
                raise ParseError("'elim' before 'vars'", lineno)
            elim = () if not rest else _names(rest, lineno)
            unknown = [v for v in elim if v not in prob.vars]
            if unknown:
                raise ParseError(f"unknown elimination variable {unknown[0]!r}", lineno)
            prob.elim = elim
        elif head == "order":
            prob.order = parse_order(rest)
        elif line.strip() == "gens:":
            if not seen_vars:
                raise ParseError("'gens:' before 'vars'", lineno)
            in_gens = True
        else:
            raise ParseError(f"unknown directive {head!r}", lineno)
    if not seen_vars:
        raise ParseError("missing 'vars' line")
    return prob


def read_problem(path):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_problem(text, str(path))
