"""Ideal-file grammar and polynomial pretty-printing.

File format:

    ring QQ[x1, x2]        # header: QQ or F<odd prime>, then variable list
    x1^2                   # one polynomial per line
    x1*x2 - 1/2*x2^2       # rational literals are a/b, multiplication is
                           # always explicit, ^ takes a nonnegative integer

`#` starts a comment. Parse errors carry 1-based line:column positions.
The printer emits exactly this grammar, so parse(print(I)) == I.
"""

import re

from .errors import DomainError, IdealParseError
from .field import GF, QQ, Field
from .ring import Polynomial, RingContext

_TOKEN_RE = re.compile(
    r"""
    (?P<int>\d+)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*^()\[\],/])
  | (?P<ws>[ \t]+)
  | (?P<bad>.)
    """,
    re.VERBOSE,
)


class _Token:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind, text, line, col):
        self.kind = kind
        self.text = text
        self.line = line
        self.col = col


def _tokenize_line(text, line_no):
    tokens = []
    comment = text.find("#")
    if comment >= 0:
        text = text[:comment]
    for m in _TOKEN_RE.finditer(text):
        kind = m.lastgroup
        if kind == "ws":
            continue
        if kind == "bad":
            raise IdealParseError(f"unexpected character {m.group()!r}", line_no, m.start() + 1)
        tokens.append(_Token(kind, m.group(), line_no, m.start() + 1))
    return tokens


class _ExprParser:
    """Recursive descent over one line of tokens."""

    def __init__(self, tokens, ring, line_no):
        self.tokens = tokens
        self.ring = ring
        self.line = line_no
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def advance(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def error(self, message, tok=None):
        col = tok.col if tok is not None else (self.tokens[-1].col + len(self.tokens[-1].text))
        raise IdealParseError(message, self.line, col)

    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok is not None:
            self.error(f"unexpected {tok.text!r}", tok)
        return value

    def expr(self):
        tok = self.peek()
        if tok is not None and tok.kind == "op" and tok.text in "+-":
            self.advance()
            value = self.term()
            if tok.text == "-":
                value = -value
        else:
            value = self.term()
        while True:
            tok = self.peek()
            if tok is None or tok.kind != "op" or tok.text not in "+-":
                return value
            self.advance()
            rhs = self.term()
            value = value + rhs if tok.text == "+" else value - rhs

    def term(self):
        value = self.power()
        while True:
            tok = self.peek()
            if tok is None or tok.kind != "op" or tok.text != "*":
                return value
            self.advance()
            value = value * self.power()

    def power(self):
        base = self.factor()
        tok = self.peek()
        if tok is not None and tok.kind == "op" and tok.text == "^":
            self.advance()
            exp_tok = self.peek()
            if exp_tok is None or exp_tok.kind != "int":
                self.error("expected a nonnegative integer exponent after '^'",
                           exp_tok if exp_tok is not None else tok)
            self.advance()
            return base ** int(exp_tok.text)
        return base

    def factor(self):
        tok = self.peek()
        if tok is None:
            self.error("unexpected end of expression")
        if tok.kind == "int":
            self.advance()
            num = int(tok.text)
            nxt = self.peek()
            if nxt is not None and nxt.kind == "op" and nxt.text == "/":
                self.advance()
                den_tok = self.peek()
                if den_tok is None or den_tok.kind != "int":
                    self.error("expected an integer denominator after '/'", nxt)
                self.advance()
                if int(den_tok.text) == 0:
                    self.error("zero denominator", den_tok)
                try:
                    c = self.ring.field.from_fraction(num, int(den_tok.text))
                except DomainError as exc:
                    raise IdealParseError(str(exc), self.line, den_tok.col) from exc
                return self.ring.constant(c)
            return self.ring.constant(num)
        if tok.kind == "name":
            self.advance()
            try:
                idx = self.ring.var_names.index(tok.text)
            except ValueError:
                self.error(f"unknown variable {tok.text!r}", tok)
            return self.ring.var(idx)
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            value = self.expr()
            close = self.peek()
            if close is None or close.kind != "op" or close.text != ")":
                self.error("expected ')'", close if close is not None else tok)
            self.advance()
            return value
        self.error(f"unexpected {tok.text!r}", tok)


def _parse_header(tokens, line_no):
    if not tokens or tokens[0].kind != "name" or tokens[0].text != "ring":
        raise IdealParseError("file must start with a 'ring' header", line_no, 1)
    if len(tokens) < 2 or tokens[1].kind != "name":
        raise IdealParseError("expected a field (QQ or F<p>) after 'ring'", line_no,
                              tokens[0].col + len(tokens[0].text))
    field_tok = tokens[1]
    if field_tok.text == "QQ":
        field = QQ
    elif re.fullmatch(r"F\d+", field_tok.text):
        p = int(field_tok.text[1:])
        if p == 2:
            raise IdealParseError("characteristic 2 is not supported", line_no, field_tok.col)
        try:
            field = GF(p)
        except DomainError as exc:
            raise IdealParseError(str(exc), line_no, field_tok.col) from exc
    else:
        raise IdealParseError(f"unknown field {field_tok.text!r}", line_no, field_tok.col)

    rest = tokens[2:]
    if not rest or rest[0].text != "[":
        raise IdealParseError("expected '[' after the field", line_no,
                              field_tok.col + len(field_tok.text))
    names = []
    expect_name = True
    for tok in rest[1:]:
        if expect_name:
            if tok.kind != "name":
                raise IdealParseError("expected a variable name", tok.line, tok.col)
            names.append(tok.text)
            expect_name = False
        else:
            if tok.text == ",":
                expect_name = True
            elif tok.text == "]":
                if tok is not rest[-1]:
                    raise IdealParseError("unexpected text after ']'", tok.line, tok.col)
                try:
                    return RingContext(field, names)
                except DomainError as exc:
                    raise IdealParseError(str(exc), line_no, tok.col) from exc
            else:
                raise IdealParseError("expected ',' or ']'", tok.line, tok.col)
    last = rest[-1]
    raise IdealParseError("unterminated variable list", line_no, last.col + len(last.text))


def parse_ideal_file(text: str):
    """Parse an ideal file into (RingContext, [Polynomial]).

    The polynomial list preserves the order of the body lines; zero
    polynomials (lines like `0`) are kept so callers can decide how to
    strip them."""
    ring = None
    polys = []
    saw_body = False
    for line_no, raw in enumerate(text.splitlines(), start=1):
        tokens = _tokenize_line(raw, line_no)
        if not tokens:
            continue
        if ring is None:
            ring = _parse_header(tokens, line_no)
            continue
        polys.append(_ExprParser(tokens, ring, line_no).parse())
        saw_body = True
    if ring is None:
        raise IdealParseError("empty file: missing 'ring' header", 1, 1)
    if not saw_body:
        raise IdealParseError("empty body: no polynomials after the header", 1, 1)
    return ring, polys


# -- printing -----------------------------------------------------------


def _coefficient_to_string(field: Field, c) -> str:
    if field.p:
        return str(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _monomial_to_string(ring: RingContext, exponents) -> str:
    parts = []
    for name, k in zip(ring.var_names, exponents):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def polynomial_to_string(f: Polynomial) -> str:
    if f.is_zero:
        return "0"
    field = f.ring.field
    one = field.one
    chunks = []
    for i, (e, c) in enumerate(f._sorted_items()):
        mono = _monomial_to_string(f.ring, e)
        neg = (field.p == 0) and c < 0
        mag = -c if neg else c
        if not mono:
            body = _coefficient_to_string(field, mag)
        elif mag == one:
            body = mono
        else:
            body = f"{_coefficient_to_string(field, mag)}*{mono}"
        if i == 0:
            chunks.append(f"-{body}" if neg else body)
        else:
            chunks.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(chunks)


def ring_to_string(ring: RingContext) -> str:
    return f"ring {ring.field}[{', '.join(ring.var_names)}]"


def ideal_to_text(ring: RingContext, polys) -> str:
    lines = [ring_to_string(ring)]
    lines.extend(polynomial_to_string(f) for f in polys)
    return "\n".join(lines) + "\n"
