"""Text forms of field elements, polynomials and places.

Elements of F_{p^n} are written in the power basis of ``a``, the canonical root of the
field's modulus: ``2a^2+a+1``.  On input ``aK`` is accepted as a shorthand for ``a^K``.

Polynomials have two accepted forms:

* symbolic, e.g. ``T^2+2T+1``, ``T+a2``, ``(a+1)T^3+a`` (``*`` between factors is optional);
* coefficient vectors, constant term first, in brackets: ``[1,2,1]``.  Over extension
  fields a coefficient may itself be a digit vector ``[c0 c1 ...]`` in the basis of ``a``.
"""

import re

from .algebra.poly import Poly
from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|(a)|(T)|(\^)|(\*)|(\+)|(-)|(\()|(\)))")


def format_elem(field, code):
    if field.n == 1:
        return str(code)
    digits = field.digits(code)
    terms = []
    for k in range(field.n - 1, -1, -1):
        c = digits[k]
        if not c:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            mono = "a" if k == 1 else f"a^{k}"
            terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms) if terms else "0"


def format_poly(f):
    F = f.field
    if f.is_zero():
        return "0"
    terms = []
    for k in range(f.deg, -1, -1):
        c = f[k]
        if not c:
            continue
        cs = format_elem(F, c)
        if "+" in cs:
            cs = f"({cs})"
        if k == 0:
            terms.append(cs)
            continue
        mono = "T" if k == 1 else f"T^{k}"
        terms.append(mono if c == 1 else f"{cs}{mono}")
    return "+".join(terms)


def format_place(place):
    return "inf" if place.is_infinite else format_poly(place.poly)


class _Parser:
    def __init__(self, field, text):
        self.field = field
        self.text = text
        self.tokens = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ParseError(f"unexpected character {text[pos]!r} at position {pos} in {self.text!r}",
                                 token=text[pos], position=pos,
                                 expected="digit, 'a', 'T', '^', '*', '+', '-', '(' or ')'")
            kind = m.lastindex
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def fail(self, expected):
        kind, val, pos = self.peek()
        shown = "end of input" if kind is None else repr(val)
        raise ParseError(f"expected {expected} at position {pos} in {self.text!r}, found {shown}",
                         token=val, position=pos, expected=expected)

    def parse(self):
        if not self.tokens:
            self.fail("a polynomial")
        value = self.expression()
        if self.peek()[0] is not None:
            self.fail("'+', '-' or end of input")
        return value

    def expression(self):
        F = self.field
        sign = 1
        if self.peek()[0] in (6, 7):
            sign = -1 if self.take()[0] == 7 else 1
        value = self.term()
        if sign < 0:
            value = -value
        while self.peek()[0] in (6, 7):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == 6 else value - rhs
        return value if isinstance(value, Poly) else Poly.const(F, value)

    def term(self):
        value = self.factor()
        while True:
            kind = self.peek()[0]
            if kind == 5:
                self.take()
                value = value * self.factor()
            elif kind in (1, 2, 3, 8):
                value = value * self.factor()
            else:
                return value

    def exponent(self):
        kind, val, _ = self.peek()
        if kind == 4:
            self.take()
            kind, val, _ = self.peek()
            if kind != 1:
                self.fail("an exponent")
        if kind == 1:
            self.take()
            return int(val)
        return 1

    def factor(self):
        F = self.field
        kind, val, pos = self.take()
        if kind == 1:
            return Poly.const(F, F.from_int(int(val)))
        if kind == 2:
            if F.n == 1:
                raise ParseError(f"'a' at position {pos}: the prime field F_{F.p} has no generator "
                                 f"symbol", token="a", position=pos, expected="an integer")
            g = Poly.const(F, F.gen())
            return g ** self.exponent()
        if kind == 3:
            return Poly.T(F) ** self.exponent()
        if kind == 8:
            inner = self.expression()
            if self.take()[0] != 9:
                self.i -= 1
                self.fail("')'")
            if self.peek()[0] == 4:
                # only an explicit caret binds to a group; "(T+1)2" means (T+1)*2
                return inner ** self.exponent()
            return inner
        self.i -= 1
        self.fail("a number, 'a', 'T' or '('")


def parse_poly(field, text):
    text = text.strip()
    if text.startswith("["):
        return _parse_vector(field, text)
    return _Parser(field, text).parse()


def parse_elem(field, text):
    f = parse_poly(field, text)
    if f.deg > 0:
        raise ParseError(f"{text!r} is not a constant", token=text, expected="a field element")
    return f[0]


def _parse_vector(field, text):
    if not text.endswith("]"):
        raise ParseError(f"unterminated coefficient vector {text!r}", token=text,
                         position=len(text), expected="']'")
    body = text[1:-1]
    entries = split_top_level(body, ",") if body.strip() else []
    codes = []
    for entry in entries:
        entry = entry.strip()
        if entry.startswith("["):
            digits = entry[1:-1].split()
            if not entry.endswith("]") or len(digits) > field.n or not all(d.isdigit() for d in digits):
                raise ParseError(f"bad coefficient {entry!r}", token=entry,
                                 expected=f"[c0 ... c{field.n - 1}] with integer digits")
            codes.append(field.from_digits(int(d) for d in digits))
        else:
            codes.append(parse_elem(field, entry))
    return Poly(field, codes)


def split_top_level(text, sep=","):
    """Split on ``sep`` outside brackets and parentheses."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return out


def parse_place(field, text):
    from .places import Place
    text = text.strip()
    if text.lower() in ("inf", "infinity", "oo"):
        return Place.infinity(field)
    return Place.finite(parse_poly(field, text))
