"""Parsing and canonical printing of polynomial and point expressions.

Grammar (whitespace-insensitive)::

    poly   := [sign] term (sign term)*
    term   := '(' quat ')' tpow? | coef? unit? tpow?   (at least one piece)
    quat   := [sign] qterm (sign qterm)*
    qterm  := coef? unit?                               (at least one piece)
    coef   := INT | INT '/' INT | DECIMAL
    unit   := 'i' | 'j' | 'k'
    tpow   := 't' ('^' INT)?

Examples: ``t^2 - (2+j+2k)t + (1-2i+j+2k)``, ``t^2+1``, ``3/5j t``.
Printing produces a canonical form that parses back to the same polynomial.
"""

from __future__ import annotations

from fractions import Fraction

from . import scalars
from .algebra import Quaternion, Signature, quaternion_str
from .errors import ParseError
from .polynomials import QuatPoly, RealPoly


# ---------------------------------------------------------------------------
# tokenizer

_UNIT_INDEX = {"i": 1, "j": 2, "k": 3}


def _tokenize(text: str):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace() or ch == "*":
            pos += 1
            continue
        if ch in "+-()^":
            tokens.append((ch, ch, pos))
            pos += 1
            continue
        if ch in "ijkt":
            tokens.append(("name", ch, pos))
            pos += 1
            continue
        if ch.isdigit() or ch == ".":
            start = pos
            while pos < n and (text[pos].isdigit() or text[pos] == "."):
                pos += 1
            number = text[start:pos]
            if pos < n and text[pos] == "/":
                slash = pos
                pos += 1
                dstart = pos
                while pos < n and text[pos].isdigit():
                    pos += 1
                if pos == dstart:
                    raise ParseError("missing denominator", slash)
                number += text[slash:pos]
            try:
                value = Fraction(number)
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"bad number {number!r}", start) from exc
            tokens.append(("number", value, start))
            continue
        raise ParseError(f"unexpected character {ch!r}", pos)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self):
        return self.tokens[self.index]

    def advance(self):
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def expect(self, kind):
        tok = self.advance()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    # term pieces -----------------------------------------------------------

    def parse_sign(self, required: bool) -> int:
        sign = 1
        seen = False
        while self.peek()[0] in "+-":
            if self.advance()[0] == "-":
                sign = -sign
            seen = True
        if required and not seen:
            tok = self.peek()
            raise ParseError(f"expected '+' or '-', found {tok[1]!r}", tok[2])
        return sign

    def parse_qterm(self, signature: Signature) -> Quaternion:
        coef = None
        kind, value, pos = self.peek()
        if kind == "number":
            self.advance()
            coef = value
        unit = None
        kind, value, pos = self.peek()
        if kind == "name" and value in _UNIT_INDEX:
            self.advance()
            unit = value
        if coef is None and unit is None:
            raise ParseError(f"expected a coefficient or unit, found {value!r}", pos)
        coef = Fraction(1) if coef is None else coef
        coords = [Fraction(0)] * 4
        coords[_UNIT_INDEX.get(unit, 0)] = coef
        return Quaternion.from_coords(coords, signature)

    def parse_quat(self, signature: Signature) -> Quaternion:
        total = Quaternion.zero(signature)
        sign = self.parse_sign(required=False)
        while True:
            term = self.parse_qterm(signature)
            total = total + term * sign
            if self.peek()[0] in "+-":
                sign = self.parse_sign(required=True)
                continue
            return total

    def parse_tpow(self) -> int | None:
        kind, value, _ = self.peek()
        if kind == "name" and value == "t":
            self.advance()
            if self.peek()[0] == "^":
                self.advance()
                tok = self.expect("number")
                if tok[1].denominator != 1 or tok[1] < 0:
                    raise ParseError("exponent must be a nonnegative integer", tok[2])
                return int(tok[1])
            return 1
        return None

    def parse_term(self, signature: Signature) -> tuple[Quaternion, int]:
        kind, value, pos = self.peek()
        if kind == "(":
            self.advance()
            coefficient = self.parse_quat(signature)
            self.expect(")")
            power = self.parse_tpow() or 0
            return coefficient, power
        coef = None
        unit = None
        if kind == "number":
            self.advance()
            coef = value
        kind, value, _ = self.peek()
        if kind == "name" and value in _UNIT_INDEX:
            self.advance()
            unit = value
        power = self.parse_tpow()
        if coef is None and unit is None and power is None:
            raise ParseError(f"expected a term, found {value!r}", pos)
        coef = Fraction(1) if coef is None else coef
        coords = [Fraction(0)] * 4
        coords[_UNIT_INDEX.get(unit, 0)] = coef
        return Quaternion.from_coords(coords, signature), power or 0

    def parse_poly(self, signature: Signature) -> QuatPoly:
        terms: dict[int, Quaternion] = {}
        sign = self.parse_sign(required=False)
        while True:
            coefficient, power = self.parse_term(signature)
            current = terms.get(power, Quaternion.zero(signature))
            terms[power] = current + coefficient * sign
            kind, value, pos = self.peek()
            if kind in "+-":
                sign = self.parse_sign(required=True)
                continue
            if kind == "end":
                break
            raise ParseError(f"unexpected {value!r}", pos)
        degree = max(terms) if terms else 0
        coeffs = [terms.get(d, Quaternion.zero(signature)) for d in range(degree + 1)]
        return QuatPoly(tuple(coeffs))


def parse_poly(text: str, signature: Signature = Signature.SPLIT, backend: str = "exact") -> QuatPoly:
    """Parse a polynomial expression into a canonical QuatPoly."""
    if not text.strip():
        raise ParseError("empty polynomial expression", 0)
    poly = _Parser(text).parse_poly(signature)
    if backend == "float":
        return poly.to_float()
    if backend != "exact":
        raise ParseError(f"unknown backend {backend!r}")
    return poly


def parse_quaternion(text: str, signature: Signature = Signature.SPLIT, backend: str = "exact") -> Quaternion:
    """Parse a constant quaternion expression such as ``1 - 3/5j + 4/5k``."""
    poly = parse_poly(text, signature, backend)
    if poly.degree > 0:
        raise ParseError("expected a constant quaternion, found the variable t", 0)
    return poly.coefficient(0)


def parse_point(text: str, signature: Signature = Signature.SPLIT, backend: str = "exact"):
    """Parse a vectorial quaternion expression into a projective point."""
    from .geometry import ProjPoint

    return ProjPoint(parse_quaternion(text, signature, backend))


# ---------------------------------------------------------------------------
# printing


def _scalar_term(value, suffix: str) -> str:
    text = scalars.format_scalar(value)
    if suffix and "sqrt" in text:
        text = f"({text})"
    if suffix:
        if text == "1":
            return suffix
        if text == "-1":
            return f"-{suffix}"
        return f"{text}{suffix}"
    return text


def _join_terms(terms: list[str]) -> str:
    if not terms:
        return "0"
    out = terms[0]
    for term in terms[1:]:
        if term.startswith("-"):
            out += f" - {term[1:]}"
        else:
            out += f" + {term}"
    return out


def _power_suffix(d: int) -> str:
    if d == 0:
        return ""
    if d == 1:
        return "t"
    return f"t^{d}"


def quat_poly_str(poly: QuatPoly) -> str:
    terms = []
    for d in range(poly.degree, -1, -1):
        c = poly.coefficient(d)
        if all(v == 0 for v in c.coords):
            continue
        nonzero = [v for v in c.coords if v != 0]
        suffix = _power_suffix(d)
        if len(nonzero) > 1:
            text = quaternion_str(c)
            negate = text.startswith("-")
            if negate:
                text = quaternion_str(-c)
            body = f"({text}){suffix}" if suffix else f"({text})"
            terms.append(f"-{body}" if negate else body)
        else:
            unit = ""
            value = c.w
            for coord, name in ((c.x, "i"), (c.y, "j"), (c.z, "k")):
                if coord != 0:
                    unit, value = name, coord
                    break
            terms.append(_scalar_term(value, f"{unit}{suffix}"))
    return _join_terms(terms)


def real_poly_str(poly: RealPoly) -> str:
    terms = []
    for d in range(poly.degree, -1, -1):
        c = poly.coefficient(d)
        if c == 0:
            continue
        terms.append(_scalar_term(c, _power_suffix(d)))
    return _join_terms(terms)
