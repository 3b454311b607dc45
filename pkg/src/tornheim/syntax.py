"""Text forms ``T(s1,...,sr;s)``, ``Z(s1,...,sr)``, ``P(s1,...,sr)`` and renderers."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Mapping, Tuple, Union

from .core import MTIndex, MZVIndex, render_rational


@dataclass(frozen=True)
class Product:
    """zeta(s_1) * ... * zeta(s_r)."""

    args: Tuple[int, ...]

    def __str__(self):
        return "P(%s)" % ",".join(map(str, self.args))


Literal = Union[MTIndex, MZVIndex, Product]


class ParseError(ValueError):
    def __init__(self, message: str, text: str, column: int):
        self.column = column  # 1-based
        super().__init__(f"column {column}: {message} in {text!r}")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, message: str):
        raise ParseError(message, self.text, self.pos + 1)

    def expect(self, ch: str):
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            self.fail(f"expected {ch!r}, found {found}")
        self.pos += 1

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
            self.pos += 1
        if start == self.pos:
            self.fail("expected a positive integer")
        value = int(self.text[start : self.pos])
        if value < 1:
            self.pos = start
            self.fail("arguments must be positive")
        return value

    def int_list(self, stop: str) -> List[int]:
        values = [self.integer()]
        while self.peek() == ",":
            self.pos += 1
            values.append(self.integer())
        if self.peek() != stop:
            self.fail(f"expected ',' or {stop!r}")
        return values


def parse(text: str) -> Literal:
    """Parse a literal; whitespace anywhere is ignored.

    >>> parse(" T( 1, 2 ; 3 ) ")
    MTIndex(args=(1, 2), last=3)
    """
    sc = _Scanner(text)
    head = sc.peek()
    if head not in ("T", "Z", "P"):
        sc.fail("expected 'T', 'Z' or 'P'")
    sc.pos += 1
    sc.expect("(")
    if head == "T":
        args = sc.int_list(";")
        sc.expect(";")
        last = sc.integer()
        sc.expect(")")
        result: Literal = MTIndex(tuple(args), last)
    else:
        args = sc.int_list(")")
        sc.expect(")")
        result = MZVIndex(tuple(args)) if head == "Z" else Product(tuple(args))
    if sc.peek():
        sc.fail("trailing input")
    return result


def render(x: Literal) -> str:
    return str(x)


def _latex_coeff(q: Fraction) -> str:
    sign = "-" if q < 0 else ""
    q = abs(q)
    if q == 1:
        return sign
    if q.denominator == 1:
        return f"{sign}{q.numerator}"
    return f"{sign}\\frac{{{q.numerator}}}{{{q.denominator}}}"


def format_plain(c: Mapping[MZVIndex, Fraction]) -> str:
    """``2 * Z(2,2) + 4 * Z(3,1)``; the empty combination renders as ``0``."""
    out = ""
    for z, q in sorted(c.items(), key=lambda kv: kv[0].args):
        if not out:
            out = f"{render_rational(q)} * {z}"
        else:
            op = "-" if q < 0 else "+"
            out += f" {op} {render_rational(abs(q))} * {z}"
    return out or "0"


def format_latex(c: Mapping[MZVIndex, Fraction]) -> str:
    """``6\\zeta(3,1,1)``; unit coefficients are omitted."""
    parts = []
    for z, q in sorted(c.items(), key=lambda kv: kv[0].args):
        term = _latex_coeff(q) + "\\zeta(%s)" % ",".join(map(str, z.args))
        if parts and not term.startswith("-"):
            term = "+" + term
        parts.append(term)
    return " ".join(parts) or "0"


def format_json(source: str, c: Mapping[MZVIndex, Fraction]) -> str:
    items = sorted(c.items(), key=lambda kv: kv[0].args)
    weights = {z.weight for z in c}
    depths = {z.depth for z in c}
    doc = {
        "input": source,
        "weight": weights.pop() if len(weights) == 1 else None,
        "depth": depths.pop() if len(depths) == 1 else None,
        "terms": [{"zeta": list(z.args), "coeff": render_rational(q)} for z, q in items],
    }
    return json.dumps(doc, indent=2)


FORMATTERS = {"plain": format_plain, "latex": format_latex}
