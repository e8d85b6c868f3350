"""Recursive-descent parser for the measure description language.

    spec  := "lebesgue" | "cantor" | "dirac" "(" num ")"
           | "atoms" "(" num ":" num ("," num ":" num)* ")"
           | "density" "(" num ("," num)* ")"
           | "mix" "(" num ":" spec ("," num ":" spec)* ")"
           | "conv" "(" spec "," spec ")" | "conj" "(" spec ")"
    num   := decimal literal | integer "/" positive integer

Whitespace is ignored between tokens.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .coefficients import (WEIGHT_TOL, Atomic, Cantor, Conjugate, Convolution,
                           CosineDensity, Lebesgue, MeasureSpec, Mixture)
from .errors import MeasureValidationError, ParseError

MAX_SOURCE = 64 * 1024
MAX_DEPTH = 32

_WORD = re.compile(r"[a-z]+")
_DECIMAL = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
_FRACTION = re.compile(r"([+-]?\d+)\s*/\s*(\d+)")

_KEYWORDS = ("lebesgue", "cantor", "dirac", "atoms", "density", "mix", "conv", "conj")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.depth = 0

    def error(self, message: str, offset: int | None = None) -> ParseError:
        offset = self.pos if offset is None else offset
        return ParseError(message, min(offset, max(len(self.text) - 1, 0)))

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, ch: str) -> None:
        self.skip()
        if self.text.startswith(ch, self.pos):
            self.pos += 1
            return
        found = repr(self.text[self.pos]) if self.pos < len(self.text) else "end of input"
        raise self.error(f"expected {ch!r}, found {found}")

    def peek(self, ch: str) -> bool:
        self.skip()
        return self.text.startswith(ch, self.pos)

    def number(self) -> tuple[float, int]:
        """Parse a number; returns (value, start offset)."""
        self.skip()
        start = self.pos
        m = _FRACTION.match(self.text, self.pos)
        if m:
            den = int(m.group(2))
            if den == 0:
                raise self.error("zero denominator", m.start(2))
            self.pos = m.end()
            # single rounding of the exact rational
            return float(Fraction(int(m.group(1)), den)), start
        m = _DECIMAL.match(self.text, self.pos)
        if not m:
            raise self.error("expected a number")
        self.pos = m.end()
        value = float(m.group(0))
        if not math.isfinite(value):
            raise self.error("number out of range", start)
        return value, start

    def spec(self) -> MeasureSpec:
        self.depth += 1
        if self.depth > MAX_DEPTH:
            raise self.error(f"nesting deeper than {MAX_DEPTH}")
        self.skip()
        start = self.pos
        m = _WORD.match(self.text, self.pos)
        if not m or m.group(0) not in _KEYWORDS:
            raise self.error("expected a measure ("
                             + ", ".join(_KEYWORDS) + ")")
        self.pos = m.end()
        result = getattr(self, "_" + m.group(0))(start)
        self.depth -= 1
        return result

    def _lebesgue(self, start):
        return Lebesgue()

    def _cantor(self, start):
        return Cantor()

    def _dirac(self, start):
        self.expect("(")
        p, off = self.number()
        self.expect(")")
        _check_position(p, off)
        return Atomic(((p, 1.0),))

    def _atoms(self, start):
        self.expect("(")
        atoms = []
        seen = {}
        while True:
            p, poff = self.number()
            self.expect(":")
            w, woff = self.number()
            _check_position(p, poff)
            if not w > 0.0:
                raise MeasureValidationError(f"atom weight {w!r} must be positive", woff)
            if p in seen:
                raise MeasureValidationError(f"duplicate atom position {p!r}", poff)
            seen[p] = poff
            atoms.append((p, w))
            if not self.peek(","):
                break
            self.pos += 1
        self.expect(")")
        _check_total([w for _, w in atoms], "atom", start)
        return Atomic(tuple(atoms))

    def _density(self, start):
        self.expect("(")
        coeffs = []
        offsets = []
        while True:
            a, off = self.number()
            coeffs.append(a)
            offsets.append(off)
            if not self.peek(","):
                break
            self.pos += 1
        self.expect(")")
        total = math.fsum(abs(a) for a in coeffs)
        if total >= 1.0:
            # point at the coefficient that pushes the sum to 1
            running = 0.0
            culprit = offsets[-1]
            for a, off in zip(coeffs, offsets):
                running += abs(a)
                if running >= 1.0:
                    culprit = off
                    break
            raise MeasureValidationError(
                f"sum of |a_k| is {total!r}; must be < 1", culprit)
        return CosineDensity(tuple(coeffs))

    def _mix(self, start):
        self.expect("(")
        parts = []
        while True:
            w, woff = self.number()
            if not w > 0.0:
                raise MeasureValidationError(f"mixture weight {w!r} must be positive", woff)
            self.expect(":")
            parts.append((w, self.spec()))
            if not self.peek(","):
                break
            self.pos += 1
        self.expect(")")
        _check_total([w for w, _ in parts], "mixture", start)
        return Mixture(tuple(parts))

    def _conv(self, start):
        self.expect("(")
        left = self.spec()
        self.expect(",")
        right = self.spec()
        self.expect(")")
        return Convolution(left, right)

    def _conj(self, start):
        self.expect("(")
        inner = self.spec()
        self.expect(")")
        return Conjugate(inner)


def _check_position(p: float, offset: int) -> None:
    if not 0.0 <= p < 1.0:
        raise MeasureValidationError(f"position {p!r} outside [0, 1)", offset)


def _check_total(weights, what: str, offset: int) -> None:
    total = math.fsum(weights)
    if abs(total - 1.0) > WEIGHT_TOL:
        raise MeasureValidationError(f"{what} weights sum to {total!r}, not 1", offset)


def parse_number(text: str) -> float:
    """Parse a single DSL number (decimal or integer fraction)."""
    parser = _Parser(text)
    value, _ = parser.number()
    parser.skip()
    if parser.pos != len(text):
        raise parser.error("trailing characters after number")
    return value


def parse_measure(text: str) -> MeasureSpec:
    """Parse DSL text into a validated MeasureSpec."""
    if len(text.encode("utf-8", "surrogatepass")) > MAX_SOURCE:
        raise ParseError("source longer than 64 KiB", 0)
    for i, ch in enumerate(text):
        if ord(ch) > 127:
            raise ParseError("non-ASCII character", i)
    parser = _Parser(text)
    spec = parser.spec()
    parser.skip()
    if parser.pos != len(text):
        raise parser.error("unexpected trailing input")
    return spec


def unparse(spec: MeasureSpec) -> str:
    """Render ``spec`` as DSL text that parses back to an equal spec."""
    if isinstance(spec, Lebesgue):
        return "lebesgue"
    if isinstance(spec, Cantor):
        return "cantor"
    if isinstance(spec, Atomic):
        if len(spec.atoms) == 1 and spec.atoms[0][1] == 1.0:
            return f"dirac({spec.atoms[0][0]!r})"
        return "atoms(" + ", ".join(f"{p!r}: {w!r}" for p, w in spec.atoms) + ")"
    if isinstance(spec, CosineDensity):
        if not spec.coeffs:
            raise ValueError("the empty cosine density has no DSL form; use lebesgue")
        return "density(" + ", ".join(repr(a) for a in spec.coeffs) + ")"
    if isinstance(spec, Mixture):
        return "mix(" + ", ".join(f"{w!r}: {unparse(p)}" for w, p in spec.parts) + ")"
    if isinstance(spec, Convolution):
        return f"conv({unparse(spec.left)}, {unparse(spec.right)})"
    if isinstance(spec, Conjugate):
        return f"conj({unparse(spec.inner)})"
    raise TypeError(type(spec).__name__)
