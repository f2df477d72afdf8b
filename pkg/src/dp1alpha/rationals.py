"""Shared exact-rational helpers: text grammar and perfect-square roots."""

from __future__ import annotations

import math
import re
from fractions import Fraction

_RATIONAL_RE = re.compile(r"^-?[0-9]+(/[1-9][0-9]*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``p`` or ``p/q`` (q > 0) into a Fraction.

    Raises ValueError on anything outside the grammar (whitespace is stripped
    first so CLI arguments survive shell quoting).
    """
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational in p or p/q form: {text!r}")
    return Fraction(text)


def format_rational(value: Fraction) -> str:
    """Render in lowest terms as ``p`` or ``p/q`` with q > 0."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rational_sqrt(value: Fraction) -> Fraction | None:
    """Exact square root of a rational, or None if it is not a perfect square."""
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return Fraction(rn, rd)
