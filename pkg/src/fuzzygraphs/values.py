"""Exact membership values.

Every membership degree in this package is a rational number in [0, 1],
held as a ``fractions.Fraction`` (always lowest terms, positive
denominator). Floats are rejected at the boundary so near-ties in density
comparisons can never be misordered by rounding.
"""

import re
from fractions import Fraction

from .errors import ValueRangeError

ZERO = Fraction(0)
ONE = Fraction(1)

# "p/q" or a plain decimal like "0.35"; no sign, no exponent.
_VALUE_TEXT = re.compile(r"\A(?:\d+(?:\.\d+)?|\d+/\d+)\Z")


def parse_value_text(text: str) -> Fraction:
    """Parse the two exact text forms: 'p/q' and a decimal literal."""
    if not _VALUE_TEXT.match(text):
        raise ValueError(
            f"bad value text {text!r}: expected 'p/q' or a decimal like '0.35'"
        )
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ValueError(f"bad value text {text!r}: zero denominator")
        return Fraction(int(num), int(den))
    # Fraction("0.35") converts the decimal literal exactly (denominator 10^k).
    return Fraction(text)


def as_value(raw) -> Fraction:
    """Coerce raw into an exact Fraction in [0, 1].

    Accepts Fraction, int, or text ('3/10' or '0.3'). Floats are refused:
    a binary float is usually not the rational the caller meant.
    """
    if isinstance(raw, bool):
        raise ValueError("membership values must be Fraction, int, or str")
    if isinstance(raw, Fraction):
        value = raw
    elif isinstance(raw, int):
        value = Fraction(raw)
    elif isinstance(raw, str):
        value = parse_value_text(raw)
    elif isinstance(raw, float):
        raise ValueError(
            f"float membership {raw!r} is inexact; pass a string like '3/10' instead"
        )
    else:
        raise ValueError(f"cannot read a membership value from {type(raw).__name__}")
    if value < ZERO or value > ONE:
        raise ValueRangeError(f"membership value {value} outside [0, 1]")
    return value


def value_text(value: Fraction) -> str:
    """Canonical rendering: lowest-terms 'p/q', integers as 'p/1'."""
    return f"{value.numerator}/{value.denominator}"
