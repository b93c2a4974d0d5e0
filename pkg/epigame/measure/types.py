import re
from fractions import Fraction
from typing import (
    TypeAlias,
    Union,
)

from ..core import ParseError

Rational: TypeAlias = Fraction
RationalLike = Union[Fraction, int, str]

_RATIONAL_PATTERN = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def parse_rational(text: RationalLike) -> Fraction:
    """
    Parse the wire form of a rational: "k" or "p/q".

    Integers and Fractions pass through; decimals and floats are rejected so
    that no value ever carries rounding.
    """
    if isinstance(text, bool):
        raise ParseError(f"Not a rational: {text!r}", details={"value": repr(text)})
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ParseError(f"Not a rational: {text!r}", details={"value": repr(text)})
    match = _RATIONAL_PATTERN.match(text.strip())
    if not match:
        raise ParseError(f"Not a rational: {text!r}", details={"value": text})
    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise ParseError(f"Zero denominator: {text!r}", details={"value": text})
    return Fraction(int(numerator), int(denominator or 1))


def format_rational(value: Fraction) -> str:
    """Render a rational canonically: "k" when integral, else "p/q" in lowest terms."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
