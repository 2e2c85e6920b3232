"""Exact rational scalars.

The scalar field is sympy's ``QQ`` domain. With gmpy2 installed its elements are
``gmpy2.mpq`` values, normalised on construction (positive denominator, reduced)
and multiplied with sub-quadratic big-integer algorithms.
"""

import math
import re
from typing import Optional, Union

from sympy import QQ, integer_nthroot

from ..commons.errors import DivisionByZero, RecordParseError, ZeroHeightInput

Rational = type(QQ(0))

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def rational(numerator: Union[int, str, Rational], denominator: int = 1) -> Rational:
    """Build a normalised rational number.

    Parameters
    ----------
    numerator: int, str or Rational
        The numerator, or a canonical "num/den" string.
    denominator: int, optional
        The denominator, by default 1.

    Returns
    -------
    Rational
        The reduced value with a positive denominator.

    Raises
    ------
    DivisionByZero
        If the denominator is zero.
    """
    if isinstance(numerator, str):
        return parse_rational(numerator)
    if denominator == 0:
        raise DivisionByZero()
    return QQ(numerator) / QQ(denominator)


def divide(a: Rational, b: Rational) -> Rational:
    """Exact quotient a / b, raising DivisionByZero when b is zero."""
    if not b:
        raise DivisionByZero()
    return QQ.convert(a) / QQ.convert(b)


def parse_rational(text: str) -> Rational:
    """Read the canonical text form "num/den" (or "num").

    Parameters
    ----------
    text: str
        The text to parse.

    Returns
    -------
    Rational
        The parsed value.

    Raises
    ------
    DivisionByZero
        If the denominator is zero.
    RecordParseError
        If the text is not a rational number.
    """
    match = _RATIONAL_PATTERN.match(text)
    if match is None:
        raise RecordParseError(location=repr(text), reason="not a rational number")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise DivisionByZero()
    return QQ(numerator, denominator)


def format_rational(value: Rational) -> str:
    """Write the canonical text form, omitting "/den" when den = 1."""
    value = QQ.convert(value)
    numerator, denominator = int(value.numerator), int(value.denominator)
    if denominator == 1:
        return str(numerator)
    return f"{numerator}/{denominator}"


def integer_sqrt(n: int) -> Optional[int]:
    """Return the square root of n when n is a perfect square, None otherwise."""
    if n < 0:
        return None
    root, exact = integer_nthroot(int(n), 2)
    return int(root) if exact else None


def is_square(value: Rational) -> Optional[Rational]:
    """Square test in the rationals.

    Parameters
    ----------
    value: Rational
        The value to test.

    Returns
    -------
    Optional[Rational]
        The non negative square root when it exists, None otherwise.
    """
    value = QQ.convert(value)
    numerator_root = integer_sqrt(int(value.numerator))
    if numerator_root is None:
        return None
    denominator_root = integer_sqrt(int(value.denominator))
    if denominator_root is None:
        return None
    return QQ(numerator_root, denominator_root)


def log_height(value: Rational) -> float:
    """Naive logarithmic height log max(|num|, den).

    Parameters
    ----------
    value: Rational
        A non zero rational number.

    Returns
    -------
    float
        The height, the only exact to floating point bridge of the library.

    Raises
    ------
    ZeroHeightInput
        If the value is zero.
    """
    value = QQ.convert(value)
    if not value:
        raise ZeroHeightInput()
    return math.log(max(abs(int(value.numerator)), int(value.denominator)))
