"""Exact-rational helpers.

Support and confidence values are kept as `fractions.Fraction` throughout;
rounding to integer percentages happens only at display time.
"""

from fractions import Fraction


def to_fraction(value: Fraction | int | float | str) -> Fraction:
    """Coerce a threshold value to an exact Fraction.

    Floats go through their decimal string form so that ``0.1`` means
    1/10, not the nearest binary float. Strings may be decimals
    ("0.33") or ratios ("1/3").
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(str(value))
    return Fraction(value)


def percent_half_up(value: Fraction) -> int:
    """Round a non-negative fraction to a whole percent, halves up."""
    return int(value * 100 + Fraction(1, 2))


def format_fraction(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"
