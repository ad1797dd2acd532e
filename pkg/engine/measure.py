"""
The ordered measure set L and its accumulation monoids.

Membership degrees are exact rationals in [0, 1]. Degree subclasses
fractions.Fraction, so ordering, hashing and equality are the rational
ones and integer arithmetic never overflows.
"""

import enum
from fractions import Fraction
from typing import Iterable

from django_fuzzy_segmentation.exceptions import DegreeError


class Degree(Fraction):
    """
    A membership degree: an exact rational in [0, 1], stored in lowest terms.

    Arithmetic on degrees yields plain Fractions; wrap the result in Degree
    again when it must be a measure.
    """

    __slots__ = ()

    def __new__(cls, numerator=0, denominator=None):
        try:
            self = super().__new__(cls, numerator, denominator)
        except (ValueError, TypeError, ZeroDivisionError) as e:
            raise DegreeError(f"Invalid degree {numerator!r}/{denominator!r}: {e}") from e
        if self < 0 or self > 1:
            raise DegreeError(f"Degree {self} lies outside [0, 1]")
        return self

    def __str__(self) -> str:
        return format_degree(self)


ZERO = Degree(0)
ONE = Degree(1)


class Ordering(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def degree_from_ratio(num: int, den: int) -> Degree:
    """
    Build a normalized degree num/den.

    Raises:
        DegreeError: If den < 1, num < 0 or num > den.
    """
    if isinstance(num, bool) or isinstance(den, bool):
        raise DegreeError("Degree components must be integers, not booleans")
    if not isinstance(num, int) or not isinstance(den, int):
        raise DegreeError(f"Degree components must be integers, got {num!r}/{den!r}")
    if den < 1:
        raise DegreeError(f"Degree denominator must be positive, got {den}")
    if num < 0 or num > den:
        raise DegreeError(f"Degree {num}/{den} lies outside [0, 1]")
    return Degree(num, den)


def parse_degree(text: str) -> Degree:
    """
    Parse the textual form of a degree.

    Accepts "p/q", integers ("0", "1") and finite decimals ("0.75"),
    converting decimals exactly.

    Raises:
        DegreeError: On malformed text or values outside [0, 1].
    """
    if not isinstance(text, str):
        raise DegreeError(f"Degree must be given as a string, got {type(text).__name__}")
    stripped = text.strip()
    if not stripped or stripped != text:
        raise DegreeError(f"Malformed degree {text!r}")
    try:
        value = Fraction(stripped)
    except (ValueError, ZeroDivisionError) as e:
        raise DegreeError(f"Malformed degree {text!r}") from e
    return Degree(value)


def format_degree(degree: Fraction) -> str:
    """Render a degree as "p/q" in lowest terms, or "0" / "1"."""
    if degree.denominator == 1:
        return str(degree.numerator)
    return f"{degree.numerator}/{degree.denominator}"


def compare(a: Degree, b: Degree) -> Ordering:
    """Compare two degrees by rational value (cross-multiplication)."""
    left = a.numerator * b.denominator
    right = b.numerator * a.denominator
    if left < right:
        return Ordering.LESS
    if left > right:
        return Ordering.GREATER
    return Ordering.EQUAL


class Accumulator(enum.Enum):
    """
    Commutative monotone monoid on L with neutral element 1 and zero 0.

    PRODUCT is the default; MINIMUM is the max-min alternative.
    """

    PRODUCT = "product"
    MINIMUM = "min"

    def combine(self, a: Degree, b: Degree) -> Degree:
        if self is Accumulator.PRODUCT:
            return Degree(a * b)
        return a if a <= b else b

    def fold(self, degrees: Iterable[Degree]) -> Degree:
        result = ONE
        for degree in degrees:
            result = self.combine(result, degree)
        return result

    @classmethod
    def from_name(cls, name: str) -> "Accumulator":
        """Look up an accumulator by its pattern-file name ("product" or "min")."""
        for member in cls:
            if member.value == name:
                return member
        valid = [member.value for member in cls]
        raise ValueError(f"Unknown accumulator {name!r}. Valid: {valid}")


def accumulate(acc: Accumulator, a: Degree, b: Degree) -> Degree:
    """Return a ⊗ b under the given accumulator."""
    return acc.combine(a, b)
