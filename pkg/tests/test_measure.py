"""Tests for membership degrees and accumulators."""

import random
from fractions import Fraction

import pytest

from django_fuzzy_segmentation.engine.measure import (
    ONE,
    ZERO,
    Accumulator,
    Degree,
    Ordering,
    accumulate,
    compare,
    degree_from_ratio,
    format_degree,
    parse_degree,
)
from django_fuzzy_segmentation.exceptions import DegreeError, SegmentationError


def random_degree(rng: random.Random) -> Degree:
    den = rng.randint(1, 12)
    return degree_from_ratio(rng.randint(0, den), den)


class TestDegreeFromRatio:
    """Tests for degree_from_ratio."""

    def test_zero(self):
        """0/1 is the bottom element."""
        assert degree_from_ratio(0, 1) == ZERO

    def test_two_thirds(self):
        """2/3 keeps its numerator and denominator."""
        d = degree_from_ratio(2, 3)
        assert (d.numerator, d.denominator) == (2, 3)

    def test_normalized(self):
        """4/6 is stored in lowest terms."""
        d = degree_from_ratio(4, 6)
        assert (d.numerator, d.denominator) == (2, 3)
        assert d == degree_from_ratio(2, 3)

    def test_scaling_invariance(self):
        """p/q and kp/kq are the same degree."""
        for k in range(1, 20):
            assert degree_from_ratio(3 * k, 7 * k) == degree_from_ratio(3, 7)

    @pytest.mark.parametrize("num,den", [(4, 3), (1, 0), (-1, 2), (0, -1)])
    def test_out_of_range(self, num, den):
        """Values outside [0, 1] and zero denominators are rejected."""
        with pytest.raises(DegreeError):
            degree_from_ratio(num, den)

    def test_rejects_booleans(self):
        """Booleans are not accepted as integers."""
        with pytest.raises(DegreeError):
            degree_from_ratio(True, 1)

    def test_degree_error_is_value_error(self):
        """DegreeError belongs to both hierarchies."""
        with pytest.raises(ValueError):
            degree_from_ratio(2, 1)
        assert issubclass(DegreeError, SegmentationError)


class TestDegree:
    """Tests for the Degree type."""

    def test_direct_construction_checks_range(self):
        """Degree(3, 2) is out of range."""
        with pytest.raises(DegreeError):
            Degree(3, 2)

    def test_is_a_fraction(self):
        """Degrees compare equal to the matching Fraction."""
        assert Degree(1, 2) == Fraction(1, 2)

    def test_str(self):
        """str uses the textual degree form."""
        assert str(Degree(2, 3)) == "2/3"
        assert str(ONE) == "1"
        assert str(ZERO) == "0"


class TestParseDegree:
    """Tests for parse_degree and format_degree."""

    @pytest.mark.parametrize(
        "text,expected",
        [("2/3", (2, 3)), ("0", (0, 1)), ("1", (1, 1)), ("0.75", (3, 4)), ("4/6", (2, 3)), ("0.5", (1, 2))],
    )
    def test_valid(self, text, expected):
        """Fractions, integers and decimals parse exactly."""
        d = parse_degree(text)
        assert (d.numerator, d.denominator) == expected

    @pytest.mark.parametrize("text", ["", "abc", "1/0", "3/2", "-0.5", " 1/2", "1.5"])
    def test_invalid(self, text):
        """Malformed or out-of-range text is rejected."""
        with pytest.raises(DegreeError):
            parse_degree(text)

    def test_non_string(self):
        """Only strings are parsed."""
        with pytest.raises(DegreeError):
            parse_degree(0.5)

    @pytest.mark.parametrize("num,den,text", [(2, 3, "2/3"), (0, 5, "0"), (7, 7, "1"), (3, 4, "3/4")])
    def test_format(self, num, den, text):
        """format_degree prints lowest terms, or 0 / 1."""
        assert format_degree(degree_from_ratio(num, den)) == text


class TestCompare:
    """Tests for compare."""

    def test_less(self):
        """1/2 < 2/3."""
        assert compare(Degree(1, 2), Degree(2, 3)) is Ordering.LESS

    def test_equal(self):
        """A degree equals itself."""
        d = Degree(5, 7)
        assert compare(d, d) is Ordering.EQUAL

    def test_greater(self):
        """1 > 3/4."""
        assert compare(ONE, Degree(3, 4)) is Ordering.GREATER

    def test_total_and_consistent(self):
        """Exactly one ordering holds, and it agrees with rational comparison."""
        rng = random.Random(11)
        for _ in range(500):
            a, b = random_degree(rng), random_degree(rng)
            result = compare(a, b)
            expected = Ordering.LESS if a < b else Ordering.GREATER if a > b else Ordering.EQUAL
            assert result is expected
            assert compare(b, a).value == -result.value


class TestAccumulator:
    """Tests for the accumulation monoids."""

    def test_product_neutral(self):
        """4/5 ⊗ 1 = 4/5."""
        assert accumulate(Accumulator.PRODUCT, Degree(4, 5), ONE) == Degree(4, 5)

    def test_product_fold(self):
        """4/5 ⊗ 1 ⊗ 3/4 = 3/5."""
        assert Accumulator.PRODUCT.fold([Degree(4, 5), ONE, Degree(3, 4)]) == Degree(3, 5)

    def test_minimum(self):
        """min(2/3, 1/2) = 1/2."""
        assert accumulate(Accumulator.MINIMUM, Degree(2, 3), Degree(1, 2)) == Degree(1, 2)

    def test_fold_empty(self):
        """The empty fold is the neutral element."""
        assert Accumulator.MINIMUM.fold([]) == ONE

    def test_product_returns_degree(self):
        """Products stay Degree instances."""
        assert isinstance(Accumulator.PRODUCT.combine(Degree(1, 2), Degree(1, 3)), Degree)

    def test_from_name(self):
        """Accumulators are looked up by their pattern-file names."""
        assert Accumulator.from_name("product") is Accumulator.PRODUCT
        assert Accumulator.from_name("min") is Accumulator.MINIMUM
        with pytest.raises(ValueError):
            Accumulator.from_name("sum")

    @pytest.mark.parametrize("acc", list(Accumulator))
    def test_monoid_laws(self, acc):
        """Associative, commutative, neutral 1, absorbing 0 and monotone on 1000 random triples."""
        rng = random.Random(2022)
        failures = []
        for _ in range(1000):
            a, b, c = random_degree(rng), random_degree(rng), random_degree(rng)
            checks = [
                acc.combine(acc.combine(a, b), c) == acc.combine(a, acc.combine(b, c)),
                acc.combine(a, b) == acc.combine(b, a),
                acc.combine(a, ONE) == a,
                acc.combine(a, ZERO) == ZERO,
                a > b or acc.combine(a, c) <= acc.combine(b, c),
            ]
            if not all(checks):
                failures.append((a, b, c))
        assert failures == []
