"""Tests for the SC-Heuristic and segmentation patterns."""

import random

import pytest

from django_fuzzy_segmentation.engine.local_seg import (
    Pattern,
    Segmentation,
    SingleOccurrence,
    adversarial_instance,
    sc_heuristic,
)
from django_fuzzy_segmentation.engine.measure import ONE, degree_from_ratio
from django_fuzzy_segmentation.engine.oracle import check_valid, enumerate_segmentations
from django_fuzzy_segmentation.engine.prefix import Segment
from django_fuzzy_segmentation.engine.stats import RunStats
from django_fuzzy_segmentation.engine.symbols import Alphabet, CharTable, MaxRun, RelativeCount
from django_fuzzy_segmentation.exceptions import AlphabetError, ArityError, PreconditionError


def random_instance(rng: random.Random, lambda_bounds=None):
    alphabet = Alphabet("01")
    m = rng.randint(1, 4)
    if lambda_bounds is None:
        lambda_min = rng.randint(1, 3)
        lambda_max = rng.randint(lambda_min, 4)
    else:
        lambda_min, lambda_max = lambda_bounds
    symbols = [
        rng.choice([RelativeCount, MaxRun])(f"s{k}", alphabet, rng.choice(["0", "1"]))
        for k in range(m)
    ]
    mu = degree_from_ratio(rng.randint(1, 3), 3)
    text = "".join(rng.choice("01") for _ in range(rng.randint(1, 20)))
    return text, Pattern(symbols, lambda_min, lambda_max, mu)


class TestPattern:
    """Tests for Pattern validation."""

    def test_empty(self):
        """A pattern needs a symbol."""
        with pytest.raises(PreconditionError):
            Pattern([], 1, 1, ONE)

    @pytest.mark.parametrize("bounds", [(0, 1), (3, 2)])
    def test_bad_bounds(self, alphas, bounds):
        """1 <= lambda_min <= lambda_max."""
        with pytest.raises(PreconditionError):
            Pattern([alphas["a0"]], *bounds, ONE)

    def test_mixed_alphabets(self, alphas):
        """All symbols share one alphabet."""
        other = RelativeCount("x", Alphabet("012"), "2")
        with pytest.raises(AlphabetError):
            Pattern([alphas["a0"], other], 1, 2, ONE)

    def test_table_symbol_arity(self, sml_tables):
        """Table symbols only allow lambda_max = 1."""
        with pytest.raises(ArityError):
            Pattern(list(sml_tables), 1, 2, ONE)

    def test_matches(self, counts_case):
        """matches checks both the length bounds and the degree."""
        _, pattern = counts_case
        assert pattern.matches(0, "101")
        assert not pattern.matches(0, "1")
        assert not pattern.matches(1, "101")


class TestSegmentation:
    """Tests for Segmentation."""

    def test_format_with_degrees(self, counts_case):
        """Degrees follow each segment in parentheses."""
        text, pattern = counts_case
        found = Segmentation.of(text, pattern, [Segment(3, 4), Segment(5, 7), Segment(8, 9)])
        assert found.format() == "3-4(1) 5-7(1) 8-9(1)"
        assert (found.start, found.end) == (3, 9)

    def test_format_without_degrees(self):
        """Bare segments print as low-high."""
        assert Segmentation((Segment(1, 2), Segment(3, 5))).format() == "1-2 3-5"


class TestScHeuristic:
    """Tests for sc_heuristic."""

    def test_counts_case(self, counts_case):
        """The scan finds only the segmentation starting at 1."""
        text, pattern = counts_case
        assert [s.format() for s in sc_heuristic(text, pattern)] == ["1-3(2/3) 4-6(2/3) 7-9(2/3)"]

    def test_runs_case(self, runs_case, fixtures_dir):
        """The scan reproduces the golden output."""
        text, pattern = runs_case
        expected = (fixtures_dir / "runs_case" / "expected_segment.txt").read_text().splitlines()
        assert [s.format() for s in sc_heuristic(text, pattern)] == expected

    def test_runs_case_is_incomplete(self, runs_case):
        """The oracle finds more segmentations than the heuristic."""
        text, pattern = runs_case
        assert len(enumerate_segmentations(text, pattern)) == 14
        assert len(sc_heuristic(text, pattern)) == 2

    def test_trace(self, runs_case):
        """trace sees strictly increasing scan positions."""
        text, pattern = runs_case
        steps = []
        sc_heuristic(text, pattern, trace=lambda i, j, structure: steps.append((i, j, structure.q)))
        positions = [i for i, _, _ in steps]
        assert positions == sorted(set(positions))
        assert steps[0] == (1, 3, 1)

    def test_alphabet_violation(self, counts_case):
        """Text characters must belong to the alphabet."""
        _, pattern = counts_case
        with pytest.raises(AlphabetError):
            sc_heuristic("1012", pattern)

    def test_text_shorter_than_lambda(self, counts_case):
        """Nothing fits in a text shorter than lambda_min."""
        _, pattern = counts_case
        assert sc_heuristic("1", pattern) == []

    def test_sound_and_duplicate_free(self):
        """On 500 random instances every result is valid, found by the oracle, and unique."""
        rng = random.Random(2023)
        failures = []
        for _ in range(500):
            text, pattern = random_instance(rng)
            found = sc_heuristic(text, pattern)
            reference = enumerate_segmentations(text, pattern)
            ok = (
                all(check_valid(text, pattern, s) for s in found)
                and all(s in reference for s in found)
                and len(set(found)) == len(found)
            )
            if not ok:
                failures.append((text, pattern))
        assert failures == []

    def test_results_ordered_by_end(self):
        """Results come out in order of their end position."""
        rng = random.Random(8)
        for _ in range(200):
            text, pattern = random_instance(rng)
            ends = [s.end for s in sc_heuristic(text, pattern)]
            assert ends == sorted(ends)

    def test_complete_for_unit_lengths(self):
        """With lambda = (1, 1) the heuristic finds every segmentation."""
        rng = random.Random(31)
        failures = []
        for _ in range(300):
            text, pattern = random_instance(rng, lambda_bounds=(1, 1))
            if sc_heuristic(text, pattern) != enumerate_segmentations(text, pattern):
                failures.append((text, pattern))
        assert failures == []

    def test_operation_bound(self):
        """reduce + extend + look_ahead calls stay within 4n."""
        rng = random.Random(99)
        for _ in range(300):
            text, pattern = random_instance(rng)
            stats = RunStats()
            sc_heuristic(text, pattern, stats)
            assert stats.operations <= 4 * len(text)

    def test_space_bound(self):
        """The prefix structure never holds more than 2m entries."""
        rng = random.Random(64)
        for _ in range(300):
            text, pattern = random_instance(rng)
            stats = RunStats()
            sc_heuristic(text, pattern, stats)
            assert stats.high_water <= 2 * pattern.m


class TestAdversarialInstance:
    """Tests for adversarial_instance."""

    def test_small_instance(self):
        """m = 1, lambda_max = 2 gives "010"."""
        text, pattern = adversarial_instance(1, 2)
        assert text == "010"
        assert (pattern.lambda_min, pattern.lambda_max, pattern.mu) == (2, 2, ONE)

    def test_two_by_three(self):
        """m = 2, lambda_max = 3 gives "00100200"."""
        text, _ = adversarial_instance(2, 3)
        assert text == "00100200"

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    @pytest.mark.parametrize("lambda_max", [2, 3, 4, 5])
    def test_heuristic_finds_one_of_lambda_max(self, m, lambda_max):
        """The oracle finds lambda_max segmentations, the heuristic exactly one."""
        text, pattern = adversarial_instance(m, lambda_max)
        assert len(enumerate_segmentations(text, pattern)) == lambda_max
        found = sc_heuristic(text, pattern)
        assert len(found) == 1
        assert found[0].start == 1

    @pytest.mark.parametrize("args", [(0, 2), (1, 1), (36, 2)])
    def test_invalid_arguments(self, args):
        """m must be in range and lambda_max at least 2."""
        with pytest.raises(PreconditionError):
            adversarial_instance(*args)

    def test_single_occurrence_degree(self):
        """The marker symbol holds only at full length with one marker."""
        sigma = Alphabet("01")
        symbol = SingleOccurrence("alpha1", sigma, "1", 3)
        assert symbol.degree_of("010") == ONE
        assert symbol.degree_of("011") == 0
        assert symbol.degree_of("01") == 0


class TestCharTablePatterns:
    """Segmentation patterns built from table symbols."""

    def test_matches_fuzzy_scan(self, tables_case):
        """A lambda = (1, 1) pattern of table symbols finds the fuzzy matches."""
        text, fuzzy = tables_case
        pattern = Pattern(fuzzy.symbols, 1, 1, fuzzy.mu)
        assert [s.start for s in sc_heuristic(text, pattern)] == [3, 5]

    def test_unlisted_degree(self):
        """A table without an entry gives 0 for that character."""
        sigma = Alphabet("ab")
        pattern = Pattern([CharTable("A", sigma, {"a": ONE})], 1, 1, degree_from_ratio(1, 2))
        assert [s.start for s in sc_heuristic("abba", pattern)] == [1, 4]
