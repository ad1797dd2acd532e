"""Tests for global segmentation by dynamic programming."""

import random

import pytest

from django_fuzzy_segmentation.engine.global_seg import (
    Decomposition,
    GlobalProblem,
    decompose,
    gs_extract,
    gs_memoization,
    sigma,
)
from django_fuzzy_segmentation.engine.measure import ONE, Accumulator, Degree
from django_fuzzy_segmentation.engine.oracle import best_decomposition, check_decomposition
from django_fuzzy_segmentation.engine.prefix import Segment
from django_fuzzy_segmentation.engine.stats import RunStats
from django_fuzzy_segmentation.engine.symbols import Alphabet, MaxRun, RelativeCount, degree_of
from django_fuzzy_segmentation.exceptions import (
    AlphabetError,
    ArityError,
    InfeasibleError,
    PreconditionError,
)


def random_problem(rng: random.Random, accumulator: Accumulator):
    alphabet = Alphabet("01")
    m = rng.randint(1, 4)
    lam = rng.randint(1, 3)
    symbols = [
        rng.choice([RelativeCount, MaxRun])(f"s{k}", alphabet, rng.choice(["0", "1"]))
        for k in range(m)
    ]
    n = rng.randint(m * lam, m * lam + 8)
    text = "".join(rng.choice("01") for _ in range(n))
    return text, GlobalProblem(symbols, lam, accumulator)


class TestGlobalProblem:
    """Tests for GlobalProblem validation."""

    def test_requires_symbols(self):
        """An empty pattern is rejected."""
        with pytest.raises(PreconditionError):
            GlobalProblem([], 1)

    def test_requires_positive_lambda(self, alphas):
        """lambda must be at least 1."""
        with pytest.raises(PreconditionError):
            GlobalProblem([alphas["a0"]], 0)

    def test_rejects_table_symbols(self, sml_tables):
        """Symbols restricted to one length cannot be used without an upper bound."""
        with pytest.raises(ArityError):
            GlobalProblem([sml_tables[0]], 1)

    def test_default_accumulator(self, alphas):
        """The product is the default accumulator."""
        assert GlobalProblem([alphas["a0"]], 1).accumulator is Accumulator.PRODUCT

    def test_infeasible(self, product_case):
        """m * lambda > n raises InfeasibleError with exit code 2."""
        _, problem = product_case
        with pytest.raises(InfeasibleError) as exc_info:
            problem.check_feasible(5)
        assert exc_info.value.exit_code == 2


class TestGsMemoization:
    """Tests for gs_memoization and gs_extract."""

    def test_product_case(self, product_case):
        """The optimum is 3/5 with segments 1-5 6-8 9-12."""
        text, problem = product_case
        tables, found = decompose(text, problem)
        assert tables.value == Degree(3, 5)
        assert found.segments == (Segment(1, 5), Segment(6, 8), Segment(9, 12))
        assert found.degrees == (Degree(4, 5), ONE, Degree(3, 4))
        assert found.format_segments() == "1-5 6-8 9-12"

    def test_product_case_cells(self, product_case):
        """The back-pointers walked by extraction."""
        text, problem = product_case
        tables = gs_memoization(text, problem)
        assert tables.s(3, 12) == Degree(3, 5)
        assert tables.b(3, 12) == 9
        assert tables.b(2, 8) == 6

    def test_product_case_golden(self, product_case, fixtures_dir):
        """The value and segments agree with the golden file."""
        text, problem = product_case
        _, found = decompose(text, problem)
        expected = (fixtures_dir / "product_case" / "expected_decompose.txt").read_text().splitlines()
        assert [str(found.value), found.format_segments()] == expected

    def test_sigma(self, product_case):
        """sigma is s[m, n]."""
        text, problem = product_case
        assert sigma(text, problem) == Degree(3, 5)

    def test_unit_lambda(self, unit_product_case):
        """With lambda = 1 the optimum stays 3/5 and the extraction is one of the oracle's witnesses."""
        text, problem = unit_product_case
        tables, found = decompose(text, problem)
        assert sigma(text, problem) == Degree(3, 5)
        _, witnesses = best_decomposition(text, problem)
        assert found.segments in [w.segments for w in witnesses]
        assert found.value == tables.value == Degree(3, 5)

    def test_single_symbol(self, alphas):
        """With m = 1 the only decomposition is the whole text."""
        problem = GlobalProblem([alphas["a1"]], 2)
        tables, found = decompose("10110", problem)
        assert tables.value == Degree(3, 5)
        assert found.segments == (Segment(1, 5),)

    def test_exact_fit(self, alphas):
        """With m * lambda = n every segment has length lambda."""
        problem = GlobalProblem([alphas["a0"], alphas["a1"]], 2)
        _, found = decompose("0011", problem)
        assert found.segments == (Segment(1, 2), Segment(3, 4))
        assert found.value == ONE

    def test_infeasible(self, product_case):
        """A text shorter than m * lambda is rejected."""
        _, problem = product_case
        with pytest.raises(InfeasibleError):
            gs_memoization("10110", problem)

    def test_alphabet_violation(self, product_case):
        """Text characters must belong to the alphabet."""
        _, problem = product_case
        with pytest.raises(AlphabetError):
            gs_memoization("1011102", problem)

    def test_cells_outside_region(self, product_case):
        """Undefined cells raise IndexError."""
        text, problem = product_case
        tables = gs_memoization(text, problem)
        with pytest.raises(IndexError):
            tables.s(1, 1)
        with pytest.raises(IndexError):
            tables.s(3, 5)
        with pytest.raises(IndexError):
            tables.b(1, 5)
        with pytest.raises(IndexError):
            tables.s(4, 12)

    def test_extract_rejects_foreign_tables(self, product_case):
        """Tables built for another text cannot be walked."""
        text, problem = product_case
        tables = gs_memoization(text, problem)
        with pytest.raises(PreconditionError):
            gs_extract(tables, text + "1", problem)

    def test_to_tsv(self, product_case):
        """One line per defined cell after the header."""
        text, problem = product_case
        lines = gs_memoization(text, problem).to_tsv().splitlines()
        assert lines[0] == "i\tj\ts\tb"
        # Rows cover j in [2i, 12]: 11 + 9 + 7 cells
        assert len(lines) == 1 + 11 + 9 + 7
        assert lines[-1] == "3\t12\t3/5\t9"
        assert lines[1].startswith("1\t2\t") and lines[1].endswith("\t-")

    def test_observer_sees_left_extensions(self, product_case):
        """Every candidate degree equals the degree of T[k..j], in decreasing k per cell."""
        text, problem = product_case
        seen = []
        gs_memoization(text, problem, observer=lambda i, j, k, d: seen.append((i, j, k, d)))
        for i, j, k, d in seen:
            assert d == degree_of(problem.symbols[i - 1], text[k - 1 : j])
        cell = [k for i, j, k, _ in seen if (i, j) == (3, 12)]
        assert cell == list(range(11, 4, -1))

    def test_stats(self, product_case):
        """Cells and candidates are counted."""
        text, problem = product_case
        stats = RunStats()
        gs_memoization(text, problem, stats)
        assert stats.cells == 11 + 9 + 7
        # Row i, column j examines j - 2i + 1 candidates
        expected = sum(j - 2 * i + 1 for i in (2, 3) for j in range(2 * i, 13))
        assert stats.candidates == expected

    def test_zero_value_still_extracts(self, alphas):
        """When every decomposition has value 0 a valid one is still returned."""
        problem = GlobalProblem([alphas["a0"], alphas["a0"]], 1)
        tables, found = decompose("111", problem)
        assert tables.value == 0
        assert check_decomposition("111", problem, found)

    @pytest.mark.parametrize("accumulator", list(Accumulator))
    def test_optimal_against_oracle(self, accumulator):
        """On 300 random instances the DP value is the brute-force optimum and the extraction a witness."""
        rng = random.Random(300 + len(accumulator.value))
        failures = []
        for _ in range(300):
            text, problem = random_problem(rng, accumulator)
            tables, found = decompose(text, problem)
            best, witnesses = best_decomposition(text, problem)
            ok = (
                tables.value == best
                and found.segments in [w.segments for w in witnesses]
                and check_decomposition(text, problem, found)
            )
            if not ok:
                failures.append((text, problem))
        assert failures == []

    def test_optimal_substructure(self):
        """Every cell s[i, j] is the optimum of P[1..i] over T[1..j]."""
        rng = random.Random(12)
        for _ in range(60):
            text, problem = random_problem(rng, Accumulator.PRODUCT)
            tables = gs_memoization(text, problem)
            for i in range(1, problem.m + 1):
                sub = GlobalProblem(problem.symbols[:i], problem.lambda_min, problem.accumulator)
                for j in range(i * problem.lambda_min, len(text) + 1):
                    best, _ = best_decomposition(text[:j], sub)
                    assert tables.s(i, j) == best

    def test_decomposition_value_is_fold(self, product_case):
        """The value equals the folded segment degrees."""
        text, problem = product_case
        _, found = decompose(text, problem)
        assert isinstance(found, Decomposition)
        assert problem.accumulator.fold(found.degrees) == found.value
