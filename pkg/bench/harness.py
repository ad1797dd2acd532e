"""
Benchmark harness for complexity-shape checks.

Runs the engines on a ladder of synthetic instances and records exact
event counts next to wall time. Growth is judged on the counts, never on
the clock: doubling n should roughly double matching work and quadruple
DP work.

Provides:
- RunReport: one engine run (sizes, counters, wall time)
- bench_matching / bench_segmentation / bench_decomposition: size ladders
- bench_lambda_ratios / doubling_bounds: a λ₂/λ₁ ladder at fixed n
- growth_ratios / fitted_slope / check_ratios: acceptance helpers
- envelope_ratios / within_envelope: the m·n·λ₂/λ₁ bound on a λ ladder
- format_reports_tsv: the `bench` command's output
"""

import logging
import random
import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from django_fuzzy_segmentation.engine.global_seg import GlobalProblem, gs_memoization
from django_fuzzy_segmentation.engine.local_seg import Pattern, sc_heuristic
from django_fuzzy_segmentation.engine.matching import FuzzyPattern, fuzzy_string_matching
from django_fuzzy_segmentation.engine.measure import Accumulator, Degree, degree_from_ratio
from django_fuzzy_segmentation.engine.stats import RunStats
from django_fuzzy_segmentation.engine.symbols import Alphabet, CharTable, MaxRun, RelativeCount

logger = logging.getLogger(__name__)

TSV_HEADER = (
    "problem",
    "n",
    "m",
    "lambda_min",
    "lambda_max",
    "reduce",
    "extend",
    "look_ahead",
    "degree_evals",
    "cells",
    "wall_seconds",
)

BINARY = Alphabet("01")
_TABLE_DEGREES = [degree_from_ratio(k, 4) for k in range(5)]


@dataclass
class RunReport:
    """Sizes, exact counters and wall time of one engine run."""

    problem: str
    n: int
    m: int
    lambda_min: int
    lambda_max: Optional[int]
    stats: RunStats = field(default_factory=RunStats)
    wall_seconds: float = 0.0

    @property
    def work(self) -> int:
        """The counter whose growth is checked: candidates for DP, operations otherwise."""
        if self.problem == "decompose":
            return self.stats.candidates
        return self.stats.operations

    @property
    def envelope(self) -> float:
        """m·n·λ₂/λ₁, the shape bounding local segmentation work."""
        upper = self.lambda_max if self.lambda_max is not None else self.lambda_min
        return self.m * self.n * upper / self.lambda_min

    def to_row(self) -> list[str]:
        s = self.stats
        return [
            self.problem,
            str(self.n),
            str(self.m),
            str(self.lambda_min),
            "-" if self.lambda_max is None else str(self.lambda_max),
            str(s.reduce_calls),
            str(s.extend_calls),
            str(s.look_ahead_calls),
            str(s.degree_evals),
            str(s.cells),
            f"{self.wall_seconds:.6f}",
        ]


def random_text(rng: random.Random, n: int, alphabet: Alphabet = BINARY) -> str:
    """Uniform random text over the alphabet."""
    return "".join(rng.choice(alphabet.characters) for _ in range(n))


def random_fuzzy_pattern(rng: random.Random, m: int, alphabet: Alphabet = BINARY) -> FuzzyPattern:
    """
    m char_table symbols with degrees drawn from {0, 1/4, 1/2, 3/4, 1}; μ = 1/2.

    One character of every symbol gets degree 1, so each symbol matches something.
    """
    symbols = []
    for k in range(1, m + 1):
        table = {c: rng.choice(_TABLE_DEGREES) for c in alphabet}
        table[rng.choice(alphabet.characters)] = _TABLE_DEGREES[-1]
        symbols.append(CharTable(f"F{k}", alphabet, table))
    return FuzzyPattern(symbols, degree_from_ratio(1, 2))


def binary_symbols(m: int) -> list:
    """Cycle through the four binary symbols: share of 0s, share of 1s, longest 0-run, longest 1-run."""
    catalogue = [
        RelativeCount("a0", BINARY, "0"),
        RelativeCount("a1", BINARY, "1"),
        MaxRun("a2", BINARY, "0"),
        MaxRun("a3", BINARY, "1"),
    ]
    return [catalogue[k % len(catalogue)] for k in range(m)]


def _timed(report: RunReport, run) -> RunReport:
    started = time.perf_counter()
    run(report.stats)
    report.wall_seconds = time.perf_counter() - started
    logger.debug(f"bench {report.problem} n={report.n}: work={report.work} in {report.wall_seconds:.3f}s")
    return report


def bench_matching(sizes: Sequence[int], m: int = 4, seed: int = 0) -> list[RunReport]:
    """Fuzzy string matching on random binary texts of each size, one fixed pattern."""
    rng = random.Random(seed)
    pattern = random_fuzzy_pattern(rng, m)
    reports = []
    for n in sizes:
        text = random_text(rng, n)
        report = RunReport("match", n, m, 1, 1)
        reports.append(_timed(report, lambda stats: fuzzy_string_matching(text, pattern, stats)))
    return reports


def bench_segmentation(
    sizes: Sequence[int],
    m: int = 3,
    lambda_min: int = 2,
    lambda_max: int = 3,
    mu: Degree = degree_from_ratio(2, 3),
    seed: int = 0,
) -> list[RunReport]:
    """SC-Heuristic on random binary texts of each size."""
    rng = random.Random(seed)
    pattern = Pattern(binary_symbols(m), lambda_min, lambda_max, mu)
    reports = []
    for n in sizes:
        text = random_text(rng, n)
        report = RunReport("segment", n, m, lambda_min, lambda_max)
        reports.append(_timed(report, lambda stats: sc_heuristic(text, pattern, stats)))
    return reports


def bench_lambda_ratios(
    n: int,
    bounds: Sequence[tuple[int, int]],
    m: int = 3,
    mu: Degree = degree_from_ratio(2, 3),
    seed: int = 0,
) -> list[RunReport]:
    """SC-Heuristic on one random text of length n, once per (λ₁, λ₂) pair."""
    rng = random.Random(seed)
    text = random_text(rng, n)
    reports = []
    for lambda_min, lambda_max in bounds:
        pattern = Pattern(binary_symbols(m), lambda_min, lambda_max, mu)
        report = RunReport("segment", n, m, lambda_min, lambda_max)
        reports.append(_timed(report, lambda stats: sc_heuristic(text, pattern, stats)))
    return reports


def doubling_bounds(lambda_min: int, steps: int) -> list[tuple[int, int]]:
    """(λ₁, λ₁), (λ₁, 2λ₁), (λ₁, 4λ₁), ...: λ₂/λ₁ doubles at every step."""
    return [(lambda_min, lambda_min * 2**k) for k in range(steps)]


def bench_decomposition(
    sizes: Sequence[int],
    m: int = 3,
    lambda_min: int = 1,
    accumulator: Accumulator = Accumulator.PRODUCT,
    seed: int = 0,
) -> list[RunReport]:
    """GS-Memoization on random binary texts of each size."""
    rng = random.Random(seed)
    problem = GlobalProblem(binary_symbols(m), lambda_min, accumulator)
    reports = []
    for n in sizes:
        text = random_text(rng, n)
        report = RunReport("decompose", n, m, lambda_min, None)
        reports.append(_timed(report, lambda stats: gs_memoization(text, problem, stats)))
    return reports


def growth_ratios(reports: Sequence[RunReport]) -> list[float]:
    """work[k+1] / work[k] for consecutive reports."""
    return [after.work / before.work for before, after in zip(reports, reports[1:])]


def fitted_slope(reports: Sequence[RunReport]) -> float:
    """Least-squares slope of log(work) against log(n)."""
    n = np.log(np.array([r.n for r in reports], dtype=float))
    work = np.log(np.array([max(r.work, 1) for r in reports], dtype=float))
    slope, _ = np.polyfit(n, work, 1)
    return float(slope)


def check_ratios(reports: Sequence[RunReport], low: float, high: float) -> bool:
    """True if every consecutive growth ratio lies in [low, high]."""
    return all(low <= ratio <= high for ratio in growth_ratios(reports))


def envelope_ratios(reports: Sequence[RunReport]) -> list[float]:
    """envelope[k+1] / envelope[k] for consecutive reports."""
    return [after.envelope / before.envelope for before, after in zip(reports, reports[1:])]


def within_envelope(reports: Sequence[RunReport]) -> bool:
    """True if no step's work grows faster than its m·n·λ₂/λ₁ envelope."""
    return all(
        work <= envelope
        for work, envelope in zip(growth_ratios(reports), envelope_ratios(reports))
    )


def format_reports_tsv(reports: Sequence[RunReport], header: bool = True) -> str:
    lines = ["\t".join(TSV_HEADER)] if header else []
    lines.extend("\t".join(report.to_row()) for report in reports)
    return "\n".join(lines) + "\n"
