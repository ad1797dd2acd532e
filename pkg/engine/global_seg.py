"""
Global segmentation by dynamic programming.

An (m, λ)-decomposition cuts the whole text into m adjacent segments of
length at least λ. Its value is the ⊗-fold of the segment degrees under
the pattern symbols; σ(T) is the best value. With s[i, j] the best value
of P[1..i] over T[1..j]:

    s[1, j] = μ_{P[1]}(T[1..j])
    s[i, j] = max over k in [(i-1)λ+1, j-λ+1] of s[i-1, k-1] ⊗ μ_{P[i]}(T[k..j])

and b[i, j] records the start k of the last segment. The k-loop walks
downward, extending one evaluator to the left, so each candidate costs
O(1) and the whole table O(mn²).
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Optional

from django_fuzzy_segmentation.engine.measure import ZERO, Accumulator, Degree, format_degree
from django_fuzzy_segmentation.engine.prefix import Segment
from django_fuzzy_segmentation.engine.stats import RunStats
from django_fuzzy_segmentation.engine.symbols import Alphabet, degree_of
from django_fuzzy_segmentation.exceptions import (
    AlphabetError,
    ArityError,
    InfeasibleError,
    PreconditionError,
)

logger = logging.getLogger(__name__)

Observer = Callable[[int, int, int, Degree], None]


@dataclass(frozen=True)
class GlobalProblem:
    """
    A (P, λ) global segmentation problem.

    Attributes:
        symbols: P[1..m]; every symbol must be defined on strings of any length.
        lambda_min: λ, the minimum segment length. There is no maximum.
        accumulator: How segment degrees combine into a decomposition value.
    """

    symbols: tuple
    lambda_min: int
    accumulator: Accumulator = Accumulator.PRODUCT

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if not self.symbols:
            raise PreconditionError("A pattern needs at least one symbol")
        if self.lambda_min < 1:
            raise PreconditionError(f"lambda_min must be positive, got {self.lambda_min}")
        alphabet = self.symbols[0].alphabet
        for symbol in self.symbols:
            if symbol.alphabet != alphabet:
                raise AlphabetError(f"Symbol {symbol.name!r} uses a different alphabet")
            if symbol.max_length is not None:
                raise ArityError(
                    f"Symbol {symbol.name!r} is defined only on strings of length "
                    f"{symbol.max_length} and cannot be used without an upper length bound"
                )

    @property
    def m(self) -> int:
        return len(self.symbols)

    @property
    def alphabet(self) -> Alphabet:
        return self.symbols[0].alphabet

    def check_feasible(self, n: int) -> None:
        if self.m * self.lambda_min > n:
            raise InfeasibleError(
                f"No ({self.m}, {self.lambda_min})-decomposition of a text of length {n}: "
                f"m * lambda = {self.m * self.lambda_min} > {n}"
            )


@dataclass(frozen=True)
class Decomposition:
    """m adjacent segments covering the text, with their ⊗-folded value."""

    segments: tuple
    value: Degree
    degrees: tuple = field(default=())

    def format_segments(self) -> str:
        return " ".join(str(s) for s in self.segments)


class DpTables:
    """
    The s and b tables over their defined region only.

    Row i of s covers j in [iλ, n]; b has rows 2..m over the same columns.
    Both are stored densely with a per-row offset.
    """

    def __init__(self, n: int, m: int, lambda_min: int):
        self.n = n
        self.m = m
        self.lambda_min = lambda_min
        self._s: list[list[Degree]] = []
        self._b: list[list[int]] = []

    def _column(self, i: int, j: int, first_row: int) -> int:
        if not first_row <= i <= self.m or not i * self.lambda_min <= j <= self.n:
            raise IndexError(f"Cell ({i}, {j}) is outside the defined region")
        return j - i * self.lambda_min

    def s(self, i: int, j: int) -> Degree:
        """Best value of P[1..i] over T[1..j]."""
        return self._s[i - 1][self._column(i, j, 1)]

    def b(self, i: int, j: int) -> int:
        """Start of the last segment in an optimal decomposition for s[i, j] (i >= 2)."""
        return self._b[i - 2][self._column(i, j, 2)]

    @property
    def value(self) -> Degree:
        return self.s(self.m, self.n)

    def to_tsv(self) -> str:
        """Tab-separated dump, one line per defined cell: i, j, s[i, j], b[i, j] ("-" for row 1)."""
        lines = ["i\tj\ts\tb"]
        for i in range(1, self.m + 1):
            for j in range(i * self.lambda_min, self.n + 1):
                b = str(self.b(i, j)) if i >= 2 else "-"
                lines.append(f"{i}\t{j}\t{format_degree(self.s(i, j))}\t{b}")
        return "\n".join(lines) + "\n"


def gs_memoization(
    text: str,
    problem: GlobalProblem,
    stats: Optional[RunStats] = None,
    observer: Optional[Observer] = None,
) -> DpTables:
    """
    Fill the s and b tables.

    Ties keep the largest k. A cell whose candidates are all 0 gets
    b[i, j] = j-λ+1, so extraction always yields a valid decomposition.

    Args:
        text: The text to decompose.
        problem: Pattern, λ and accumulator.
        stats: Optional counters (cells, candidates, degree evaluations).
        observer: Optional hook, called as observer(i, j, k, degree) for
            every candidate with degree = μ_{P[i]}(T[k..j]).

    Raises:
        AlphabetError: If text has a character outside the alphabet.
        InfeasibleError: If m * λ > n.
    """
    problem.alphabet.validate(text)
    n, m, lam = len(text), problem.m, problem.lambda_min
    problem.check_feasible(n)
    combine = problem.accumulator.combine
    symbols = problem.symbols
    tables = DpTables(n, m, lam)

    logger.debug(f"GS-Memoization: n={n} m={m} lambda={lam} acc={problem.accumulator.value}")

    ev = symbols[0].evaluator()
    row: list[Degree] = []
    for j in range(1, n + 1):
        ev = ev.extend_right(text[j - 1])
        if j >= lam:
            row.append(ev.degree())
            if observer is not None:
                observer(1, j, 1, row[-1])
    tables._s.append(row)
    if stats is not None:
        stats.cells += len(row)
        stats.degree_evals += n

    for i in range(2, m + 1):
        symbol = symbols[i - 1]
        previous = tables._s[i - 2]
        previous_offset = (i - 1) * lam
        s_row: list[Degree] = []
        b_row: list[int] = []
        for j in range(i * lam, n + 1):
            # Evaluator over T[j-λ+2..j]; each k step prepends T[k]
            ev = symbol.evaluator()
            for position in range(j, j - lam + 1, -1):
                ev = ev.extend_left(text[position - 1])
            best, best_k = ZERO, j - lam + 1
            for k in range(j - lam + 1, (i - 1) * lam, -1):
                ev = ev.extend_left(text[k - 1])
                degree = ev.degree()
                if observer is not None:
                    observer(i, j, k, degree)
                r = combine(previous[k - 1 - previous_offset], degree)
                if r > best:
                    best, best_k = r, k
            s_row.append(best)
            b_row.append(best_k)
            if stats is not None:
                stats.cells += 1
                stats.candidates += j - lam + 1 - (i - 1) * lam
                stats.degree_evals += j - (i - 1) * lam
        tables._s.append(s_row)
        tables._b.append(b_row)

    logger.debug(f"GS-Memoization finished: sigma={format_degree(tables.value)}")
    return tables


def gs_extract(tables: DpTables, text: str, problem: GlobalProblem) -> Decomposition:
    """
    Walk b back from (m, n) and return the optimal decomposition, first segment first.

    Raises:
        PreconditionError: If the tables were built for another text size or pattern length.
    """
    n, m = len(text), problem.m
    if tables.n != n or tables.m != m or tables.lambda_min != problem.lambda_min:
        raise PreconditionError("DP tables do not belong to this text and problem")

    segments: list[Segment] = []
    j = n
    for i in range(m, 1, -1):
        k = tables.b(i, j)
        segments.append(Segment(k, j))
        j = k - 1
    segments.append(Segment(1, j))
    segments.reverse()

    degrees = tuple(
        degree_of(symbol, seg.slice(text)) for symbol, seg in zip(problem.symbols, segments)
    )
    return Decomposition(tuple(segments), tables.value, degrees)


def sigma(text: str, problem: GlobalProblem) -> Degree:
    """The optimal decomposition value σ(T) = s[m, n]."""
    return gs_memoization(text, problem).value


def decompose(
    text: str, problem: GlobalProblem, stats: Optional[RunStats] = None
) -> tuple[DpTables, Decomposition]:
    """Fill the tables and extract an optimal decomposition."""
    tables = gs_memoization(text, problem, stats)
    return tables, gs_extract(tables, text, problem)
