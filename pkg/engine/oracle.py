"""
Brute-force references for every problem.

These enumerate the search space directly from the definitions and stay
deliberately naive. Each enumeration stops with EnumerationLimitError once
it has looked at more than `cap` candidates.
"""

import logging
from typing import Iterator, Optional, Sequence, Union

from django_fuzzy_segmentation.engine.global_seg import Decomposition, GlobalProblem
from django_fuzzy_segmentation.engine.local_seg import Pattern, Segmentation
from django_fuzzy_segmentation.engine.matching import FuzzyPattern, MatchPosition, as_segmentation_pattern
from django_fuzzy_segmentation.engine.measure import Degree
from django_fuzzy_segmentation.engine.prefix import Segment
from django_fuzzy_segmentation.engine.symbols import degree_of
from django_fuzzy_segmentation.exceptions import EnumerationLimitError

logger = logging.getLogger(__name__)

DEFAULT_ENUMERATION_CAP = 1_000_000


class _Budget:
    def __init__(self, cap: int):
        self.cap = cap
        self.used = 0

    def spend(self) -> None:
        self.used += 1
        if self.used > self.cap:
            raise EnumerationLimitError(
                f"Enumeration exceeded {self.cap} candidates; raise the cap to continue",
                cap=self.cap,
            )


def enumerate_segmentations(
    text: str, pattern: Pattern, cap: int = DEFAULT_ENUMERATION_CAP
) -> list[Segmentation]:
    """
    All valid (P, λ, μ)-segmentations of text.

    Ordered by start position, then lexicographically by the vector of
    segment lengths.

    Raises:
        AlphabetError: If text has a character outside the alphabet.
        EnumerationLimitError: If more than cap partial candidates are examined.
    """
    pattern.alphabet.validate(text)
    n, m = len(text), pattern.m
    budget = _Budget(cap)
    found: list[Segmentation] = []

    def walk(low: int, chosen: list[Segment]) -> None:
        if len(chosen) == m:
            found.append(Segmentation.of(text, pattern, chosen))
            return
        for length in range(pattern.lambda_min, pattern.lambda_max + 1):
            high = low + length - 1
            if high > n:
                break
            budget.spend()
            segment = Segment(low, high)
            if pattern.matches(len(chosen), segment.slice(text)):
                chosen.append(segment)
                walk(high + 1, chosen)
                chosen.pop()

    for start in range(1, n + 1):
        walk(start, [])

    logger.debug(f"Oracle: {len(found)} segmentation(s) after {budget.used} candidate(s)")
    return found


def enumerate_match_positions(
    text: str, pattern: FuzzyPattern, cap: int = DEFAULT_ENUMERATION_CAP
) -> list[MatchPosition]:
    """Match positions as the starts of all λ = (1, 1) segmentations."""
    return [
        found.start
        for found in enumerate_segmentations(text, as_segmentation_pattern(pattern), cap)
    ]


def check_valid(
    text: str, pattern: Pattern, candidate: Union[Segmentation, Sequence[Segment]]
) -> bool:
    """True iff candidate is m adjacent in-text segments that each match their symbol."""
    segments = candidate.segments if isinstance(candidate, Segmentation) else tuple(candidate)
    if len(segments) != pattern.m:
        return False
    for index, segment in enumerate(segments):
        if segment.high > len(text):
            return False
        if index > 0 and segment.low != segments[index - 1].high + 1:
            return False
        if not pattern.matches(index, segment.slice(text)):
            return False
    return True


# =============================================================================
# Global decompositions
# =============================================================================

def enumerate_decompositions(
    text: str, problem: GlobalProblem, cap: int = DEFAULT_ENUMERATION_CAP
) -> Iterator[Decomposition]:
    """
    Yield every (m, λ)-decomposition of text with its value, in lexicographic order of cuts.

    Raises:
        InfeasibleError: If m * λ > n.
        EnumerationLimitError: If more than cap decompositions are generated.
    """
    problem.alphabet.validate(text)
    n, m, lam = len(text), problem.m, problem.lambda_min
    problem.check_feasible(n)
    budget = _Budget(cap)

    def cuts(low: int, remaining: int) -> Iterator[list[Segment]]:
        if remaining == 1:
            yield [Segment(low, n)]
            return
        # Leave room for the remaining segments
        for high in range(low + lam - 1, n - (remaining - 1) * lam + 1):
            for rest in cuts(high + 1, remaining - 1):
                yield [Segment(low, high)] + rest

    for segments in cuts(1, m):
        budget.spend()
        degrees = tuple(
            degree_of(symbol, seg.slice(text)) for symbol, seg in zip(problem.symbols, segments)
        )
        yield Decomposition(tuple(segments), problem.accumulator.fold(degrees), degrees)


def best_decomposition(
    text: str, problem: GlobalProblem, cap: int = DEFAULT_ENUMERATION_CAP
) -> tuple[Degree, list[Decomposition]]:
    """
    The optimal value and every decomposition attaining it.

    Witnesses are listed in lexicographic order of their cuts.
    """
    best: Optional[Degree] = None
    witnesses: list[Decomposition] = []
    for candidate in enumerate_decompositions(text, problem, cap):
        if best is None or candidate.value > best:
            best, witnesses = candidate.value, [candidate]
        elif candidate.value == best:
            witnesses.append(candidate)
    return best, witnesses


def check_decomposition(
    text: str, problem: GlobalProblem, candidate: Union[Decomposition, Sequence[Segment]]
) -> bool:
    """True iff candidate is m adjacent segments of length >= λ covering text[1..n]."""
    segments = candidate.segments if isinstance(candidate, Decomposition) else tuple(candidate)
    if len(segments) != problem.m or not segments:
        return False
    if segments[0].low != 1 or segments[-1].high != len(text):
        return False
    for index, segment in enumerate(segments):
        if segment.length < problem.lambda_min:
            return False
        if index > 0 and segment.low != segments[index - 1].high + 1:
            return False
    if isinstance(candidate, Decomposition):
        degrees = [
            degree_of(symbol, seg.slice(text)) for symbol, seg in zip(problem.symbols, segments)
        ]
        return problem.accumulator.fold(degrees) == candidate.value
    return True
