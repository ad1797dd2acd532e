"""
Fuzzy string matching.

The λ₁ = λ₂ = 1 specialization of local segmentation, where every pattern
symbol is a fuzzy subset of the alphabet. The scan reports every position
s with μ_{P[k]}(T[s+k-1]) >= μ for all k, in O(mn) time and O(m) space.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Optional

from django_fuzzy_segmentation.engine.local_seg import Pattern
from django_fuzzy_segmentation.engine.measure import Degree
from django_fuzzy_segmentation.engine.prefix import PrefixStructure, Segment
from django_fuzzy_segmentation.engine.stats import RunStats
from django_fuzzy_segmentation.engine.symbols import Alphabet, CharTable
from django_fuzzy_segmentation.exceptions import (
    AlphabetError,
    ArityError,
    PreconditionError,
)

logger = logging.getLogger(__name__)

# A 1-indexed start position of a match
MatchPosition = int


@dataclass(frozen=True)
class FuzzyPattern:
    """A sequence of fuzzy symbols with a threshold degree."""

    symbols: tuple
    mu: Degree

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        object.__setattr__(self, "mu", Degree(self.mu))
        if not self.symbols:
            raise PreconditionError("A fuzzy pattern needs at least one symbol")
        alphabet = self.symbols[0].alphabet
        for symbol in self.symbols:
            if not isinstance(symbol, CharTable):
                raise ArityError(f"Symbol {symbol.name!r} is not a unit-length fuzzy symbol")
            if symbol.alphabet != alphabet:
                raise AlphabetError(f"Symbol {symbol.name!r} uses a different alphabet")

    # Segment bounds seen by the prefix structure
    lambda_min = 1
    lambda_max = 1

    @property
    def m(self) -> int:
        return len(self.symbols)

    @property
    def alphabet(self) -> Alphabet:
        return self.symbols[0].alphabet


def as_segmentation_pattern(pattern: FuzzyPattern) -> Pattern:
    """The equivalent segmentation pattern with λ = (1, 1)."""
    return Pattern(pattern.symbols, 1, 1, pattern.mu)


def fuzzy_string_matching(
    text: str,
    pattern: FuzzyPattern,
    stats: Optional[RunStats] = None,
    trace: Optional[Callable[[int, PrefixStructure], None]] = None,
) -> list[MatchPosition]:
    """
    Report all (P, μ)-match positions of text in ascending order.

    Args:
        text: The text to scan.
        pattern: The fuzzy pattern.
        stats: Optional counters.
        trace: Optional callback, called as trace(i, structure) after each character.

    Raises:
        AlphabetError: If text has a character outside the pattern alphabet.
    """
    pattern.alphabet.validate(text)
    n, m = len(text), pattern.m
    if m > n:
        return []

    symbols, mu = pattern.symbols, pattern.mu
    structure = PrefixStructure(text, pattern, stats)
    positions: list[MatchPosition] = []

    for i, c in enumerate(text, start=1):
        while structure.q > 0 and symbols[structure.q].char_degree(c) < mu:
            structure.reduce()
        if stats is not None:
            stats.degree_evals += 1
        if symbols[structure.q].char_degree(c) >= mu:
            structure.extend(Segment(i, i))
            if structure.is_full():
                positions.append(i - m + 1)
                structure.reduce()
        if trace is not None:
            trace(i, structure)

    logger.debug(f"Fuzzy matching: n={n} m={m} mu={mu} -> {len(positions)} position(s)")
    return positions


def naive_match(text: str, pattern: FuzzyPattern) -> list[MatchPosition]:
    """Check every start position directly. O(mn)."""
    pattern.alphabet.validate(text)
    n, m = len(text), pattern.m
    return [
        s
        for s in range(1, n - m + 2)
        if all(
            symbol.char_degree(text[s + k - 1]) >= pattern.mu
            for k, symbol in enumerate(pattern.symbols)
        )
    ]
