"""
Local segmentation: the SC-Heuristic.

A fuzzy segmentation pattern P[1..m] with constraints (λ₁, λ₂, μ) matches
m adjacent text segments when every segment has length in [λ₁, λ₂] and
matches its symbol with degree >= μ. The SC-Heuristic scans the text once,
keeping a prefix structure of the segments matched so far and falling back
along its border chain on a mismatch, like KMP.

The heuristic does not find every valid segmentation; adversarial_instance
builds texts on which it finds exactly one of λ₂.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from django_fuzzy_segmentation.engine.measure import ONE, ZERO, Degree, format_degree
from django_fuzzy_segmentation.engine.prefix import PrefixStructure, Segment
from django_fuzzy_segmentation.engine.stats import RunStats
from django_fuzzy_segmentation.engine.symbols import (
    Alphabet,
    Evaluator,
    SymbolSpec,
    degree_of,
    increment,
    look_ahead,
)
from django_fuzzy_segmentation.exceptions import (
    AlphabetError,
    ArityError,
    PreconditionError,
)

logger = logging.getLogger(__name__)

# Characters marking the blocks of an adversarial text, one per symbol
OCCURRENCE_CHARS = "123456789abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class Pattern:
    """
    A fuzzy segmentation pattern with its constraints.

    Attributes:
        symbols: P[1..m], all over the same alphabet.
        lambda_min: λ₁, the minimum segment length (>= 1).
        lambda_max: λ₂, the maximum segment length (>= λ₁).
        mu: Threshold degree a segment must reach.
    """

    symbols: tuple
    lambda_min: int
    lambda_max: int
    mu: Degree

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        object.__setattr__(self, "mu", Degree(self.mu))
        if not self.symbols:
            raise PreconditionError("A pattern needs at least one symbol")
        if not 1 <= self.lambda_min <= self.lambda_max:
            raise PreconditionError(
                f"Length bounds must satisfy 1 <= lambda_min <= lambda_max, "
                f"got ({self.lambda_min}, {self.lambda_max})"
            )
        alphabet = self.symbols[0].alphabet
        for symbol in self.symbols:
            if symbol.alphabet != alphabet:
                raise AlphabetError(f"Symbol {symbol.name!r} uses a different alphabet")
            if symbol.max_length is not None and self.lambda_max > symbol.max_length:
                raise ArityError(
                    f"Symbol {symbol.name!r} is defined only on strings of length "
                    f"{symbol.max_length}, but lambda_max is {self.lambda_max}"
                )

    @property
    def m(self) -> int:
        return len(self.symbols)

    @property
    def alphabet(self) -> Alphabet:
        return self.symbols[0].alphabet

    def matches(self, symbol_index: int, piece: str) -> bool:
        """The match relation x ∼ P[symbol_index + 1] (0-based index)."""
        return (
            self.lambda_min <= len(piece) <= self.lambda_max
            and degree_of(self.symbols[symbol_index], piece) >= self.mu
        )


@dataclass(frozen=True)
class Segmentation:
    """m adjacent segments with their membership degrees."""

    segments: tuple
    degrees: tuple = field(default=())

    @property
    def start(self) -> int:
        return self.segments[0].low

    @property
    def end(self) -> int:
        return self.segments[-1].high

    def format(self) -> str:
        """Render as space-separated "low-high(degree)" tokens."""
        if not self.degrees:
            return " ".join(str(s) for s in self.segments)
        return " ".join(
            f"{s}({format_degree(d)})" for s, d in zip(self.segments, self.degrees)
        )

    @classmethod
    def of(cls, text: str, pattern: Pattern, segments: Sequence[Segment]) -> "Segmentation":
        """Build a segmentation, computing each segment's degree from scratch."""
        degrees = tuple(
            degree_of(symbol, seg.slice(text)) for symbol, seg in zip(pattern.symbols, segments)
        )
        return cls(tuple(segments), degrees)


Trace = Callable[[int, Optional[int], PrefixStructure], None]


def sc_heuristic(
    text: str,
    pattern: Pattern,
    stats: Optional[RunStats] = None,
    trace: Optional[Trace] = None,
) -> list[Segmentation]:
    """
    Find valid (P, λ, μ)-segmentations of text with the SC-Heuristic.

    Args:
        text: The text to segment.
        pattern: Pattern and constraints.
        stats: Optional counters (reduce / extend / look_ahead calls).
        trace: Optional callback, called as trace(i, j, structure) after
            each step of the scan (j is None on a mismatch).

    Returns:
        Segmentations in discovery order, i.e. by end position. Every one
        is valid; the list is not necessarily complete.

    Raises:
        AlphabetError: If text has a character outside the pattern alphabet.
    """
    pattern.alphabet.validate(text)
    n = len(text)
    symbols = pattern.symbols
    lambda_min, lambda_max, mu = pattern.lambda_min, pattern.lambda_max, pattern.mu
    structure = PrefixStructure(text, pattern, stats)
    found: list[Segmentation] = []

    logger.debug(f"SC-Heuristic: n={n} m={pattern.m} lambda=({lambda_min}, {lambda_max}) mu={mu}")

    i = 1
    while i <= n - lambda_min + 1:
        # Fall back along the border chain until P[k+1] matches at i
        while True:
            k = structure.q
            j = look_ahead(text, i, symbols[k], lambda_min, lambda_max, mu, stats)
            if j is not None or k == 0:
                break
            structure.reduce()

        if j is not None:
            structure.extend(Segment(i, j))
            if structure.is_full():
                found.append(Segmentation.of(text, pattern, structure.x))
                structure.reduce()

        if trace is not None:
            trace(i, j, structure)
        i = increment(i, j)

    logger.debug(f"SC-Heuristic finished: {len(found)} segmentation(s)")
    return found


# =============================================================================
# Adversarial instances
# =============================================================================

@dataclass(frozen=True)
class OccurrenceEvaluator(Evaluator):
    count: int = 0

    def degree(self) -> Degree:
        if self.length == self.spec.length and self.count == 1:
            return ONE
        return ZERO

    def _right(self, c: str) -> "OccurrenceEvaluator":
        hit = 1 if c == self.spec.char else 0
        return OccurrenceEvaluator(self.spec, self.length + 1, self.count + hit)

    _left = _right


class SingleOccurrence(SymbolSpec):
    """μ(x) = 1 iff |x| = length and exactly one position of x holds char, else 0."""

    kind = "single_occurrence"

    def __init__(self, name: str, alphabet: Alphabet, char: str, length: int):
        super().__init__(name, alphabet)
        (self.char,) = self._check_chars(char)
        if length < 1:
            raise ValueError(f"Symbol {name!r} needs a positive length, got {length}")
        self.length = length

    def evaluator(self) -> OccurrenceEvaluator:
        return OccurrenceEvaluator(self)

    def _key(self) -> tuple:
        return super()._key() + (self.char, self.length)


def adversarial_instance(m: int, lambda_max: int) -> tuple[str, Pattern]:
    """
    Build a text on which the SC-Heuristic finds 1 of λ₂ valid segmentations.

    The text is 0^{λ₂-1}1 · 0^{λ₂-1}2 · ... · 0^{λ₂-1}m · 0^{λ₂-1}; symbol i
    holds exactly when a length-λ₂ segment contains the i-th marker once.
    Valid segmentations start at positions 1..λ₂.

    Raises:
        PreconditionError: If m < 1, m > 35 or λ₂ < 2.
    """
    if m < 1 or m > len(OCCURRENCE_CHARS):
        raise PreconditionError(f"m must be in 1..{len(OCCURRENCE_CHARS)}, got {m}")
    if lambda_max < 2:
        raise PreconditionError(f"lambda_max must be at least 2, got {lambda_max}")

    markers = OCCURRENCE_CHARS[:m]
    alphabet = Alphabet("0" + markers)
    padding = "0" * (lambda_max - 1)
    text = "".join(padding + c for c in markers) + padding
    symbols = [
        SingleOccurrence(f"alpha{index}", alphabet, c, lambda_max)
        for index, c in enumerate(markers, start=1)
    ]
    return text, Pattern(symbols, lambda_max, lambda_max, ONE)
