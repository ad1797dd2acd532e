"""
The P-based prefix structure ⟨q, x, π⟩.

x is a multi-queue of matched text segments (push at the back, multipop
from the front) and π holds border lengths (push and multipop at the back).

π is kept as the border chain of the current segment array: π[i] is the
length of the longest proper border of x^i, the last i components of x,
where a border of length k means the last k components of x match
P[1..k] with degree >= μ. The top value π[q] is the x-prefix function of
x, and iterating reduce visits exactly the borders of x in decreasing
order. extend recomputes the border set from the chain of the previous
array, so the chain stays exact for fuzzy symbols, whose matching is not
transitive.

Provides:
- Segment: a 1-indexed inclusive text interval
- PrefixStructure: reduce / extend with push-pop accounting and high-water mark
- brute_prefix_function / brute_borders: exhaustive references for tests
- prefix_function_trace: the top values produced by successive extends
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Optional, Protocol, Sequence

from django_fuzzy_segmentation.engine.measure import Degree
from django_fuzzy_segmentation.engine.stats import RunStats
from django_fuzzy_segmentation.engine.symbols import SymbolSpec, degree_of
from django_fuzzy_segmentation.exceptions import PreconditionError

logger = logging.getLogger(__name__)


class PatternLike(Protocol):
    """Anything carrying a symbol sequence and the (λ₁, λ₂, μ) constraints."""

    symbols: Sequence[SymbolSpec]
    lambda_min: int
    lambda_max: int
    mu: Degree


@dataclass(frozen=True, order=True)
class Segment:
    """A text segment T[low..high], 1-indexed and inclusive."""

    low: int
    high: int

    def __post_init__(self):
        if not 1 <= self.low <= self.high:
            raise PreconditionError(f"Invalid segment [{self.low}, {self.high}]")

    @property
    def length(self) -> int:
        return self.high - self.low + 1

    def slice(self, text: str) -> str:
        """The characters of text covered by this segment."""
        return text[self.low - 1 : self.high]

    def __str__(self) -> str:
        return f"{self.low}-{self.high}"


class PrefixStructure:
    """
    Running state of matched segments and their border lengths.

    A structure is owned by one algorithm run. reduce and extend mutate it
    in place and return it, so calls can be chained.

    Attributes:
        text: The text the segments index into.
        pattern: Symbol sequence and constraints.
        matched: Whether x matches P[1..q] component-wise. Always True
            unless segments were added with check=False.
    """

    def __init__(self, text: str, pattern: PatternLike, stats: Optional[RunStats] = None):
        self.text = text
        self.pattern = pattern
        self.stats = stats
        self._x: deque[Segment] = deque()
        self._pi: list[int] = []
        self.matched = True
        # Multi-queue / multi-stack accounting
        self.pushed = 0
        self.popped = 0
        self.high_water = 0

    # -------------------------------------------------------------------------
    # Views
    # -------------------------------------------------------------------------

    @property
    def q(self) -> int:
        return len(self._x)

    @property
    def m(self) -> int:
        return len(self.pattern.symbols)

    @property
    def x(self) -> tuple[Segment, ...]:
        return tuple(self._x)

    @property
    def pi(self) -> tuple[int, ...]:
        return tuple(self._pi)

    @property
    def top(self) -> int:
        """π[q], or 0 for the empty structure."""
        return self._pi[-1] if self._pi else 0

    def is_empty(self) -> bool:
        return not self._x

    def is_full(self) -> bool:
        return self.q == self.m

    def first_low(self) -> int:
        """Start position of x[1]."""
        if not self._x:
            raise PreconditionError("Empty prefix structure has no segments")
        return self._x[0].low

    def chain(self) -> list[int]:
        """Border lengths visited by iterated reduce: π[q], π[π[q]], ..., down to 1."""
        out = []
        k = self.top
        while k > 0:
            out.append(k)
            k = self._pi[k - 1]
        return out

    # -------------------------------------------------------------------------
    # Operations
    # -------------------------------------------------------------------------

    def reduce(self) -> "PrefixStructure":
        """
        Shrink the structure to its longest proper border.

        Keeps the last π[q] segments and truncates π to its first π[q]
        entries; q strictly decreases.

        Raises:
            PreconditionError: On an empty structure.
        """
        if not self._x:
            raise PreconditionError("reduce on an empty prefix structure")
        q = self.q
        keep = self._pi[-1]
        for _ in range(q - keep):
            self._x.popleft()
        del self._pi[keep:]
        self.popped += q - keep
        self.matched = True
        if self.stats is not None:
            self.stats.reduce_calls += 1
        return self

    def extend(self, y: Segment, check: bool = True) -> "PrefixStructure":
        """
        Append segment y and recompute the border chain.

        The new borders are {k+1 : k a border of x or 0, k+1 <= m,
        μ_{P[k+1]}(y) >= μ}; π is rewritten from them in O(q).

        Args:
            y: The segment to append; must start right after x[q].
            check: When False, y need not match P[q+1]. Used to analyse
                arbitrary segment arrays.

        Raises:
            PreconditionError: If q = m, y violates the length bounds,
                y is not adjacent to x[q], or (with check) y does not match P[q+1].
        """
        pattern = self.pattern
        q = self.q
        if q >= self.m:
            raise PreconditionError(f"extend on a full prefix structure (q = m = {q})")
        if not pattern.lambda_min <= y.length <= pattern.lambda_max:
            raise PreconditionError(
                f"Segment {y} has length {y.length}, outside "
                f"[{pattern.lambda_min}, {pattern.lambda_max}]"
            )
        if y.high > len(self.text):
            raise PreconditionError(f"Segment {y} runs past the text end {len(self.text)}")
        if self._x and y.low != self._x[-1].high + 1:
            raise PreconditionError(f"Segment {y} is not adjacent to {self._x[-1]}")

        piece = y.slice(self.text)
        cache: dict[int, bool] = {}

        def matches(index: int) -> bool:
            if index not in cache:
                if self.stats is not None:
                    self.stats.degree_evals += len(piece)
                cache[index] = degree_of(pattern.symbols[index], piece) >= pattern.mu
            return cache[index]

        extends_prefix = self.matched and matches(q)
        if check and not extends_prefix:
            raise PreconditionError(
                f"Segment {y} does not match {pattern.symbols[q].name} with degree >= {pattern.mu}"
            )

        candidates = [0] + self.chain()
        borders = sorted(k + 1 for k in candidates if matches(k))
        if extends_prefix:
            borders.append(q + 1)

        pi = []
        best = 0
        cursor = 0
        for i in range(1, q + 2):
            while cursor < len(borders) and borders[cursor] < i:
                best = borders[cursor]
                cursor += 1
            pi.append(best)

        self._x.append(y)
        self._pi = pi
        self.matched = extends_prefix
        self.pushed += 1
        size = len(self._x) + len(self._pi)
        if size > self.high_water:
            self.high_water = size
        if self.stats is not None:
            self.stats.extend_calls += 1
            self.stats.observe_size(size)
        return self

    def dump(self) -> list[str]:
        """Debug lines "i<TAB>low-high<TAB>π[i]", one per stored segment."""
        return [f"{i}\t{seg}\t{p}" for i, (seg, p) in enumerate(zip(self._x, self._pi), start=1)]

    def __repr__(self) -> str:
        segments = " ".join(str(s) for s in self._x)
        return f"<PrefixStructure q={self.q} x=[{segments}] pi={list(self._pi)}>"


def reduce(structure: PrefixStructure) -> PrefixStructure:
    return structure.reduce()


def extend(structure: PrefixStructure, y: Segment, check: bool = True) -> PrefixStructure:
    return structure.extend(y, check=check)


# =============================================================================
# Exhaustive references
# =============================================================================

def _suffix_matches(pattern: PatternLike, pieces: Sequence[str], k: int, mu: Degree) -> bool:
    """True if the last k pieces match P[1..k] component-wise."""
    tail = pieces[len(pieces) - k :]
    return all(degree_of(pattern.symbols[t], piece) >= mu for t, piece in enumerate(tail))


def brute_prefix_function(
    pattern: PatternLike, x: Sequence[str], mu: Optional[Degree] = None
) -> list[int]:
    """
    The x-prefix function by exhaustive check.

    For each i, the largest k <= min(i-1, m-1) such that the last k
    components of x[1..i] match P[1..k].
    """
    mu = pattern.mu if mu is None else mu
    m = len(pattern.symbols)
    out = []
    for i in range(1, len(x) + 1):
        prefix = x[:i]
        best = 0
        for k in range(min(i - 1, m - 1), 0, -1):
            if _suffix_matches(pattern, prefix, k, mu):
                best = k
                break
        out.append(best)
    return out


def brute_borders(
    pattern: PatternLike, x: Sequence[str], mu: Optional[Degree] = None
) -> set[int]:
    """All k with 1 <= k < |x| such that P[1..k] is an x-border."""
    mu = pattern.mu if mu is None else mu
    m = len(pattern.symbols)
    return {k for k in range(1, min(len(x), m + 1)) if _suffix_matches(pattern, x, k, mu)}


def prefix_function_trace(
    pattern: PatternLike, text: str, segments: Sequence[Segment]
) -> list[int]:
    """
    The top values π[q] after each extend over the given adjacent segments.

    Segments need not match the pattern prefix; this is the x-prefix
    function as computed by extend.
    """
    structure = PrefixStructure(text, pattern)
    trace = []
    for y in segments:
        structure.extend(y, check=False)
        trace.append(structure.top)
    return trace


def structure_from_pieces(
    pattern: PatternLike, pieces: Sequence[str], check: bool = False
) -> PrefixStructure:
    """Build a structure over the concatenation of pieces, one segment per piece."""
    text = "".join(pieces)
    structure = PrefixStructure(text, pattern)
    low = 1
    for piece in pieces:
        structure.extend(Segment(low, low + len(piece) - 1), check=check)
        low += len(piece)
    return structure
