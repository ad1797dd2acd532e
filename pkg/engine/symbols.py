"""
Segmentation symbols and their incremental evaluators.

A segmentation symbol is a fuzzy subset of Σ*: it assigns every string a
degree in [0, 1]. All symbols here are regular: an Evaluator holds O(1)
state and updates the degree in constant time when one character is
appended (extend_right) or prepended (extend_left).

Symbol kinds:
- RelativeCount: share of positions whose character is in `chars`
- MaxRun: longest run of characters in `chars`, divided by the length
- CharTable: unit-length symbol, degree looked up per character

Positions in this module, as everywhere in the engine, are 1-indexed.
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field, replace
from typing import ClassVar, Iterable, Mapping, Optional

from django_fuzzy_segmentation.engine.measure import ZERO, Degree
from django_fuzzy_segmentation.engine.stats import RunStats
from django_fuzzy_segmentation.exceptions import (
    AlphabetError,
    ArityError,
    PreconditionError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Alphabet:
    """An ordered, duplicate-free set of single-character tokens."""

    characters: tuple

    def __init__(self, characters: Iterable[str]):
        chars = tuple(characters)
        if not chars:
            raise AlphabetError("Alphabet must not be empty")
        for c in chars:
            if not isinstance(c, str) or len(c) != 1:
                raise AlphabetError(f"Alphabet entries must be single characters, got {c!r}")
        if len(set(chars)) != len(chars):
            raise AlphabetError(f"Alphabet contains duplicates: {''.join(chars)!r}")
        object.__setattr__(self, "characters", chars)
        object.__setattr__(self, "_members", frozenset(chars))

    def __contains__(self, c: object) -> bool:
        return c in self._members

    def __iter__(self):
        return iter(self.characters)

    def __len__(self) -> int:
        return len(self.characters)

    def validate(self, text: str) -> None:
        """
        Check that every character of text belongs to the alphabet.

        Raises:
            AlphabetError: Naming the first offending (1-indexed) position.
        """
        for position, c in enumerate(text, start=1):
            if c not in self._members:
                raise AlphabetError(
                    f"Character {c!r} at position {position} is not in the alphabet "
                    f"{''.join(self.characters)!r}",
                    position=position,
                    char=c,
                )


class SymbolSpec(ABC):
    """
    A regular segmentation symbol.

    Subclasses define `evaluator()`, which returns the Evaluator for the
    empty string. `max_length` is the longest string the symbol is defined
    on (None for unbounded).
    """

    kind: ClassVar[str]
    max_length: ClassVar[Optional[int]] = None

    def __init__(self, name: str, alphabet: Alphabet):
        if not name:
            raise ValueError("Symbol name must not be empty")
        self.name = name
        self.alphabet = alphabet

    @abstractmethod
    def evaluator(self) -> "Evaluator":
        """Return the evaluator of the empty string (eval_init)."""
        ...

    def degree_of(self, x: str) -> Degree:
        """Membership degree of x, computed from scratch in O(|x|)."""
        return degree_of(self, x)

    def _check_chars(self, chars: Iterable[str]) -> frozenset:
        chars = frozenset(chars)
        if not chars:
            raise ValueError(f"Symbol {self.name!r} needs at least one character")
        for c in chars:
            if c not in self.alphabet:
                raise AlphabetError(
                    f"Symbol {self.name!r} uses {c!r}, which is not in the alphabet", char=c
                )
        return chars

    def _key(self) -> tuple:
        return (self.kind, self.name, self.alphabet)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymbolSpec):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.name!r})"


@dataclass(frozen=True)
class Evaluator(ABC):
    """
    Incremental evaluation state for a string x under one symbol.

    Evaluators are immutable: extending returns a new evaluator.
    """

    spec: SymbolSpec
    length: int = 0

    def extend_right(self, c: str) -> "Evaluator":
        """Evaluator for x·c."""
        self._check(c)
        return self._right(c)

    def extend_left(self, c: str) -> "Evaluator":
        """Evaluator for c·x."""
        self._check(c)
        return self._left(c)

    @abstractmethod
    def degree(self) -> Degree:
        ...

    @abstractmethod
    def _right(self, c: str) -> "Evaluator":
        ...

    @abstractmethod
    def _left(self, c: str) -> "Evaluator":
        ...

    def _check(self, c: str) -> None:
        if c not in self.spec.alphabet:
            raise AlphabetError(f"Character {c!r} is not in the alphabet", char=c)
        limit = self.spec.max_length
        if limit is not None and self.length >= limit:
            raise ArityError(
                f"Symbol {self.spec.name!r} is defined only on strings of length {limit}"
            )


# =============================================================================
# Relative count
# =============================================================================

@dataclass(frozen=True)
class CountEvaluator(Evaluator):
    matches: int = 0

    def degree(self) -> Degree:
        if self.length == 0:
            return ZERO
        return Degree(self.matches, self.length)

    def _right(self, c: str) -> "CountEvaluator":
        hit = 1 if c in self.spec.chars else 0
        return replace(self, length=self.length + 1, matches=self.matches + hit)

    _left = _right


class RelativeCount(SymbolSpec):
    """μ(x) = |{positions of x holding a character in chars}| / |x|."""

    kind = "relative_count"

    def __init__(self, name: str, alphabet: Alphabet, chars: Iterable[str]):
        super().__init__(name, alphabet)
        self.chars = self._check_chars(chars)

    def evaluator(self) -> CountEvaluator:
        return CountEvaluator(self)

    def _key(self) -> tuple:
        return super()._key() + (self.chars,)


# =============================================================================
# Maximum run
# =============================================================================

@dataclass(frozen=True)
class RunEvaluator(Evaluator):
    best: int = 0
    # Length of the leading / trailing run of matching characters
    prefix_run: int = 0
    suffix_run: int = 0

    def degree(self) -> Degree:
        if self.length == 0:
            return ZERO
        return Degree(self.best, self.length)

    def _right(self, c: str) -> "RunEvaluator":
        if c not in self.spec.chars:
            return replace(self, length=self.length + 1, suffix_run=0)
        suffix = self.suffix_run + 1
        prefix = self.prefix_run + 1 if self.prefix_run == self.length else self.prefix_run
        return replace(
            self,
            length=self.length + 1,
            best=max(self.best, suffix),
            prefix_run=prefix,
            suffix_run=suffix,
        )

    def _left(self, c: str) -> "RunEvaluator":
        if c not in self.spec.chars:
            return replace(self, length=self.length + 1, prefix_run=0)
        prefix = self.prefix_run + 1
        suffix = self.suffix_run + 1 if self.suffix_run == self.length else self.suffix_run
        return replace(
            self,
            length=self.length + 1,
            best=max(self.best, prefix),
            prefix_run=prefix,
            suffix_run=suffix,
        )


class MaxRun(SymbolSpec):
    """μ(x) = (longest contiguous run of characters in chars) / |x|."""

    kind = "max_run"

    def __init__(self, name: str, alphabet: Alphabet, chars: Iterable[str]):
        super().__init__(name, alphabet)
        self.chars = self._check_chars(chars)

    def evaluator(self) -> RunEvaluator:
        return RunEvaluator(self)

    def _key(self) -> tuple:
        return super()._key() + (self.chars,)


# =============================================================================
# Character table (fuzzy symbol)
# =============================================================================

@dataclass(frozen=True)
class TableEvaluator(Evaluator):
    value: Optional[Degree] = None

    def degree(self) -> Degree:
        if self.value is None:
            raise ArityError(
                f"Symbol {self.spec.name!r} has no degree for the empty string"
            )
        return self.value

    def _right(self, c: str) -> "TableEvaluator":
        return replace(self, length=1, value=self.spec.char_degree(c))

    _left = _right


class CharTable(SymbolSpec):
    """
    A fuzzy symbol: a fuzzy subset of the alphabet.

    Defined on single characters only; unlisted characters have degree 0.
    """

    kind = "char_table"
    max_length = 1

    def __init__(self, name: str, alphabet: Alphabet, table: Mapping[str, Degree]):
        super().__init__(name, alphabet)
        for c in table:
            if c not in alphabet:
                raise AlphabetError(
                    f"Symbol {name!r} lists {c!r}, which is not in the alphabet", char=c
                )
        self.table = {c: Degree(d) for c, d in table.items()}

    def evaluator(self) -> TableEvaluator:
        return TableEvaluator(self)

    def char_degree(self, c: str) -> Degree:
        """Degree of a single character (the O(1) fast path used by matching)."""
        if c not in self.alphabet:
            raise AlphabetError(f"Character {c!r} is not in the alphabet", char=c)
        return self.table.get(c, ZERO)

    def _key(self) -> tuple:
        return super()._key() + (tuple(sorted(self.table.items())),)


# =============================================================================
# Operations
# =============================================================================

def eval_init(spec: SymbolSpec) -> Evaluator:
    """Evaluator for the empty string."""
    return spec.evaluator()


def eval_extend_right(ev: Evaluator, c: str) -> Evaluator:
    return ev.extend_right(c)


def eval_extend_left(ev: Evaluator, c: str) -> Evaluator:
    return ev.extend_left(c)


def degree_of(spec: SymbolSpec, x: str) -> Degree:
    """
    Membership degree μ_spec(x), folding extend_right from the empty string.

    Raises:
        AlphabetError: If x contains a character outside the alphabet.
        ArityError: If spec is unit-length and |x| != 1.
    """
    if spec.max_length is not None and len(x) > spec.max_length:
        raise ArityError(
            f"Symbol {spec.name!r} is defined only on strings of length {spec.max_length}, "
            f"got {len(x)}"
        )
    ev = spec.evaluator()
    for c in x:
        ev = ev.extend_right(c)
    return ev.degree()


def look_ahead(
    text: str,
    i: int,
    spec: SymbolSpec,
    lambda_min: int,
    lambda_max: int,
    mu: Degree,
    stats: Optional[RunStats] = None,
) -> Optional[int]:
    """
    Find the end of the shortest segment starting at i that matches spec.

    Returns the smallest j with i+λ1-1 <= j <= min(i+λ2-1, n) such that
    μ_spec(text[i..j]) >= mu, or None if there is no such j. Runs in O(λ2).

    Raises:
        PreconditionError: If i is outside 1..n or the length bounds are invalid.
    """
    n = len(text)
    if not 1 <= i <= n:
        raise PreconditionError(f"Position {i} is outside the text 1..{n}")
    if not 1 <= lambda_min <= lambda_max:
        raise PreconditionError(f"Invalid length bounds ({lambda_min}, {lambda_max})")
    if stats is not None:
        stats.look_ahead_calls += 1

    first = i + lambda_min - 1
    last = min(i + lambda_max - 1, n)
    if first > n:
        return None

    ev = spec.evaluator()
    for position in range(i, first):
        ev = ev.extend_right(text[position - 1])
    steps = first - i
    for j in range(first, last + 1):
        ev = ev.extend_right(text[j - 1])
        steps += 1
        if ev.degree() >= mu:
            if stats is not None:
                stats.degree_evals += steps
            return j
    if stats is not None:
        stats.degree_evals += steps
    return None


def increment(i: int, j: Optional[int]) -> int:
    """Next text position: i+1 when nothing matched, j+1 otherwise."""
    return i + 1 if j is None else j + 1
