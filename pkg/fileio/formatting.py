"""
Output formats shared by the management commands.

Every formatter returns complete lines ending in a newline, so a command
can buffer the output for one text and write it in one piece.
"""

from typing import Iterable, Sequence

from django_fuzzy_segmentation.engine.global_seg import Decomposition
from django_fuzzy_segmentation.engine.local_seg import Segmentation
from django_fuzzy_segmentation.engine.measure import format_degree


def format_segmentations(found: Iterable[Segmentation]) -> str:
    """One line of "low-high(degree)" tokens per segmentation."""
    return "".join(f"{segmentation.format()}\n" for segmentation in found)


def format_positions(positions: Iterable[int], zero_index: bool = False) -> str:
    """One match position per line, 1-indexed unless zero_index."""
    shift = 1 if zero_index else 0
    return "".join(f"{position - shift}\n" for position in positions)


def format_decomposition(decomposition: Decomposition) -> str:
    """The value as "p/q", then the "low-high" segments on one line."""
    return f"{format_degree(decomposition.value)}\n{decomposition.format_segments()}\n"


def format_witnesses(decompositions: Sequence[Decomposition]) -> str:
    """The shared optimal value, then one line per optimal decomposition."""
    if not decompositions:
        return ""
    lines = [format_degree(decompositions[0].value)]
    lines.extend(d.format_segments() for d in decompositions)
    return "\n".join(lines) + "\n"


def format_label(path: str) -> str:
    return f"# {path}\n"
