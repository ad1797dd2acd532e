"""
Pattern and text ingestion plus result formatting for the commands.
"""

from django_fuzzy_segmentation.fileio.formatting import (
    format_decomposition,
    format_label,
    format_positions,
    format_segmentations,
    format_witnesses,
)
from django_fuzzy_segmentation.fileio.patterns import (
    Problem,
    load_pattern_file,
    parse_pattern_file,
)
from django_fuzzy_segmentation.fileio.texts import decode_text, load_text

__all__ = [
    "Problem",
    "parse_pattern_file",
    "load_pattern_file",
    "decode_text",
    "load_text",
    "format_segmentations",
    "format_positions",
    "format_decomposition",
    "format_witnesses",
    "format_label",
]
