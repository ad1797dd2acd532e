"""
Management command to run the brute-force oracles.

Usage:
    ./manage.py oracle segment pattern.json text.txt
    ./manage.py oracle match pattern.json text.txt
    ./manage.py oracle decompose pattern.json text.txt --cap 5000000

`decompose` prints the optimal value, then one line per optimal decomposition.
"""

from django.core.management.base import CommandError

from django_fuzzy_segmentation.conf import segmentation_settings
from django_fuzzy_segmentation.engine.global_seg import GlobalProblem
from django_fuzzy_segmentation.engine.oracle import (
    best_decomposition,
    enumerate_match_positions,
    enumerate_segmentations,
)
from django_fuzzy_segmentation.exceptions import SegmentationError
from django_fuzzy_segmentation.fileio import (
    format_positions,
    format_segmentations,
    format_witnesses,
)
from django_fuzzy_segmentation.management.commands._base import PatternCommand, TextResult


class Command(PatternCommand):
    help = "Enumerate all solutions by brute force (segment | match | decompose)"

    def add_arguments(self, parser):
        parser.add_argument("mode", choices=["segment", "match", "decompose"])
        super().add_arguments(parser)
        parser.add_argument(
            "--cap",
            type=int,
            default=None,
            help="Maximum number of candidates to examine (default: from settings)",
        )
        parser.add_argument(
            "--zero-index",
            action="store_true",
            default=None,
            help="Print 0-indexed positions in match mode",
        )

    def prepare(self, problem, options):
        if options["cap"] is not None and options["cap"] < 1:
            raise CommandError(f"--cap must be positive, got {options['cap']}")
        mode = options["mode"]
        if mode == "segment":
            return self.require_local(problem)
        if mode == "match":
            return self.require_fuzzy(problem)
        if not isinstance(problem, GlobalProblem):
            raise SegmentationError("oracle decompose needs a global problem (accumulator, no mu)")
        return problem

    def run(self, problem, text, options):
        conf = segmentation_settings()
        cap = conf.ENUMERATION_CAP if options["cap"] is None else options["cap"]
        mode = options["mode"]

        if mode == "segment":
            return TextResult(format_segmentations(enumerate_segmentations(text, problem, cap)))
        if mode == "match":
            zero_index = options["zero_index"]
            if zero_index is None:
                zero_index = conf.ZERO_INDEX
            positions = enumerate_match_positions(text, problem, cap)
            return TextResult(format_positions(positions, zero_index))
        _, witnesses = best_decomposition(text, problem, cap)
        return TextResult(format_witnesses(witnesses))
