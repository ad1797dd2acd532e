"""
Management command to report all fuzzy match positions.

Usage:
    ./manage.py match pattern.json text.txt
    ./manage.py match pattern.json text.txt --zero-index
"""

from django_fuzzy_segmentation.conf import segmentation_settings
from django_fuzzy_segmentation.engine.matching import fuzzy_string_matching
from django_fuzzy_segmentation.fileio import format_positions
from django_fuzzy_segmentation.management.commands._base import PatternCommand, TextResult


class Command(PatternCommand):
    help = "Print every (P, mu)-match position of a fuzzy pattern, one per line"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            "--zero-index",
            action="store_true",
            default=None,
            help="Print 0-indexed positions (default: from settings, 1-indexed)",
        )

    def prepare(self, problem, options):
        return self.require_fuzzy(problem)

    def run(self, problem, text, options):
        zero_index = options["zero_index"]
        if zero_index is None:
            zero_index = segmentation_settings().ZERO_INDEX

        dump: list[str] = []

        def trace(i, structure):
            dump.append(f"# i={i} q={structure.q}")
            dump.extend(structure.dump())

        positions = fuzzy_string_matching(
            text, problem, trace=trace if self.verbose(options) else None
        )
        stderr = "".join(f"{line}\n" for line in dump)
        return TextResult(format_positions(positions, zero_index), stderr)
