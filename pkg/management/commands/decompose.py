"""
Management command to compute an optimal global decomposition.

Usage:
    ./manage.py decompose pattern.json text.txt
    ./manage.py decompose pattern.json text.txt --dump-tables   # s/b tables on stderr

Exits with code 2 when m * lambda exceeds the text length.
"""

from django_fuzzy_segmentation.engine.global_seg import GlobalProblem, decompose
from django_fuzzy_segmentation.exceptions import SegmentationError
from django_fuzzy_segmentation.fileio import format_decomposition
from django_fuzzy_segmentation.management.commands._base import PatternCommand, TextResult


class Command(PatternCommand):
    help = "Print the optimal decomposition value and its segments"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            "--dump-tables",
            action="store_true",
            help="Write the s and b tables as TSV to stderr",
        )

    def prepare(self, problem, options):
        if not isinstance(problem, GlobalProblem):
            raise SegmentationError(
                "The pattern file describes a local problem; decompose needs a global one "
                "(accumulator, no mu)"
            )
        return problem

    def run(self, problem, text, options):
        tables, decomposition = decompose(text, problem)
        stderr = tables.to_tsv() if options["dump_tables"] else ""
        return TextResult(format_decomposition(decomposition), stderr)
