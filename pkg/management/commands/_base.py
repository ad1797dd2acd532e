"""
Shared base for the pattern-driven management commands.

A PatternCommand loads one pattern file and one or more text files, runs
the engine once per text (optionally on several threads) and writes each
text's output in one piece, in argument order. Engine errors become
CommandError with exit code 1, or 2 for infeasible constraints; in debug
mode they propagate unchanged.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from django.core.management.base import BaseCommand, CommandError

from django_fuzzy_segmentation.conf import segmentation_settings, should_swallow_exceptions
from django_fuzzy_segmentation.engine.local_seg import Pattern
from django_fuzzy_segmentation.engine.matching import FuzzyPattern, as_segmentation_pattern
from django_fuzzy_segmentation.exceptions import SegmentationError
from django_fuzzy_segmentation.fileio import Problem, format_label, load_pattern_file, load_text

logger = logging.getLogger(__name__)


@dataclass
class TextResult:
    """Buffered output for one text."""

    stdout: str = ""
    stderr: str = ""


class PatternCommand(BaseCommand):
    """Base class: subclasses implement `run(problem, text, options) -> TextResult`."""

    def add_arguments(self, parser):
        parser.add_argument("pattern_file", type=str, help="Path to the JSON pattern file")
        parser.add_argument("text_files", nargs="+", type=str, help="One or more text files")
        parser.add_argument(
            "--text-label",
            action="store_true",
            help="Precede each text's output with a '# <path>' line",
        )
        parser.add_argument(
            "--concurrency",
            type=int,
            default=None,
            help="Worker threads for several texts (default: from settings)",
        )

    def handle(self, *args, **options):
        conf = segmentation_settings()
        concurrency = conf.CONCURRENCY if options["concurrency"] is None else options["concurrency"]
        if concurrency < 1:
            raise CommandError(f"--concurrency must be positive, got {concurrency}")

        try:
            problem = load_pattern_file(options["pattern_file"], conf.DEFAULT_ACCUMULATOR)
            problem = self.prepare(problem, options)
            texts = [load_text(path, problem.alphabet) for path in options["text_files"]]
            if concurrency == 1 or len(texts) == 1:
                results = [self.run(problem, text, options) for text in texts]
            else:
                with ThreadPoolExecutor(max_workers=concurrency) as pool:
                    results = list(pool.map(lambda text: self.run(problem, text, options), texts))
        except SegmentationError as e:
            if not should_swallow_exceptions():
                raise
            logger.debug(f"{self.__class__.__module__} failed: {e}")
            raise CommandError(str(e), returncode=e.exit_code) from e

        for path, result in zip(options["text_files"], results):
            if options["text_label"]:
                self.stdout.write(format_label(path), ending="")
            self.stdout.write(result.stdout, ending="")
            if result.stderr:
                self.stderr.write(result.stderr, ending="")

    def prepare(self, problem: Problem, options) -> Problem:
        """Check (and possibly convert) the problem parsed from the pattern file."""
        return problem

    def run(self, problem: Problem, text: str, options) -> TextResult:
        raise NotImplementedError

    # -------------------------------------------------------------------------
    # Problem kind helpers
    # -------------------------------------------------------------------------

    def require_local(self, problem: Problem) -> Pattern:
        if isinstance(problem, FuzzyPattern):
            return as_segmentation_pattern(problem)
        if not isinstance(problem, Pattern):
            raise SegmentationError(
                "The pattern file describes a global problem; this command needs mu and lambda_max"
            )
        return problem

    def require_fuzzy(self, problem: Problem) -> FuzzyPattern:
        if not isinstance(problem, FuzzyPattern):
            raise SegmentationError(
                "Matching needs a pattern of char_table symbols with lambda_min = lambda_max = 1"
            )
        return problem

    def verbose(self, options) -> bool:
        """Engine traces go to stderr at verbosity 2 or in DEBUG_MODE."""
        return options.get("verbosity", 1) >= 2 or segmentation_settings().DEBUG_MODE
