"""
Management command to run the SC-Heuristic.

Usage:
    ./manage.py segment pattern.json text.txt
    ./manage.py segment pattern.json a.txt b.txt --text-label
    ./manage.py segment pattern.json text.txt -v 2   # prefix structure dump on stderr
"""

from django_fuzzy_segmentation.engine.local_seg import sc_heuristic
from django_fuzzy_segmentation.fileio import format_segmentations
from django_fuzzy_segmentation.management.commands._base import PatternCommand, TextResult


class Command(PatternCommand):
    help = "Find fuzzy-pattern segmentations with the SC-Heuristic"

    def prepare(self, problem, options):
        return self.require_local(problem)

    def run(self, problem, text, options):
        dump: list[str] = []

        def trace(i, j, structure):
            found = "-" if j is None else str(j)
            dump.append(f"# i={i} j={found} q={structure.q}")
            dump.extend(structure.dump())

        found = sc_heuristic(text, problem, trace=trace if self.verbose(options) else None)
        stderr = "".join(f"{line}\n" for line in dump)
        return TextResult(format_segmentations(found), stderr)
