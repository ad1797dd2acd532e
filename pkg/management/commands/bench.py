"""
Management command to run the complexity-shape benchmarks.

Usage:
    ./manage.py bench
    ./manage.py bench --problem match --sizes 1000,2000,4000
    ./manage.py bench --problem segment --lambda-min 1 --lambda-max 4
    ./manage.py bench --problem segment-lambda --lambda-min 1 --lambda-steps 5
    ./manage.py bench --problem decompose --seed 7

Writes one TSV row per run to stdout. Size ladders report their fitted
log-log slope and doubling ratios on stderr; the segment-lambda ladder
keeps n fixed at the largest size, doubles λ₂/λ₁ at every step and
reports work ratios next to the m·n·λ₂/λ₁ envelope ratios.
"""

from django.core.management.base import BaseCommand, CommandError

from django_fuzzy_segmentation.bench import (
    bench_decomposition,
    bench_lambda_ratios,
    bench_matching,
    bench_segmentation,
    doubling_bounds,
    envelope_ratios,
    fitted_slope,
    format_reports_tsv,
    growth_ratios,
    within_envelope,
)
from django_fuzzy_segmentation.conf import segmentation_settings

PROBLEMS = ["match", "segment", "decompose"]


def _parse_sizes(value: str) -> list[int]:
    try:
        sizes = [int(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise CommandError(f"--sizes must be a comma-separated list of integers, got {value!r}")
    if len(sizes) < 2 or any(n < 1 for n in sizes):
        raise CommandError(f"--sizes needs at least two positive sizes, got {value!r}")
    return sizes


def _ratios(values: list[float]) -> str:
    return ", ".join(f"{r:.2f}" for r in values)


class Command(BaseCommand):
    help = "Run engine benchmarks on a size ladder and report exact operation counts"

    def add_arguments(self, parser):
        parser.add_argument(
            "--problem",
            choices=PROBLEMS + ["segment-lambda", "all"],
            default="all",
            help="Which engine to benchmark (default: all size ladders)",
        )
        parser.add_argument(
            "--sizes",
            type=str,
            default=None,
            help="Comma-separated text lengths (default: BENCH_SIZES / BENCH_DP_SIZES)",
        )
        parser.add_argument("--m", type=int, default=None, help="Pattern length")
        parser.add_argument(
            "--lambda-min",
            type=int,
            default=None,
            help="Shortest segment length for segment ladders (default: 2, or 1 for segment-lambda)",
        )
        parser.add_argument(
            "--lambda-max",
            type=int,
            default=None,
            help="Longest segment length for the segment size ladder (default: 3)",
        )
        parser.add_argument(
            "--lambda-steps",
            type=int,
            default=5,
            help="Number of λ₂/λ₁ doublings in the segment-lambda ladder (default: 5)",
        )
        parser.add_argument(
            "--seed",
            type=int,
            default=None,
            help="Random seed (default: from settings)",
        )

    def handle(self, *args, **options):
        conf = segmentation_settings()
        seed = conf.BENCH_SEED if options["seed"] is None else options["seed"]
        custom = _parse_sizes(options["sizes"]) if options["sizes"] else None
        m = options["m"]
        if m is not None and m < 1:
            raise CommandError(f"--m must be positive, got {m}")
        lambda_min, lambda_max = options["lambda_min"], options["lambda_max"]
        if lambda_min is not None and lambda_min < 1:
            raise CommandError(f"--lambda-min must be positive, got {lambda_min}")
        if lambda_max is not None and lambda_max < (lambda_min or 2):
            raise CommandError(f"--lambda-max must be at least lambda_min, got {lambda_max}")
        if options["lambda_steps"] < 2:
            raise CommandError(f"--lambda-steps needs at least 2, got {options['lambda_steps']}")

        problems = PROBLEMS if options["problem"] == "all" else [options["problem"]]
        reports = []
        for problem in problems:
            if problem == "match":
                ladder = bench_matching(custom or conf.BENCH_SIZES, m=m or 4, seed=seed)
            elif problem == "segment":
                ladder = bench_segmentation(
                    custom or conf.BENCH_SIZES,
                    m=m or 3,
                    lambda_min=lambda_min or 2,
                    lambda_max=lambda_max or max(3, lambda_min or 2),
                    seed=seed,
                )
            elif problem == "segment-lambda":
                ladder = bench_lambda_ratios(
                    max(custom or conf.BENCH_SIZES),
                    doubling_bounds(lambda_min or 1, options["lambda_steps"]),
                    m=m or 3,
                    seed=seed,
                )
                reports.extend(ladder)
                verdict = "yes" if within_envelope(ladder) else "no"
                self.stderr.write(
                    f"# {problem}: ratios=[{_ratios(growth_ratios(ladder))}] "
                    f"envelope=[{_ratios(envelope_ratios(ladder))}] within={verdict}"
                )
                continue
            else:
                ladder = bench_decomposition(custom or conf.BENCH_DP_SIZES, m=m or 3, seed=seed)
            reports.extend(ladder)

            self.stderr.write(
                f"# {problem}: slope={fitted_slope(ladder):.2f} ratios=[{_ratios(growth_ratios(ladder))}]"
            )

        self.stdout.write(format_reports_tsv(reports), ending="")
