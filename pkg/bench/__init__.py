"""
Complexity-shape benchmarks for the segmentation engines.
"""

from django_fuzzy_segmentation.bench.harness import (
    TSV_HEADER,
    RunReport,
    bench_decomposition,
    bench_lambda_ratios,
    bench_matching,
    bench_segmentation,
    check_ratios,
    doubling_bounds,
    envelope_ratios,
    fitted_slope,
    format_reports_tsv,
    growth_ratios,
    within_envelope,
)

__all__ = [
    "TSV_HEADER",
    "RunReport",
    "bench_matching",
    "bench_segmentation",
    "bench_lambda_ratios",
    "bench_decomposition",
    "doubling_bounds",
    "growth_ratios",
    "envelope_ratios",
    "fitted_slope",
    "check_ratios",
    "within_envelope",
    "format_reports_tsv",
]
