"""
Django Fuzzy Segmentation - fuzzy-pattern segmentation of text.

This package provides:
- Exact membership degrees (rationals in [0, 1]) and accumulation monoids
- Regular segmentation symbols with O(1) incremental evaluation
- The prefix structure and the SC-Heuristic for local segmentation
- Fuzzy string matching that reports every match position
- Optimal global decomposition by dynamic programming
- Brute-force oracles for all three problems
- Management commands: segment, match, decompose, oracle, bench

Usage:
    1. Add 'django_fuzzy_segmentation' to INSTALLED_APPS
    2. Optionally configure FUZZY_SEGMENTATION settings
    3. ./manage.py match pattern.json text.txt

Library Example:
    from django_fuzzy_segmentation.engine import (
        Alphabet, RelativeCount, Pattern, sc_heuristic, degree_from_ratio,
    )

    sigma = Alphabet("01")
    zeros = RelativeCount("a0", sigma, "0")
    ones = RelativeCount("a1", sigma, "1")
    pattern = Pattern([ones, zeros, ones], 2, 3, degree_from_ratio(2, 3))
    for found in sc_heuristic("101100011", pattern):
        print(found.segments)

The engine subpackage has no Django dependency.
"""

__version__ = "0.1.0"

default_app_config = "django_fuzzy_segmentation.apps.FuzzySegmentationConfig"


def __getattr__(name):
    """Lazy imports so importing the app does not load the engine eagerly."""
    if name in ("sc_heuristic", "fuzzy_string_matching", "sigma", "gs_memoization", "gs_extract"):
        from django_fuzzy_segmentation import engine
        return getattr(engine, name)
    elif name == "run_cli":
        from django_fuzzy_segmentation.cli import run_cli
        return run_cli
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
