"""
Pytest fixtures for django_fuzzy_segmentation tests.
"""

from pathlib import Path

import pytest

from django_fuzzy_segmentation.conf import reset_settings
from django_fuzzy_segmentation.engine import (
    Accumulator,
    Alphabet,
    CharTable,
    FuzzyPattern,
    GlobalProblem,
    MaxRun,
    Pattern,
    RelativeCount,
    degree_from_ratio,
    parse_degree,
)

FIXTURES_DIR = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(autouse=True)
def fresh_settings():
    """Drop cached settings around every test."""
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def fixtures_dir():
    return FIXTURES_DIR


@pytest.fixture
def binary():
    return Alphabet("01")


@pytest.fixture
def alphas(binary):
    """The four binary symbols: share of 0s, share of 1s, longest 0-run, longest 1-run."""
    return {
        "a0": RelativeCount("a0", binary, "0"),
        "a1": RelativeCount("a1", binary, "1"),
        "a2": MaxRun("a2", binary, "0"),
        "a3": MaxRun("a3", binary, "1"),
    }


@pytest.fixture
def two_thirds():
    return degree_from_ratio(2, 3)


@pytest.fixture
def counts_case(alphas, two_thirds):
    """T = 101100011, P = a1 a0 a1, lambda = (2, 3), mu = 2/3."""
    return "101100011", Pattern([alphas["a1"], alphas["a0"], alphas["a1"]], 2, 3, two_thirds)


@pytest.fixture
def chain_case(alphas, two_thirds):
    """P = a3 a1 a0 a2 a1 a3 with the six-component segment array."""
    pattern = Pattern(
        [alphas[name] for name in ("a3", "a1", "a0", "a2", "a1", "a3")], 2, 3, two_thirds
    )
    return pattern, ["010", "110", "101", "001", "011", "11"]


@pytest.fixture
def runs_case(alphas, two_thirds):
    """T = 01011100101001110011, P = a0 a1 a2 a3, lambda = (2, 3), mu = 2/3."""
    pattern = Pattern([alphas[name] for name in ("a0", "a1", "a2", "a3")], 2, 3, two_thirds)
    return "01011100101001110011", pattern


@pytest.fixture
def sml_tables():
    """The S, M and L fuzzy symbols over 1..5."""
    digits = Alphabet("12345")
    quarter = lambda k: degree_from_ratio(k, 4)  # noqa: E731
    s = CharTable("S", digits, {"1": quarter(4), "2": quarter(3), "3": quarter(2), "4": quarter(1), "5": quarter(0)})
    m = CharTable("M", digits, {"1": quarter(0), "2": quarter(3), "3": quarter(4), "4": quarter(3), "5": quarter(0)})
    l = CharTable("L", digits, {"1": quarter(0), "2": quarter(1), "3": quarter(2), "4": quarter(3), "5": quarter(4)})  # noqa: E741
    return s, m, l


@pytest.fixture
def tables_case(sml_tables):
    """T = 13231425, P = S M S L, mu = 0.75."""
    s, m, l = sml_tables  # noqa: E741
    return "13231425", FuzzyPattern([s, m, s, l], parse_degree("0.75"))


@pytest.fixture
def product_case(alphas):
    """T = 101110001101, P = a1 a0 a1, lambda = 2, product."""
    problem = GlobalProblem([alphas["a1"], alphas["a0"], alphas["a1"]], 2, Accumulator.PRODUCT)
    return "101110001101", problem


@pytest.fixture
def unit_product_case(alphas):
    """The product case text and pattern with lambda = 1."""
    problem = GlobalProblem([alphas["a1"], alphas["a0"], alphas["a1"]], 1, Accumulator.PRODUCT)
    return "101110001101", problem
