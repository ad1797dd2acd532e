"""
Pattern file ingestion.

A pattern file is a JSON document (see PatternFileSerializer). Depending on
its fields it describes one of three problems:

- accumulator present, or no mu: GlobalProblem
- every symbol a char_table and lambda = (1, 1): FuzzyPattern
- otherwise: Pattern
"""

import json
import logging
from pathlib import Path
from typing import Optional, Union

from django_fuzzy_segmentation.engine.global_seg import GlobalProblem
from django_fuzzy_segmentation.engine.local_seg import Pattern
from django_fuzzy_segmentation.engine.matching import FuzzyPattern
from django_fuzzy_segmentation.engine.measure import Accumulator
from django_fuzzy_segmentation.engine.symbols import (
    Alphabet,
    CharTable,
    MaxRun,
    RelativeCount,
    SymbolSpec,
)
from django_fuzzy_segmentation.exceptions import PatternFileError, SegmentationError
from django_fuzzy_segmentation.fileio.serializers import PatternFileSerializer, flatten_errors

logger = logging.getLogger(__name__)

Problem = Union[Pattern, FuzzyPattern, GlobalProblem]


def _build_symbol(name: str, spec: dict, alphabet: Alphabet) -> SymbolSpec:
    kind = spec["kind"]
    if kind == "relative_count":
        return RelativeCount(name, alphabet, spec["chars"])
    if kind == "max_run":
        return MaxRun(name, alphabet, spec["chars"])
    return CharTable(name, alphabet, spec["table"])


def parse_pattern_file(data: bytes, default_accumulator: str = "product") -> Problem:
    """
    Parse and validate a pattern file.

    Args:
        data: Raw file contents (UTF-8 JSON).
        default_accumulator: Accumulator for global problems that omit one.

    Returns:
        A Pattern, FuzzyPattern or GlobalProblem.

    Raises:
        PatternFileError: With "line L column C" diagnostics for JSON syntax
            errors and dotted field paths for validation errors.
    """
    try:
        source = data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise PatternFileError("Pattern file is not valid UTF-8", [f"byte {e.start}: {e.reason}"])

    try:
        document = json.loads(source)
    except json.JSONDecodeError as e:
        raise PatternFileError(
            "Pattern file is not valid JSON", [f"line {e.lineno} column {e.colno}: {e.msg}"]
        )

    if not isinstance(document, dict):
        raise PatternFileError(
            "Pattern file must contain a JSON object", [f"found {type(document).__name__}"]
        )

    serializer = PatternFileSerializer(data=document)
    if not serializer.is_valid():
        raise PatternFileError("Invalid pattern file", flatten_errors(serializer.errors))
    fields = serializer.validated_data

    try:
        alphabet = Alphabet(fields["alphabet"])
        symbols = {
            name: _build_symbol(name, spec, alphabet) for name, spec in fields["symbols"].items()
        }
        sequence = [symbols[name] for name in fields["pattern"]]

        if fields["is_global"]:
            accumulator = Accumulator.from_name(fields.get("accumulator", default_accumulator))
            problem: Problem = GlobalProblem(sequence, fields["lambda_min"], accumulator)
        elif (
            fields["lambda_min"] == fields["lambda_max"] == 1
            and all(isinstance(symbol, CharTable) for symbol in sequence)
        ):
            problem = FuzzyPattern(sequence, fields["mu"])
        else:
            problem = Pattern(sequence, fields["lambda_min"], fields["lambda_max"], fields["mu"])
    except (SegmentationError, ValueError) as e:
        raise PatternFileError("Invalid pattern file", [str(e)]) from e

    logger.debug(f"Parsed pattern file: {type(problem).__name__} with m={len(sequence)}")
    return problem


def load_pattern_file(path: Union[str, Path], default_accumulator: Optional[str] = None) -> Problem:
    """Read and parse a pattern file from disk."""
    path = Path(path)
    try:
        data = path.read_bytes()
    except OSError as e:
        raise PatternFileError(f"Cannot read pattern file {path}: {e.strerror}")
    try:
        problem = parse_pattern_file(data, default_accumulator or "product")
    except PatternFileError as e:
        raise PatternFileError(f"{path}: {e.args[0].splitlines()[0]}", e.diagnostics) from e
    logger.info(f"Loaded pattern file {path}")
    return problem
