"""
Text ingestion.

Texts are raw files read as UTF-8 with trailing line breaks removed; every
remaining character must belong to the pattern alphabet.
"""

import logging
from pathlib import Path
from typing import Union

from django_fuzzy_segmentation.engine.symbols import Alphabet
from django_fuzzy_segmentation.exceptions import AlphabetError, SegmentationError

logger = logging.getLogger(__name__)


def decode_text(data: bytes, alphabet: Alphabet) -> str:
    """
    Decode raw text and check it against the alphabet.

    Raises:
        SegmentationError: If data is not UTF-8.
        AlphabetError: On the first character outside the alphabet.
    """
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise SegmentationError(f"Text is not valid UTF-8 (byte {e.start})") from e
    text = text.rstrip("\r\n")
    alphabet.validate(text)
    return text


def load_text(path: Union[str, Path], alphabet: Alphabet) -> str:
    """Read a text file and validate it against the alphabet."""
    path = Path(path)
    try:
        data = path.read_bytes()
    except OSError as e:
        raise SegmentationError(f"Cannot read text file {path}: {e.strerror}")
    try:
        text = decode_text(data, alphabet)
    except AlphabetError as e:
        raise AlphabetError(f"{path}: {e}", position=e.position, char=e.char) from e
    except SegmentationError as e:
        raise SegmentationError(f"{path}: {e}") from e
    if not text:
        logger.warning(f"Text file {path} is empty")
    logger.info(f"Loaded text {path} ({len(text)} characters)")
    return text
