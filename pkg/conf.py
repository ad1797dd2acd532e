"""
Configuration management for django_fuzzy_segmentation.

All settings are namespaced under FUZZY_SEGMENTATION in Django settings.
This module provides defaults and validation.

Debug Mode
----------
Management commands normally translate engine errors into exit codes and a
one-line diagnostic on stderr. In debug mode they re-raise instead, so the
full traceback is visible.

Enable debug mode via:
1. Environment variable: FUZZY_SEGMENTATION_DEBUG=1
2. Django settings: FUZZY_SEGMENTATION = {'SWALLOW_EXCEPTIONS': False}
3. Code: configure(debug=True)
"""

import os
from dataclasses import dataclass, field
from typing import Optional

from django.conf import settings


@dataclass
class FuzzySegmentationSettings:
    """
    Settings for the fuzzy segmentation app.

    All settings can be overridden via the FUZZY_SEGMENTATION dict in Django settings.
    """

    # Brute-force oracles refuse to look at more candidates than this
    ENUMERATION_CAP: int = 1_000_000

    # Accumulation used by global segmentation when a pattern file omits it
    DEFAULT_ACCUMULATOR: str = "product"  # "product" | "min"

    # Positions printed by `match` are 1-indexed unless this is set
    ZERO_INDEX: bool = False

    # Worker threads used when several texts are processed in one command
    CONCURRENCY: int = 1

    # Bench ladders
    BENCH_SIZES: list = field(default_factory=lambda: [2000, 4000, 8000, 16000])
    BENCH_DP_SIZES: list = field(default_factory=lambda: [50, 100, 200, 400])
    BENCH_SEED: int = 20220101

    # When True, segment and match write engine traces to stderr as at verbosity 2
    DEBUG_MODE: bool = False

    # Exception handling mode
    # When False (debug mode), exceptions propagate with full stack traces
    # When True, commands report errors as exit codes
    SWALLOW_EXCEPTIONS: bool = True

    def __post_init__(self):
        """Validate settings after initialization."""
        valid_accumulators = {"product", "min"}
        if self.DEFAULT_ACCUMULATOR not in valid_accumulators:
            raise ValueError(
                f"DEFAULT_ACCUMULATOR must be one of {valid_accumulators}, "
                f"got {self.DEFAULT_ACCUMULATOR}"
            )

        if self.ENUMERATION_CAP < 1:
            raise ValueError(f"ENUMERATION_CAP must be positive, got {self.ENUMERATION_CAP}")

        if self.CONCURRENCY < 1:
            raise ValueError(f"CONCURRENCY must be positive, got {self.CONCURRENCY}")

        for name in ("BENCH_SIZES", "BENCH_DP_SIZES"):
            sizes = getattr(self, name)
            if len(sizes) < 2 or any(int(n) < 1 for n in sizes):
                raise ValueError(f"{name} needs at least two positive sizes, got {sizes}")


def get_settings() -> FuzzySegmentationSettings:
    """
    Get the segmentation settings, merging defaults with user overrides.

    Returns:
        FuzzySegmentationSettings instance with all configuration.
    """
    user_settings = getattr(settings, "FUZZY_SEGMENTATION", {})
    return FuzzySegmentationSettings(**user_settings)


# Singleton instance (lazy-loaded)
_settings_instance: Optional[FuzzySegmentationSettings] = None


def segmentation_settings() -> FuzzySegmentationSettings:
    """Get the cached settings instance."""
    global _settings_instance
    if _settings_instance is None:
        _settings_instance = get_settings()
    return _settings_instance


def reset_settings():
    """Reset cached settings (useful for testing)."""
    global _settings_instance
    _settings_instance = None


# =============================================================================
# Debug Mode Configuration
# =============================================================================

def _get_debug_from_env() -> bool:
    """
    Check if debug mode is enabled via environment variable.

    Returns:
        True if FUZZY_SEGMENTATION_DEBUG is set to a truthy value.
    """
    debug_env = os.getenv("FUZZY_SEGMENTATION_DEBUG", "").lower()
    return debug_env in ("1", "true", "yes", "on")


def is_debug() -> bool:
    """
    Check if debug mode is enabled.

    Debug mode is enabled if:
    1. FUZZY_SEGMENTATION_DEBUG environment variable is set to "1", "true", "yes", or "on"
    2. SWALLOW_EXCEPTIONS is False in FUZZY_SEGMENTATION settings

    Returns:
        True if debug mode is enabled.
    """
    if _get_debug_from_env():
        return True

    return not segmentation_settings().SWALLOW_EXCEPTIONS


def should_swallow_exceptions() -> bool:
    """
    Check if commands should turn exceptions into exit codes.

    Returns:
        True in normal mode, False in debug mode.
    """
    return not is_debug()


def configure(
    debug: Optional[bool] = None,
    swallow_exceptions: Optional[bool] = None,
) -> None:
    """
    Configure debug/normal mode at runtime.

    Args:
        debug: Enable debug mode. When True, sets swallow_exceptions=False
               unless explicitly overridden.
        swallow_exceptions: Whether commands convert errors into exit codes.
                           If not specified, derived from debug setting.

    Example:
        configure(debug=True)   # tracebacks from commands
        configure(debug=False)  # exit codes and one-line diagnostics
    """
    settings_obj = segmentation_settings()

    if debug is not None:
        if swallow_exceptions is None:
            settings_obj.SWALLOW_EXCEPTIONS = not debug
        settings_obj.DEBUG_MODE = debug

    if swallow_exceptions is not None:
        settings_obj.SWALLOW_EXCEPTIONS = swallow_exceptions
