"""
Standalone command-line entry point.

`fuzzy-segment <command> ...` runs one of the management commands without
a Django project: when no settings are configured, a minimal settings
object with just this app is set up first.

Exit codes: 0 on success, 1 on input errors, 2 on infeasible constraints.
"""

import logging
import sys
from typing import Optional, Sequence, TextIO

import django
from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError

from django_fuzzy_segmentation.conf import _get_debug_from_env

logger = logging.getLogger(__name__)

COMMANDS = ("segment", "match", "decompose", "oracle", "bench")

USAGE = f"usage: fuzzy-segment {{{','.join(COMMANDS)}}} [options]\n"


def _ensure_django() -> None:
    """Configure minimal settings if the caller has not, then set Django up."""
    if not settings.configured:
        level = "DEBUG" if _get_debug_from_env() else "WARNING"
        settings.configure(
            INSTALLED_APPS=["rest_framework", "django_fuzzy_segmentation"],
            USE_TZ=True,
            LOGGING={
                "version": 1,
                "disable_existing_loggers": False,
                "handlers": {"stderr": {"class": "logging.StreamHandler"}},
                "loggers": {
                    "django_fuzzy_segmentation": {"handlers": ["stderr"], "level": level},
                },
            },
        )
    django.setup()


def run_cli(
    argv: Optional[Sequence[str]] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    """
    Run a command and return its exit code.

    Args:
        argv: Command name followed by its arguments (default: sys.argv[1:]).
        stdout: Stream for results (default: sys.stdout).
        stderr: Stream for diagnostics (default: sys.stderr).
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    if not argv or argv[0] not in COMMANDS:
        stderr.write(USAGE)
        return 1

    _ensure_django()
    try:
        call_command(argv[0], *argv[1:], stdout=stdout, stderr=stderr)
    except CommandError as e:
        stderr.write(f"Error: {e}\n")
        return e.returncode
    return 0


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
