"""
Django app configuration for django_fuzzy_segmentation.
"""

import logging

from django.apps import AppConfig

logger = logging.getLogger(__name__)


class FuzzySegmentationConfig(AppConfig):
    """Configuration for the fuzzy segmentation app."""

    name = "django_fuzzy_segmentation"
    verbose_name = "Fuzzy Segmentation"

    def ready(self):
        """
        Called when Django starts. Loads FUZZY_SEGMENTATION so that invalid
        settings fail at start-up rather than on the first command.
        """
        from django_fuzzy_segmentation.conf import is_debug, segmentation_settings

        settings = segmentation_settings()
        logger.debug(
            f"Fuzzy segmentation ready (debug={is_debug()}, "
            f"enumeration_cap={settings.ENUMERATION_CAP})"
        )
