"""
Tests for django_fuzzy_segmentation.

Run with: pytest tests/
"""
