# Management commands for django_fuzzy_segmentation
