"""
DRF serializers for pattern files.

The serializers validate the decoded JSON document field by field; building
engine objects from validated data happens in fileio.patterns.
"""

from rest_framework import serializers

from django_fuzzy_segmentation.engine.measure import format_degree, parse_degree
from django_fuzzy_segmentation.exceptions import DegreeError

SYMBOL_KINDS = ["relative_count", "max_run", "char_table"]
ACCUMULATORS = ["product", "min"]
TOP_LEVEL_FIELDS = {
    "alphabet",
    "symbols",
    "pattern",
    "lambda_min",
    "lambda_max",
    "mu",
    "accumulator",
}


class DegreeField(serializers.Field):
    """A membership degree written as "p/q", "0", "1" or a finite decimal."""

    default_error_messages = {
        "invalid": "Expected a degree such as \"2/3\" or \"0.75\", got {value!r}.",
    }

    def to_internal_value(self, data):
        if isinstance(data, bool) or not isinstance(data, (str, int, float)):
            self.fail("invalid", value=data)
        try:
            return parse_degree(data if isinstance(data, str) else str(data))
        except DegreeError as e:
            raise serializers.ValidationError(str(e))

    def to_representation(self, value):
        return format_degree(value)


def _char_field(**kwargs):
    return serializers.CharField(min_length=1, max_length=1, trim_whitespace=False, **kwargs)


class SymbolSerializer(serializers.Serializer):
    """One entry of the `symbols` map."""

    kind = serializers.ChoiceField(choices=SYMBOL_KINDS)
    chars = serializers.ListField(child=_char_field(), required=False, allow_empty=False)
    table = serializers.DictField(child=DegreeField(), required=False)

    def validate(self, attrs):
        kind = attrs["kind"]
        if kind == "char_table":
            if "table" not in attrs:
                raise serializers.ValidationError({"table": ["Required for char_table symbols."]})
            if "chars" in attrs:
                raise serializers.ValidationError({"chars": ["Not allowed for char_table symbols."]})
        else:
            if "chars" not in attrs:
                raise serializers.ValidationError({"chars": [f"Required for {kind} symbols."]})
            if "table" in attrs:
                raise serializers.ValidationError({"table": [f"Not allowed for {kind} symbols."]})
        return attrs


class PatternFileSerializer(serializers.Serializer):
    """
    A pattern file.

    Local problems carry `mu` and `lambda_max`; global problems carry
    `accumulator` (or omit `mu`) and have no `lambda_max`.
    """

    alphabet = serializers.ListField(child=_char_field(), allow_empty=False)
    symbols = serializers.DictField(child=SymbolSerializer(), allow_empty=False)
    pattern = serializers.ListField(child=serializers.CharField(), allow_empty=False)
    lambda_min = serializers.IntegerField(min_value=1)
    lambda_max = serializers.IntegerField(min_value=1, required=False)
    mu = DegreeField(required=False)
    accumulator = serializers.ChoiceField(choices=ACCUMULATORS, required=False)

    def validate(self, attrs):
        errors: dict = {}

        unknown = sorted(set(self.initial_data) - TOP_LEVEL_FIELDS)
        for name in unknown:
            errors[name] = ["Unknown field."]

        alphabet = attrs["alphabet"]
        if len(set(alphabet)) != len(alphabet):
            errors["alphabet"] = ["Alphabet contains duplicate characters."]
        members = set(alphabet)

        symbol_errors: dict = {}
        for name, symbol in attrs["symbols"].items():
            chars = symbol.get("chars") or list(symbol.get("table", {}))
            field = "chars" if "chars" in symbol else "table"
            outside = [c for c in chars if c not in members]
            if outside:
                symbol_errors[name] = {field: [f"Not in the alphabet: {', '.join(map(repr, outside))}."]}
        if symbol_errors:
            errors["symbols"] = symbol_errors

        pattern_errors = {
            index: [f"Unknown symbol {name!r}."]
            for index, name in enumerate(attrs["pattern"])
            if name not in attrs["symbols"]
        }
        if pattern_errors:
            errors["pattern"] = pattern_errors

        is_global = "accumulator" in attrs or "mu" not in attrs
        if is_global:
            if "lambda_max" in attrs:
                errors["lambda_max"] = ["Not allowed for global problems (no upper length bound)."]
            if "mu" in attrs:
                errors["mu"] = ["Not allowed together with accumulator."]
        else:
            if "lambda_max" not in attrs:
                errors["lambda_max"] = ["Required when mu is given."]
            elif attrs["lambda_max"] < attrs["lambda_min"]:
                errors["lambda_max"] = [
                    f"Must be at least lambda_min ({attrs['lambda_min']})."
                ]

        if errors:
            raise serializers.ValidationError(errors)
        attrs["is_global"] = is_global
        return attrs


def flatten_errors(errors, path: str = "") -> list[str]:
    """
    Turn nested DRF error details into "dotted.path: message" lines.

    Top-level non-field errors are reported without a path.
    """
    lines: list[str] = []
    if isinstance(errors, dict):
        for key, value in errors.items():
            key = str(key)
            child = path if key == "non_field_errors" else (f"{path}.{key}" if path else key)
            lines.extend(flatten_errors(value, child))
    elif isinstance(errors, list):
        for item in errors:
            if isinstance(item, (dict, list)):
                lines.extend(flatten_errors(item, path))
            else:
                lines.append(f"{path}: {item}" if path else str(item))
    else:
        lines.append(f"{path}: {errors}" if path else str(errors))
    return lines
