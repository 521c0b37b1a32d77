"""
Serialization helpers shared by the qplanar records.

Records are ``attr.s(frozen=True)`` classes; the mixin below turns them into
json-compatible dictionaries the same way for every subpackage.
"""
import json
from fractions import Fraction

import attrs

SIGNIFICANT_DIGITS = 12


def format_float(value):
    """
    Round a float to 12 significant digits so reports diff cleanly.
    """
    return float(f"{value:.{SIGNIFICANT_DIGITS}g}")


def format_fraction(value):
    """
    Represent an exact rational as a ``"p/q"`` string.
    """
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text):
    """
    Parse a ``"p/q"`` (or integer) string into a Fraction.
    """
    return Fraction(text)


def value_serializer(inst, field, value):  # pylint: disable=unused-argument
    """
    Serialize non-json values found while walking an attrs record.
    """
    if getattr(value, "serialize_as_value", False):
        return value.to_json_data()
    if isinstance(value, Fraction):
        return format_fraction(value)
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, (frozenset, set)):
        return sorted(value)
    if hasattr(value, "tolist"):
        return [format_float(float(item)) for item in value.tolist()]
    return value


class JsonRecordMixin:
    """
    Give an attrs record ``to_json_data`` and ``to_json`` methods.
    """

    # Fields left out of the json representation.
    json_exclude = ()

    def to_json_data(self):
        """
        Create a json-compatible dictionary of the instance.
        """
        exclude = set(self.json_exclude)
        return attrs.asdict(
            self,
            filter=lambda attribute, _: attribute.name not in exclude,
            value_serializer=value_serializer,
        )

    def to_json(self):
        """
        Serialize instance to json string.
        """
        return json.dumps(self.to_json_data(), sort_keys=True)
