"""
Code to convert qplanar attrs records to an Avro specification.
"""
from typing import get_args, get_origin

from qplanar.reports.types import DEFAULT_FIELD_TYPES, PYTHON_TYPE_TO_AVRO_MAPPING, SIMPLE_PYTHON_TYPE_TO_AVRO_MAPPING


def schema_from_record(record_class, custom_type_to_avro_type=None):
    """
    Create an Avro schema for the instances of an attrs record class.

    Arguments:
        - record_class: an ``attr.s`` decorated class, eg ``BoundReport``.
        - custom_type_to_avro_type: a map of Python class to Avro type, merged over DEFAULT_FIELD_TYPES.

    Returns:
        - An Avro schema definition for the record.
    """
    field_types = {**DEFAULT_FIELD_TYPES, **(custom_type_to_avro_type or {})}
    previously_seen_types = {record_class.__name__}
    doc = (record_class.__doc__ or "").strip().splitlines()
    return {
        "name": record_class.__name__,
        "type": "record",
        "doc": doc[0] if doc else record_class.__name__,
        "namespace": record_class.__module__,
        "fields": [
            _create_avro_field_definition(
                attribute.name,
                attribute.type,
                previously_seen_types,
                custom_type_to_avro_type=field_types,
                default_is_none=attribute.default is None,
            )
            for attribute in record_class.__attrs_attrs__
        ],
    }


def _named_type(avro_type, previously_seen_types):
    """
    Refer to an already defined named type by its name; fastavro rejects redefinitions.
    """
    if not isinstance(avro_type, dict) or "name" not in avro_type:
        return avro_type
    if avro_type["name"] in previously_seen_types:
        return avro_type["name"]
    previously_seen_types.add(avro_type["name"])
    return avro_type


def _create_avro_field_definition(data_key, data_type, previously_seen_types,
                                  custom_type_to_avro_type=None, default_is_none=False):
    """
    Create an Avro schema field definition from an attrs attribute.

    Arguments:
        - data_key: Field name, eg ``q``, ``lemma_tag``, ``verdict``.
        - data_type: Python data type, eg ``float``, ``Fraction``, ``List[int]``, ``CertificateVerdict``.
        - previously_seen_types: set of record names already defined in the schema.
        - custom_type_to_avro_type: map of custom data types to a pre-determined avro field type.
        - default_is_none: whether this field has ``None`` as a default.

    Returns:
        - An Avro field definition.

    Raises:
        - TypeError: If the type is unannotated or not supported.
    """
    field = {"name": data_key}
    overrides = custom_type_to_avro_type or {}
    data_type_origin = get_origin(data_type)

    # Case 1: data_type has a predetermined avro field representation
    if data_type in overrides:
        field["type"] = _named_type(overrides[data_type], previously_seen_types)
    # Case 2: data_type is a simple type that can be converted directly to an Avro type
    elif data_type in PYTHON_TYPE_TO_AVRO_MAPPING:
        if PYTHON_TYPE_TO_AVRO_MAPPING[data_type] in ("map", "array"):
            raise TypeError(f"Field {data_key}: dict or array fields need an annotation, eg List[int].")
        field["type"] = PYTHON_TYPE_TO_AVRO_MAPPING[data_type]
    # Case 3: data_type is a list (possibly with complex items)
    elif data_type_origin in (list, tuple):
        field["type"] = {
            "type": "array",
            "items": _get_avro_type_for_item(data_key, data_type, 0, previously_seen_types, overrides),
        }
    # Case 4: data_type is a dictionary with string keys
    elif data_type_origin is dict:
        key_type = get_args(data_type)[0]
        if key_type is not str:
            raise TypeError(f"Field {data_key}: Avro maps need string keys, found {key_type}.")
        field["type"] = {
            "type": "map",
            "values": _get_avro_type_for_item(data_key, data_type, 1, previously_seen_types, overrides),
        }
    # Case 5: data_type is a nested attrs record
    elif hasattr(data_type, "__attrs_attrs__"):
        if data_type.__name__ in previously_seen_types:
            field["type"] = data_type.__name__
        else:
            previously_seen_types.add(data_type.__name__)
            field["type"] = {
                "name": data_type.__name__,
                "type": "record",
                "fields": [
                    _create_avro_field_definition(
                        attribute.name,
                        attribute.type,
                        previously_seen_types,
                        custom_type_to_avro_type=overrides,
                        default_is_none=attribute.default is None,
                    )
                    for attribute in data_type.__attrs_attrs__
                ],
            }
    else:
        raise TypeError(
            f"Data type {data_type} of field {data_key} is not supported. The data type needs to either"
            " be one of the types in PYTHON_TYPE_TO_AVRO_MAPPING, an attrs decorated class, or one of the types"
            " defined in custom_type_to_avro_type."
        )
    if default_is_none:
        field["default"] = None
        field["type"] = ["null", field["type"]]
    return field


def _get_avro_type_for_item(data_key, data_type, position, previously_seen_types, overrides):
    """
    Avro type of the items of an annotated list (``position`` 0) or the values of a dict (``position`` 1).
    """
    arguments = get_args(data_type)
    if len(arguments) <= position:
        raise TypeError(f"Field {data_key}: {data_type} needs a type annotation, eg List[int] or Dict[str, int].")
    item_type = arguments[position]
    if item_type in overrides:
        return _named_type(overrides[item_type], previously_seen_types)
    if item_type in SIMPLE_PYTHON_TYPE_TO_AVRO_MAPPING:
        return SIMPLE_PYTHON_TYPE_TO_AVRO_MAPPING[item_type]
    if get_origin(item_type) in (dict, list, tuple) or hasattr(item_type, "__attrs_attrs__"):
        return _create_avro_field_definition("item", item_type, previously_seen_types, overrides)["type"]
    raise TypeError(f"Field {data_key}: item type {item_type} is not supported.")
