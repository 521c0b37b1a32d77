"""
Avro types used for the fields of qplanar records.
"""
from fractions import Fraction

from qplanar.graphs import Graph

SIMPLE_PYTHON_TYPE_TO_AVRO_MAPPING = {
    bool: "boolean",
    int: "long",
    float: "double",
    bytes: "bytes",
    str: "string",
}
PYTHON_TYPE_TO_AVRO_MAPPING = {
    **SIMPLE_PYTHON_TYPE_TO_AVRO_MAPPING,
    None: "null",
    dict: "map",
    list: "array",
    tuple: "array",
}

# A graph is written as its edge list.
GRAPH_AVRO_TYPE = {
    "name": "Graph",
    "type": "record",
    "fields": [
        {"name": "n", "type": "long"},
        {"name": "m", "type": "long"},
        {"name": "edges", "type": {"type": "array", "items": {"type": "array", "items": "long"}}},
    ],
}

# Exact rationals keep their "p/q" text.
DEFAULT_FIELD_TYPES = {
    Fraction: "string",
    Graph: GRAPH_AVRO_TYPE,
}
