"""
Render qplanar records as json, csv, text or an Avro object container file.
"""
import csv
import json
import logging
from fractions import Fraction
from pprint import PrettyPrinter

import attrs
import fastavro

from qplanar.data import format_fraction, value_serializer
from qplanar.reports.schema import schema_from_record

logger = logging.getLogger(__name__)

FORMATS = ("json", "csv", "text", "avro")


class ReportPrettyPrinter(PrettyPrinter):
    """
    Pretty printer for report dictionaries.

    Floats are shown with 12 significant digits and fractions as ``p/q``.
    """

    def format(self, obj, context, maxlevels, level):
        """
        Override format to print numbers the way the json reports do.
        """
        if isinstance(obj, float):
            return f"{obj:.12g}", True, False
        if isinstance(obj, Fraction):
            return format_fraction(obj), True, False
        return super().format(obj, context, maxlevels, level)


def format_text(data, width=100):
    """
    Format a report dictionary (or a list of them) for reading.

    Arguments:
        data (dict or list): json-compatible report data.
        width (int): desired output width.

    Returns:
        (str) indented representation with sorted keys.
    """
    return ReportPrettyPrinter(indent=1, width=width, sort_dicts=True).pformat(data)


def format_json(data):
    return json.dumps(data, sort_keys=True, indent=2)


def flat_row(data):
    """
    Scalar entries of a report dictionary, the columns of its csv row.
    """
    return {key: value for key, value in sorted(data.items()) if not isinstance(value, (dict, list))}


def write_csv(rows, stream):
    """
    Write dictionaries sharing the keys of the first one as csv with a header line.
    """
    rows = list(rows)
    if not rows:
        return
    writer = csv.DictWriter(stream, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)


def to_avro_data(record):
    """
    Create an Avro record dictionary from a qplanar record, with every field included.
    """
    return attrs.asdict(record, value_serializer=value_serializer)


def write_avro(stream, records, record_class=None):
    """
    Write records of one class to an Avro object container file.

    Arguments:
        stream: binary file-like object.
        records (iterable): instances of one attrs record class.
        record_class (type): class of the records; taken from the first record when None.

    Raises:
        TypeError: If the class cannot be described in Avro or the records are of mixed classes.
        ValueError: If there are no records and no ``record_class``.
    """
    records = list(records)
    if record_class is None:
        if not records:
            raise ValueError("record_class is needed to write an empty Avro file")
        record_class = type(records[0])
    if any(type(record) is not record_class for record in records):
        raise TypeError(f"every record must be a {record_class.__name__}")
    schema = fastavro.parse_schema(schema_from_record(record_class))
    fastavro.writer(stream, schema, [to_avro_data(record) for record in records])
    logger.debug("wrote %d %s records as Avro", len(records), record_class.__name__)


def read_avro(stream):
    """
    Read the record dictionaries of an Avro object container file.
    """
    return list(fastavro.reader(stream))
