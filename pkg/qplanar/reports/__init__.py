"""
Report output: json, csv, text and Avro renderings of the qplanar records.
"""
from qplanar.reports.schema import schema_from_record
from qplanar.reports.writer import (
    FORMATS,
    ReportPrettyPrinter,
    flat_row,
    format_json,
    format_text,
    read_avro,
    to_avro_data,
    write_avro,
    write_csv,
)

__all__ = [
    "FORMATS",
    "ReportPrettyPrinter",
    "flat_row",
    "format_json",
    "format_text",
    "read_avro",
    "schema_from_record",
    "to_avro_data",
    "write_avro",
    "write_csv",
]
