from datetime import datetime
from typing import List, Optional

from pydantic import BaseModel

SCHEMA_VERSION = 1


class Report(BaseModel):
    schema_version: int = SCHEMA_VERSION
    generated_at: Optional[datetime]

    class Config:
        fields = {"schema_version": "schema"}
        allow_population_by_field_name = True

    def to_json(self, timestamp=False) -> str:
        exclude = None if timestamp else {"generated_at"}
        return self.json(by_alias=True, sort_keys=True, indent=2, exclude=exclude) + "\n"


class QueryRecord(BaseModel):
    argument: int
    query_size: int
    answer_size: int
    work: int


class TraceReport(Report):
    label: str = ""
    query_count: int
    bits_read: int
    bits_written: int
    work_units: int
    peak_live_nodes: int
    per_query_log: List[QueryRecord]


class VerdictReport(Report):
    verdict: str
    bound: str
    quantity: str
    checked: int
    witness: Optional[QueryRecord]
    bound_value: Optional[int]


class ParameterRow(BaseModel):
    n: int
    conv_index: int
    mag_low: int
    mag_high: int
    value: int
    estimate: bool = False


class FunctionParameterRow(BaseModel):
    n: int
    modulus_part_lower: int
    modulus_part_upper: int
    norm_mag_upper: int
    value: int


class MeasurementReport(Report):
    representation: str
    rows: List[ParameterRow]


class TranslationReport(Report):
    source: str
    target: str
    depth: int
    trace: TraceReport


__all__ = [
    "SCHEMA_VERSION",
    "Report",
    "QueryRecord",
    "TraceReport",
    "VerdictReport",
    "ParameterRow",
    "FunctionParameterRow",
    "MeasurementReport",
    "TranslationReport",
]
