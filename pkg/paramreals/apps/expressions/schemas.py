from typing import Any, Dict, List

from paramreals.apps.core.schemas import Report, TraceReport


class EvaluationReport(Report):
    expression: str
    strategy: str
    precision: int
    bindings: Dict[str, str] = {}
    enclosure: str
    trace: TraceReport


class BenchReport(Report):
    benchmark: str
    parameters: Dict[str, Any]
    rows: List[Dict[str, Any]]
    fitted: Dict[str, float] = {}


__all__ = ["EvaluationReport", "BenchReport"]
