"""
Metering of names: every query becomes one oracle step on a CostTrace.

A query for precision n costs 1 + n work units (precisions are posed in
unary); any other query costs one unit plus its encoded length. Arithmetic
done while answering is billed by the dyadic operations themselves.
"""
import csv
import logging
from dataclasses import dataclass
from datetime import datetime
from typing import Callable, Optional, Tuple

from .bitcodec import encoded_length
from .choices import VERDICTS
from .costs import CostTrace, QueryRecord
from .schemas import QueryRecord as QueryRecordSchema, TraceReport, VerdictReport
from .sop import Sop

logger = logging.getLogger(__name__)

CSV_FIELDS = ("argument", "query_size", "answer_size", "work")


def query_argument(query) -> int:
    if isinstance(query, int):
        return query
    return encoded_length(query)


def query_cost(query) -> int:
    return 1 + query_argument(query)


def metered(query: Callable, trace: CostTrace) -> Callable:
    def metered_query(q):
        with trace.query(query_argument(q), encoded_length(q), query_cost(q)) as record:
            answer = query(q)
            record.answer_size = encoded_length(answer)
            trace.retain(1)
        return answer

    return metered_query


def attach(name, label: Optional[str] = None) -> Tuple[object, CostTrace]:
    """A metered copy of the name, sharing nothing but the underlying oracle"""
    trace = CostTrace(label=label or getattr(name, "note", "") or type(name).__name__)
    return name.derive(metered(name, trace)), trace


@dataclass
class Verdict:
    verdict: str
    checked: int
    witness: Optional[QueryRecord] = None
    bound_value: Optional[int] = None

    @property
    def dominated(self) -> bool:
        return self.verdict == VERDICTS.dominated


def check_bound(
    trace: CostTrace, P: Sop, l, n: Optional[int] = None, quantity: str = "work"
) -> Verdict:
    """
    Checks every logged query against P(l, argument). With `n`, only the
    queries with argument up to n are checked.
    """
    records = [
        record for record in trace.per_query_log if n is None or record.argument <= n
    ]
    for record in records:
        bound_value = P.evaluate(l, record.argument)
        if getattr(record, quantity) > bound_value:
            logger.info(f"{trace.label}: {quantity} of query {record.argument} exceeds {P}")
            return Verdict(
                VERDICTS.violated, checked=len(records), witness=record, bound_value=bound_value
            )
    return Verdict(VERDICTS.dominated, checked=len(records))


def trace_report(trace: CostTrace) -> TraceReport:
    return TraceReport(
        label=trace.label,
        query_count=trace.query_count,
        bits_read=trace.bits_read,
        bits_written=trace.bits_written,
        work_units=trace.work_units,
        peak_live_nodes=trace.peak_live_nodes,
        per_query_log=[QueryRecordSchema(**vars(record)) for record in trace.per_query_log],
        generated_at=datetime.now(),
    )


def verdict_report(verdict: Verdict, P: Sop, quantity: str = "work") -> VerdictReport:
    witness = verdict.witness and QueryRecordSchema(**vars(verdict.witness))
    return VerdictReport(
        verdict=verdict.verdict,
        bound=P.to_text(),
        quantity=quantity,
        checked=verdict.checked,
        witness=witness,
        bound_value=verdict.bound_value,
        generated_at=datetime.now(),
    )


def trace_from_report(report: TraceReport) -> CostTrace:
    trace = CostTrace(
        label=report.label,
        query_count=report.query_count,
        bits_read=report.bits_read,
        bits_written=report.bits_written,
        work_units=report.work_units,
        peak_live_nodes=report.peak_live_nodes,
    )
    trace.per_query_log = [QueryRecord(**record.dict()) for record in report.per_query_log]
    return trace


def write_json(trace: CostTrace, path, timestamp=False):
    with open(path, "w") as report_file:
        report_file.write(trace_report(trace).to_json(timestamp=timestamp))


def load_json(path) -> CostTrace:
    return trace_from_report(TraceReport.parse_file(path))


def write_csv(trace: CostTrace, path):
    with open(path, "w", newline="") as csv_file:
        writer = csv.DictWriter(csv_file, fieldnames=CSV_FIELDS)
        writer.writeheader()
        for record in trace.per_query_log:
            writer.writerow(vars(record))


__all__ = [
    "attach",
    "metered",
    "query_argument",
    "query_cost",
    "Verdict",
    "check_bound",
    "trace_report",
    "verdict_report",
    "trace_from_report",
    "write_json",
    "load_json",
    "write_csv",
]
