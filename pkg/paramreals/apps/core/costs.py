"""
Declared cost model.

Work units stand in for machine steps. Dyadic operations charge every
trace that is active in the current context, so a computation is billed
no matter how deeply its arithmetic is nested inside names and
translations.
"""
import contextlib
import contextvars
from dataclasses import dataclass, field
from typing import List, Optional

_active_traces: contextvars.ContextVar = contextvars.ContextVar("active_traces", default=())


@dataclass
class QueryRecord:
    argument: int
    query_size: int
    answer_size: int
    work: int


@dataclass
class CostTrace:
    label: str = ""
    query_count: int = 0
    bits_read: int = 0
    bits_written: int = 0
    work_units: int = 0
    live_nodes: int = 0
    peak_live_nodes: int = 0
    per_query_log: List[QueryRecord] = field(default_factory=list)
    _depth: int = field(default=0, repr=False, compare=False)

    def charge(self, units: int):
        self.work_units += units

    def retain(self, count: int = 1):
        self.live_nodes += count
        self.peak_live_nodes = max(self.peak_live_nodes, self.live_nodes)

    def release(self, count: int = 1):
        self.live_nodes = max(0, self.live_nodes - count)

    @contextlib.contextmanager
    def active(self):
        token = _active_traces.set(_active_traces.get() + (self,))
        try:
            yield self
        finally:
            _active_traces.reset(token)

    @contextlib.contextmanager
    def query(self, argument: int, query_size: int, query_cost: int):
        """
        Records one oracle call. Only the outermost call on this trace gets a
        log entry carrying the work done inside it, so the log always sums
        up to the totals.
        """
        record: Optional[QueryRecord] = None
        started_at = self.work_units
        self._depth += 1
        try:
            with self.active():
                charge(query_cost)
                self.query_count += 1
                self.bits_written += query_size
                record = QueryRecord(
                    argument=argument, query_size=query_size, answer_size=0, work=0
                )
                yield record
        finally:
            self._depth -= 1
            self.bits_read += record.answer_size if record else 0
            if record is not None and self._depth == 0:
                record.work = self.work_units - started_at
                self.per_query_log.append(record)

    @property
    def logged_work(self) -> int:
        return sum(record.work for record in self.per_query_log)


def charge(units: int):
    for trace in _active_traces.get():
        trace.charge(units)


def active_traces():
    return _active_traces.get()


@contextlib.contextmanager
def suspended():
    """Stops billing arithmetic; used where a caller charges its own fuel instead"""
    token = _active_traces.set(())
    try:
        yield
    finally:
        _active_traces.reset(token)


__all__ = ["QueryRecord", "CostTrace", "charge", "active_traces", "suspended"]
