"""
Names: memoizing oracles for real numbers and string functions.

A name is a pure function on queries. Every distinct query is answered
once, so attaching a meter (core.meter.attach) counts distinct queries,
and strategies that share subterms rely on that.
"""
from __future__ import annotations

import copy
import logging
import threading
from typing import Callable, Dict, List, Optional

from paramreals.apps.core.bitcodec import (
    decode_precision,
    encode_dyadic,
    encode_interval,
)
from paramreals.apps.core.choices import REPRESENTATIONS
from paramreals.apps.core.dyadic import Dyadic
from paramreals.apps.core.exceptions import BrokenNameError, DomainError
from paramreals.apps.core.intervals import DyadicInterval, intersect

logger = logging.getLogger(__name__)


class Name:
    representation: Optional[str] = None
    registry: Dict[str, type] = {}

    def __init_subclass__(cls, **kw):
        super().__init_subclass__(**kw)
        if cls.__dict__.get("representation"):
            Name.registry[cls.representation] = cls

    def __init__(self, query: Callable, note: str = ""):
        self.query = query
        self.note = note
        self._memo = {}
        self._lock = threading.Lock()

    def check_query(self, q):
        return q

    def check_answer(self, q, answer):
        return answer

    def __call__(self, q):
        try:
            return self._memo[q]
        except KeyError:
            pass

        q = self.check_query(q)
        answer = self.check_answer(q, self.query(q))
        with self._lock:
            return self._memo.setdefault(q, answer)

    @property
    def query_log(self) -> List:
        with self._lock:
            return list(self._memo.items())

    def derive(self, query: Callable) -> Name:
        """Same kind of name, same attributes, another oracle and an empty memo"""
        clone = copy.copy(self)
        clone.query = query
        clone._memo = {}
        clone._lock = threading.Lock()
        return clone

    def __repr__(self):
        label = self.note or hex(id(self))
        return f"<{type(self).__name__} {label}>"


class RealName(Name):
    """Names queried by a precision n >= 0"""

    answer_type: type = object

    def check_query(self, n):
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise DomainError(f"{self!r} is queried by naturals, got {n!r}")
        return n

    def check_answer(self, n, answer):
        if not isinstance(answer, self.answer_type):
            raise BrokenNameError(f"{self!r} answered {answer!r} to query {n}")
        return answer


class CauchyName(RealName):
    representation = REPRESENTATIONS.cauchy
    answer_type = Dyadic


class IRRAMRealName(RealName):
    representation = REPRESENTATIONS.irram
    answer_type = DyadicInterval


class IntervalRealName(IRRAMRealName):
    """An iRRAM name whose answers are also nested"""

    representation = REPRESENTATIONS.interval


class StringName(Name):
    representation = REPRESENTATIONS.string

    def check_answer(self, a, answer):
        if not isinstance(answer, str) or answer.strip("01"):
            raise BrokenNameError(f"{self!r} answered a non-binary string to {a!r}")
        return answer


def encode_answer(answer) -> str:
    if isinstance(answer, Dyadic):
        return encode_dyadic(answer)
    if isinstance(answer, DyadicInterval):
        return encode_interval(answer)
    return answer


def as_string_function(phi: Name) -> StringName:
    if isinstance(phi, StringName):
        return phi
    return StringName(
        lambda a: encode_answer(phi(decode_precision(a))), note=phi.note or repr(phi)
    )


class ProductName(StringName):
    """Name of a pair: queries 0a go to the first name, 1a to the second"""

    representation = None

    def __init__(self, first: Name, second: Name, note=""):
        self.first = first
        self.second = second
        self._first_strings = as_string_function(first)
        self._second_strings = as_string_function(second)
        super().__init__(self._route, note=note or f"({first.note}, {second.note})")

    def _route(self, a):
        if not a:
            return ""
        component = self._first_strings if a[0] == "0" else self._second_strings
        return component(a[1:])


def pair_names(a: Name, b: Name) -> ProductName:
    return ProductName(a, b)


def from_callback(kind: str, f: Callable, contract_note: str = "") -> Name:
    """Wraps a plain function; the caller vouches for the representation's contract"""
    try:
        name_class = Name.registry[kind]
    except KeyError:
        raise ValueError(f"Unknown representation {kind!r}")
    return name_class(f, note=contract_note)


class RunningIntersection:
    """k -> step(0) ∩ ... ∩ step(k), each step evaluated once"""

    def __init__(self, step: Callable[[int], DyadicInterval]):
        self.step = step
        self._answers: List[DyadicInterval] = []
        self._lock = threading.RLock()

    def __call__(self, n: int) -> DyadicInterval:
        with self._lock:
            while len(self._answers) <= n:
                current = self.step(len(self._answers))
                if self._answers:
                    current = intersect(self._answers[-1], current)
                self._answers.append(current)
            return self._answers[n]


__all__ = [
    "Name",
    "RealName",
    "CauchyName",
    "IRRAMRealName",
    "IntervalRealName",
    "StringName",
    "ProductName",
    "as_string_function",
    "encode_answer",
    "pair_names",
    "from_callback",
    "RunningIntersection",
]
