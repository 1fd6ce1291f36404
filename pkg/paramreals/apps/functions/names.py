"""
Names of continuous functions on the unit interval.

Interval and iRRAM function names are queried by dyadic intervals. KC
names are queried by a dyadic point r in [0, 1] and a precision n, and
declare a size table that doubles as a modulus of continuity.
"""
from typing import Tuple

from paramreals.apps.core.bitcodec import (
    MonotoneTable,
    decode_dyadic,
    decode_precision,
    encode_dyadic,
    unpair,
)
from paramreals.apps.core.choices import REPRESENTATIONS
from paramreals.apps.core.dyadic import ONE, ZERO, Dyadic
from paramreals.apps.core.exceptions import BrokenNameError, DomainError
from paramreals.apps.core.intervals import DyadicInterval
from paramreals.apps.reals.names import Name, StringName
from paramreals.apps.reals.translate import PaddedName, pad_length_monotone

from .app_settings import app_settings


class IRRAMFunctionName(Name):
    representation = REPRESENTATIONS.irram_function

    def check_query(self, J):
        if not isinstance(J, DyadicInterval):
            raise DomainError(f"{self!r} is queried by dyadic intervals, got {J!r}")
        return J

    def check_answer(self, J, answer):
        if not isinstance(answer, DyadicInterval):
            raise BrokenNameError(f"{self!r} answered {answer!r} to {J!r}")
        return answer


class IntervalFunctionName(IRRAMFunctionName):
    """An iRRAM function name that is also monotone with respect to inclusion"""

    representation = REPRESENTATIONS.interval_function


KCQuery = Tuple[Dyadic, int]


class KCFunctionName(Name):
    representation = REPRESENTATIONS.kc_function

    def __init__(self, query, size_table: MonotoneTable, norm_bits: int = 1, note=""):
        super().__init__(query, note=note)
        self.size_table = size_table
        self.norm_bits = norm_bits

    def check_query(self, q: KCQuery):
        try:
            r, n = q
        except (TypeError, ValueError):
            raise DomainError(f"{self!r} is queried by (r, n) pairs, got {q!r}")
        if not isinstance(r, Dyadic) or not ZERO <= r <= ONE:
            raise DomainError(f"{self!r} is only defined at dyadics in [0, 1], got {r!r}")
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise DomainError(f"{self!r} needs a natural precision, got {n!r}")
        return (r, n)

    def check_answer(self, q, answer):
        if not isinstance(answer, Dyadic):
            raise BrokenNameError(f"{self!r} answered {answer!r} to {q!r}")
        return answer

    def modulus(self, n: int) -> int:
        return self.size_table(n)

    def _answer_string(self, a):
        point_code, precision_code = unpair(a)
        return encode_dyadic(self((decode_dyadic(point_code), decode_precision(precision_code))))

    def string_oracle(self, upto=None) -> PaddedName:
        """
        The name as a length-monotone string function: a query pairs the
        codes of r and n, answers are padded to a length set by the size
        table and the query length.
        """
        upto = upto or app_settings.KC.string_table_length
        bound = MonotoneTable.from_function(
            lambda m: self.size_table(m) + m + 2 * self.norm_bits + 6, upto
        )
        return pad_length_monotone(StringName(self._answer_string, note=self.note), bound)


__all__ = ["IRRAMFunctionName", "IntervalFunctionName", "KCFunctionName", "KCQuery"]
