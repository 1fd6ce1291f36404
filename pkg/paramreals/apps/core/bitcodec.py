"""
Bit-exact encodings over the alphabet {0, 1}.

Every notion of "size" used by the meter is the length of one of these
codes, so they are written to be measurable without materializing huge
strings (see the *_code_length helpers).
"""
from __future__ import annotations

import logging
from typing import Iterable, Optional, Tuple

from .choices import EXTENSION_RULES
from .dyadic import Dyadic
from .exceptions import DecodeError, FormatError, NonMonotoneTableError, TableRangeError
from .intervals import INFINITE, DyadicInterval, FiniteInterval
from .typing import BitString

logger = logging.getLogger(__name__)

INFINITE_CODE = "1"


def encode_int(z: int) -> BitString:
    """Sign bit followed by the binary numeral of |z| with its leading 1"""
    sign = "1" if z < 0 else "0"
    return sign + (format(abs(z), "b") if z else "")


def decode_int(a: BitString) -> int:
    if len(a) < 2:
        return 0
    magnitude = int(a[1:], 2)
    return -magnitude if a[0] == "1" else magnitude


def encode_precision(n: int) -> BitString:
    """Precision queries are posed as the code of 2^n, i.e. in unary"""
    return "01" + "0" * n


def decode_precision(a: BitString) -> int:
    value = decode_int(a)
    return max(0, value.bit_length() - 1)


def precision_code_length(n: int) -> int:
    return n + 2


def encode_dyadic(d: Dyadic) -> BitString:
    """
    Sign bit, the integer part with every bit doubled, the separator 01 and
    then the fractional bits.
    """
    magnitude = abs(d)
    integer_part = int(magnitude.mantissa >> max(magnitude.exponent, 0)) << max(
        -magnitude.exponent, 0
    )
    integer_bits = format(integer_part, "b") if integer_part else ""
    if magnitude.exponent > 0:
        fraction = int(magnitude.mantissa) & ((1 << magnitude.exponent) - 1)
        fraction_bits = format(fraction, f"0{magnitude.exponent}b")
    else:
        fraction_bits = ""

    sign = "1" if d.sign < 0 else "0"
    doubled = "".join(bit * 2 for bit in integer_bits)
    return f"{sign}{doubled}01{fraction_bits}"


def decode_dyadic(a: BitString) -> Dyadic:
    if not a:
        raise DecodeError("Empty string is not a dyadic code")

    position = 1
    integer_part = 0
    while True:
        pair = a[position : position + 2]
        if len(pair) < 2:
            raise DecodeError(f"Missing separator in dyadic code {a!r}")
        if pair == "01":
            break
        if pair == "10":
            raise DecodeError(f"Malformed pair at offset {position} of {a!r}")
        integer_part = 2 * integer_part + int(pair[0])
        position += 2

    fraction_bits = a[position + 2 :]
    fraction = int(fraction_bits, 2) if fraction_bits else 0
    value = Dyadic(integer_part) + Dyadic(fraction, len(fraction_bits))
    return -value if a[0] == "1" else value


def dyadic_code_length(d: Dyadic) -> int:
    mantissa_bits = abs(d).mantissa.bit_length()
    integer_bits = max(mantissa_bits - d.exponent, 0)
    fraction_bits = max(d.exponent, 0)
    return 1 + 2 * integer_bits + 2 + fraction_bits


def _header(length_a: int, length_b: int) -> Tuple[BitString, int]:
    """Third-track header; a "1" plus the 2-bit length difference keeps close lengths injective"""
    shorter, longer = sorted((length_a, length_b))
    flag = "1" if length_a > length_b else "0"
    difference = longer - shorter
    if difference <= 2:
        # lengths this close can not be told apart from the padding, spell the difference
        tail = "1" + format(difference, "02b")
        total = shorter + 5
    else:
        tail = "0"
        total = longer
    header = ("1" * shorter + "0" + flag + tail).ljust(total, "0")
    return header, total


def pair_strings(a: BitString, b: BitString) -> BitString:
    """
    Three-track interleaving: symbol i of the result's i-th block is a_i,
    b_i and the header symbol c_i, with a and b padded by zeros.
    """
    header, total = _header(len(a), len(b))
    tracks = zip(a.ljust(total, "0"), b.ljust(total, "0"), header)
    return "".join("".join(block) for block in tracks)


def _tracks(c: BitString):
    return c[0::3], c[1::3], c[2::3]


def unpair_prefix(c: BitString, n: int) -> Tuple[BitString, BitString]:
    """Length-n prefixes of both components, read from the first 3(n+2) symbols"""
    needed = 3 * (n + 2)
    if len(c) < needed:
        raise DecodeError(f"Need {needed} symbols to read {n} symbols of each component")

    a, b, header = _tracks(c[:needed])
    shorter = header.find("0")
    if 0 <= shorter < n:
        if header[shorter + 1] == "1":
            b = b[:shorter]
        else:
            a = a[:shorter]
    return a[:n], b[:n]


def unpair(c: BitString) -> Tuple[BitString, BitString]:
    if len(c) % 3:
        raise DecodeError(f"A pairing has a length that is a multiple of three, got {len(c)}")

    a, b, header = _tracks(c)
    shorter = header.find("0")
    if shorter < 0 or len(header) < shorter + 3:
        raise DecodeError(f"Malformed pairing header {header!r}")

    a_is_longer = header[shorter + 1] == "1"
    if header[shorter + 2] == "1":
        if len(header) < shorter + 5:
            raise DecodeError(f"Malformed pairing header {header!r}")
        longer = shorter + int(header[shorter + 3 : shorter + 5], 2)
    else:
        longer = len(header)

    if a_is_longer:
        return a[:longer], b[:shorter]
    return a[:shorter], b[:longer]


def paired_length(length_a: int, length_b: int) -> int:
    return 3 * _header(length_a, length_b)[1]


def encode_interval(J: DyadicInterval) -> BitString:
    if not J.is_finite:
        return INFINITE_CODE
    return pair_strings(encode_dyadic(J.center), encode_dyadic(J.radius))


def decode_interval(a: BitString) -> DyadicInterval:
    if a == INFINITE_CODE:
        return INFINITE
    center, radius = unpair(a)
    return FiniteInterval(decode_dyadic(center), decode_dyadic(radius))


def interval_code_length(J: DyadicInterval) -> int:
    if not J.is_finite:
        return len(INFINITE_CODE)
    return paired_length(dyadic_code_length(J.center), dyadic_code_length(J.radius))


def encoded_length(value) -> int:
    """Code length of anything a name can be asked or answer"""
    if isinstance(value, str):
        return len(value)
    if isinstance(value, bool):
        raise TypeError("Booleans have no code")
    if isinstance(value, int):
        return precision_code_length(value)
    if isinstance(value, Dyadic):
        return dyadic_code_length(value)
    if isinstance(value, DyadicInterval):
        return interval_code_length(value)
    if isinstance(value, tuple) and len(value) == 2:
        return paired_length(encoded_length(value[0]), encoded_length(value[1]))
    raise TypeError(f"No code defined for {value!r}")


class SizeReading(int):
    """A size value that remembers whether it was only observed"""

    def __new__(cls, value: int, observed: bool):
        reading = super().__new__(cls, value)
        reading.observed = observed
        return reading

    def __repr__(self):
        kind = "observed" if self.observed else "exact"
        return f"SizeReading({int(self)}, {kind})"


def size_of(phi, n: int) -> SizeReading:
    """
    |phi|(n), the longest answer to a query of length at most n.

    Structured names that know their size bound answer exactly. Anything
    else is read from its log of (query length, answer length) pairs and
    the result is only a lower bound on the true size.
    """
    size_bound = getattr(phi, "size_bound", None)
    if size_bound is not None:
        return SizeReading(size_bound(n), observed=False)

    if hasattr(phi, "query_log"):
        lengths = [
            (encoded_length(query), encoded_length(answer)) for query, answer in phi.query_log
        ]
    else:
        lengths = list(phi)

    return SizeReading(
        max((answer for query, answer in lengths if query <= n), default=0), observed=True
    )


class MonotoneTable:
    """Finite nondecreasing sequence of naturals with a declared extension rule"""

    def __init__(self, values: Iterable[int], extension=EXTENSION_RULES.hold):
        self.values: Tuple[int, ...] = tuple(int(value) for value in values)
        self.extension = extension

        if not self.values:
            raise NonMonotoneTableError("A monotone table needs at least one value")

        if extension not in EXTENSION_RULES:
            raise ValueError(f"Unknown extension rule {extension}")

        for index, current in enumerate(self.values):
            if current < 0:
                raise NonMonotoneTableError(f"Table holds a negative value at {index}")

        for index, (current, following) in enumerate(zip(self.values, self.values[1:])):
            if following < current:
                raise NonMonotoneTableError(
                    f"Table decreases at {index + 1}: {current} -> {following}"
                )

    @classmethod
    def from_function(cls, function, upto: int, extension=EXTENSION_RULES.hold):
        return cls((function(n) for n in range(upto + 1)), extension=extension)

    @classmethod
    def running_max(cls, values: Iterable[int], extension=EXTENSION_RULES.hold):
        """The least monotone table above the given values"""
        result = []
        for value in values:
            result.append(max(value, result[-1]) if result else value)
        return cls(result, extension=extension)

    @classmethod
    def parse(cls, text: str, path=None):
        """
        Reads `n <TAB> value` records (or one value per line), with an
        optional `# extension: hold|fail` header.
        """
        extension = EXTENSION_RULES.hold
        values = []
        for line_number, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                key, _, value = line[1:].partition(":")
                if key.strip() == "extension":
                    extension = value.strip()
                continue

            fields = line.split()
            try:
                if len(fields) == 2:
                    index, value = (int(field) for field in fields)
                    if index != len(values):
                        raise FormatError(f"Expected index {len(values)}", path, line_number)
                elif len(fields) == 1:
                    value = int(fields[0])
                else:
                    raise FormatError("Expected `n <TAB> value`", path, line_number)
            except ValueError:
                raise FormatError(f"Not a natural number: {line!r}", path, line_number)
            values.append(value)

        try:
            return cls(values, extension=extension)
        except (NonMonotoneTableError, ValueError) as exc:
            raise FormatError(str(exc), path)

    def to_text(self) -> str:
        lines = [f"# extension: {self.extension}"]
        lines.extend(f"{index}\t{value}" for index, value in enumerate(self.values))
        return "\n".join(lines) + "\n"

    def __len__(self):
        return len(self.values)

    def __call__(self, index: int) -> int:
        if index < 0:
            raise TableRangeError(f"Negative table index {index}")
        if index < len(self.values):
            return self.values[index]
        if self.extension == EXTENSION_RULES.hold:
            return self.values[-1]
        raise TableRangeError(f"Index {index} is beyond the table's {len(self.values)} entries")

    def pointwise_max(self, other: MonotoneTable) -> MonotoneTable:
        length = max(len(self), len(other))
        return MonotoneTable(
            (max(self(index), other(index)) for index in range(length)),
            extension=self.extension,
        )

    def dominates(self, other: MonotoneTable, upto: Optional[int] = None) -> bool:
        upto = max(len(self), len(other)) - 1 if upto is None else upto
        return all(self(index) >= other(index) for index in range(upto + 1))

    def __eq__(self, other):
        if not isinstance(other, MonotoneTable):
            return NotImplemented
        return self.values == other.values and self.extension == other.extension

    def __repr__(self):
        return f"MonotoneTable({list(self.values)}, {self.extension})"


def identity_table(upto: int) -> MonotoneTable:
    return MonotoneTable(range(upto + 1))


def constant_table(value: int) -> MonotoneTable:
    return MonotoneTable([value])


__all__ = [
    "encode_int",
    "decode_int",
    "encode_precision",
    "decode_precision",
    "precision_code_length",
    "encode_dyadic",
    "decode_dyadic",
    "dyadic_code_length",
    "pair_strings",
    "unpair_prefix",
    "unpair",
    "paired_length",
    "encode_interval",
    "decode_interval",
    "interval_code_length",
    "encoded_length",
    "SizeReading",
    "size_of",
    "MonotoneTable",
    "identity_table",
    "constant_table",
]
