import itertools
from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from ..bitcodec import (
    MonotoneTable,
    decode_dyadic,
    decode_int,
    decode_interval,
    decode_precision,
    dyadic_code_length,
    encode_dyadic,
    encode_int,
    encode_interval,
    encode_precision,
    encoded_length,
    interval_code_length,
    pair_strings,
    paired_length,
    precision_code_length,
    size_of,
    unpair,
    unpair_prefix,
)
from ..choices import EXTENSION_RULES
from ..dyadic import ZERO, Dyadic
from ..exceptions import DecodeError, FormatError, NonMonotoneTableError, TableRangeError
from ..factories import MonotoneTableFactory
from ..intervals import INFINITE, FiniteInterval

bits = st.text(alphabet="01", max_size=16)
dyadics = st.builds(Dyadic, st.integers(-(2**48), 2**48), st.integers(-16, 48))
radii = st.builds(Dyadic, st.integers(0, 2**48), st.integers(-16, 48))


def all_strings(max_length):
    for length in range(max_length + 1):
        for symbols in itertools.product("01", repeat=length):
            yield "".join(symbols)


class IntegerCodeTestCase(SimpleTestCase):
    def test_short_strings_decode_to_zero(self):
        for code in ("", "0", "1"):
            self.assertEqual(decode_int(code), 0)

    def test_encode_negative(self):
        self.assertEqual(encode_int(-5), "1101")

    def test_encode_one(self):
        self.assertEqual(encode_int(1), "01")

    def test_round_trip(self):
        for z in range(-8, 9):
            self.assertEqual(decode_int(encode_int(z)), z)

    def test_decode_is_total(self):
        for code in all_strings(6):
            decode_int(code)

    def test_precision_queries_have_unary_length(self):
        for n in range(20):
            self.assertEqual(len(encode_precision(n)), precision_code_length(n))
            self.assertEqual(decode_int(encode_precision(n)), 2**n)
            self.assertEqual(decode_precision(encode_precision(n)), n)

    def test_code_of_the_coarsest_query(self):
        self.assertEqual(len(encode_precision(0)), 2)


class DyadicCodeTestCase(SimpleTestCase):
    def test_round_trip(self):
        three_eighths = Dyadic.from_fraction(Fraction(3, 8))
        self.assertEqual(encode_dyadic(three_eighths), "001011")
        self.assertEqual(decode_dyadic(encode_dyadic(three_eighths)), three_eighths)

    def test_zero(self):
        self.assertEqual(encode_dyadic(ZERO), "001")
        self.assertEqual(decode_dyadic("001"), ZERO)

    def test_integer_part_bits_are_doubled(self):
        self.assertEqual(encode_dyadic(Dyadic(5, 1)), "01100011")

    def test_trailing_fraction_zeros_keep_the_value(self):
        self.assertEqual(decode_dyadic("0110001100"), Dyadic(5, 1))

    def test_negative_powers_of_two_grow_linearly(self):
        for k in range(1, 65):
            self.assertEqual(len(encode_dyadic(Dyadic.power_of_two(-k))), k + 3)

    def test_malformed_codes(self):
        for code in ("", "010", "011", "0111"):
            with self.assertRaises(DecodeError):
                decode_dyadic(code)

    @settings(max_examples=10_000, deadline=None)
    @given(dyadics)
    def test_decode_inverts_encode(self, x):
        code = encode_dyadic(x)
        self.assertEqual(decode_dyadic(code), x)
        self.assertEqual(dyadic_code_length(x), len(code))


class PairingTestCase(SimpleTestCase):
    def test_worked_layout(self):
        self.assertEqual(pair_strings("000", "100110"), "011001001010010000")

    def test_empty_pair_is_header_only(self):
        paired = pair_strings("", "")
        self.assertEqual(len(paired), 15)
        self.assertEqual(paired[0::3] + paired[1::3], "0" * 10)
        self.assertEqual(unpair(paired), ("", ""))

    def test_prefix_needs_enough_symbols(self):
        with self.assertRaises(DecodeError):
            unpair_prefix(pair_strings("0101", "11"), 20)

    def test_pairing_is_injective(self):
        seen = {}
        strings = list(all_strings(8))
        for a in strings:
            for b in strings:
                paired = pair_strings(a, b)
                self.assertNotIn(paired, seen)
                seen[paired] = (a, b)

    @settings(max_examples=2000, deadline=None)
    @given(bits, bits, st.data())
    def test_prefixes_are_readable(self, a, b, data):
        n = data.draw(st.integers(min_value=0, max_value=min(len(a), len(b))))
        paired = pair_strings(a, b)
        self.assertEqual(unpair_prefix(paired[: 3 * (n + 2)], n), (a[:n], b[:n]))

    @given(bits, bits)
    def test_unpair_inverts_pair(self, a, b):
        paired = pair_strings(a, b)
        self.assertEqual(unpair(paired), (a, b))
        self.assertEqual(paired_length(len(a), len(b)), len(paired))


class IntervalCodeTestCase(SimpleTestCase):
    def test_infinite(self):
        self.assertEqual(encode_interval(INFINITE), "1")
        self.assertIs(decode_interval("1"), INFINITE)

    @settings(max_examples=2000, deadline=None)
    @given(dyadics, radii)
    def test_round_trip(self, center, radius):
        J = FiniteInterval(center, radius)
        code = encode_interval(J)
        self.assertEqual(decode_interval(code), J)
        self.assertEqual(interval_code_length(J), len(code))
        self.assertEqual(encoded_length(J), len(code))


class ReadingName:
    def __init__(self, answer):
        self.answer = answer
        self.query_log = []

    def __call__(self, query):
        self.query_log.append((query, self.answer(query)))
        return self.answer(query)


class PaddedName:
    def __call__(self, query):
        return "1" * (len(query) + 1)

    def size_bound(self, n):
        return n + 1


class SizeTestCase(SimpleTestCase):
    def test_constant_output(self):
        name = ReadingName(lambda query: "01")
        for query in ("", "0", "101", "0000"):
            name(query)
        for n in range(5):
            self.assertEqual(size_of(name, n), 2)

    def test_size_from_a_log_of_lengths(self):
        reading = size_of([(3, 5), (1, 2)], 3)
        self.assertEqual(reading, 5)
        self.assertTrue(reading.observed)
        self.assertEqual(size_of([(3, 5), (1, 2)], 2), 2)

    def test_length_monotone_size(self):
        name = PaddedName()
        for n in range(10):
            reading = size_of(name, n)
            self.assertEqual(reading, len(name("0" * n)))
            self.assertFalse(reading.observed)

    def test_precision_queries_are_measured_by_their_code(self):
        name = ReadingName(lambda n: Dyadic.power_of_two(-n))
        name(3)
        self.assertEqual(size_of(name, 4), 0)
        self.assertEqual(size_of(name, 5), 6)


class MonotoneTableTestCase(SimpleTestCase):
    def test_rejects_decreasing_values(self):
        with self.assertRaises(NonMonotoneTableError):
            MonotoneTable([1, 2, 1])

    def test_rejects_negative_entries(self):
        for values in ([-1], [0, -1], [-2, -1, 0]):
            with self.subTest(values=values):
                with self.assertRaises(NonMonotoneTableError):
                    MonotoneTable(values)

    def test_hold_extension(self):
        table = MonotoneTable([0, 1, 4])
        self.assertEqual(table(2), 4)
        self.assertEqual(table(100), 4)

    def test_fail_extension(self):
        table = MonotoneTable([0, 1, 4], extension=EXTENSION_RULES.fail)
        with self.assertRaises(TableRangeError):
            table(3)

    def test_running_max(self):
        self.assertEqual(MonotoneTable.running_max([3, 1, 4, 1, 5]).values, (3, 3, 4, 4, 5))

    def test_pointwise_max(self):
        combined = MonotoneTable([0, 5]).pointwise_max(MonotoneTable([1, 2, 3]))
        self.assertEqual(combined.values, (1, 5, 5))

    def test_text_round_trip(self):
        table = MonotoneTableFactory(extension=EXTENSION_RULES.fail)
        self.assertEqual(MonotoneTable.parse(table.to_text()), table)

    def test_parse_reports_line_numbers(self):
        with self.assertRaises(FormatError) as context:
            MonotoneTable.parse("0\t1\n1\tx\n", path="table.txt")
        self.assertEqual(context.exception.line, 2)
        self.assertIn("table.txt:2", str(context.exception))

    def test_parse_rejects_decreasing_tables(self):
        with self.assertRaises(FormatError):
            MonotoneTable.parse("0\t3\n1\t2\n")


__all__ = [
    "IntegerCodeTestCase",
    "DyadicCodeTestCase",
    "PairingTestCase",
    "IntervalCodeTestCase",
    "SizeTestCase",
    "MonotoneTableTestCase",
]
