import math
from fractions import Fraction

from django.test import SimpleTestCase

from paramreals.apps.core.bitcodec import encode_dyadic, encode_precision, encoded_length
from paramreals.apps.core.choices import REPRESENTATIONS, VALIDATION_CHECKS
from paramreals.apps.core.dyadic import Dyadic
from paramreals.apps.core.exceptions import BrokenNameError, DomainError
from paramreals.apps.core.intervals import FiniteInterval, point
from paramreals.apps.core.meter import attach

from ..arithmetic import real_add, real_max, real_mul, real_neg, real_sqrt, real_sub
from ..builders import cauchy_of_dyadic, cauchy_of_rational, cauchy_of_sqrt, interval_of_dyadic
from ..corpus import corpus
from ..factories import CauchyNameFactory, IntervalRealNameFactory, IRRAMRealNameFactory
from ..names import IntervalRealName, IRRAMRealName, RunningIntersection, from_callback, pair_names
from ..validation import validate
from ..witnesses import ExactWitness, SqrtWitness

HALF = Dyadic(1, 1)


def shrinking(n):
    return FiniteInterval(0, Dyadic.power_of_two(-n))


def non_nested(n):
    """Encloses 1/2 without being nested: [-1, 1], [-1/4, 5/4], then [1/2 ± 2^-n]"""
    if n == 0:
        return FiniteInterval(0, 1)
    if n == 1:
        return FiniteInterval(HALF, Dyadic(3, 2))
    return FiniteInterval(HALF, Dyadic.power_of_two(-n))


class BuildersTestCase(SimpleTestCase):
    def test_dyadic_names_are_constant(self):
        phi = cauchy_of_dyadic(HALF)
        self.assertTrue(all(phi(n) == HALF for n in range(10)))

    def test_rational_names_approximate(self):
        answer = cauchy_of_rational(1, 3)(4)
        self.assertEqual(answer, Dyadic(11, 5))
        self.assertLessEqual(abs(answer.as_fraction() - Fraction(1, 3)), Fraction(1, 16))

    def test_negative_denominators_are_normalized(self):
        self.assertEqual(cauchy_of_rational(1, -2)(3), Dyadic(-1, 1))

    def test_zero_denominator_is_rejected(self):
        with self.assertRaises(DomainError):
            cauchy_of_rational(1, 0)

    def test_square_root_names_approximate(self):
        phi = cauchy_of_sqrt(2, offset=-1)
        witness = SqrtWitness(2, -1)
        self.assertTrue(all(witness.approximated_by(phi(n), n) for n in range(40)))

    def test_square_root_names_truncate_the_integer_root(self):
        phi = cauchy_of_sqrt(2)
        for n in range(64):
            self.assertEqual(phi(n), Dyadic(math.isqrt(2 << (2 * n + 2)), n + 1))

    def test_interval_of_dyadic_validates(self):
        report = validate(interval_of_dyadic(0), 32, ExactWitness(0))
        self.assertTrue(report.ok)

    def test_corpus_names_validate(self):
        for entry in corpus():
            with self.subTest(entry.label):
                self.assertTrue(validate(entry.cauchy(), 64, entry.witness).ok)
                self.assertTrue(validate(entry.interval(), 64, entry.witness).ok)

    def test_factories_build_valid_names(self):
        d = Dyadic(5, 4)
        witness = ExactWitness(d)
        self.assertTrue(validate(CauchyNameFactory(value=d), 32, witness).ok)
        self.assertTrue(validate(IntervalRealNameFactory(value=d), 32, witness).ok)
        self.assertTrue(validate(IRRAMRealNameFactory(value=d), 32, witness).ok)


class MemoizationTestCase(SimpleTestCase):
    def test_repeated_queries_are_counted_once(self):
        phi, trace = attach(cauchy_of_rational(1, 3))
        first = phi(5)
        self.assertIs(phi(5), first)
        self.assertEqual(trace.query_count, 1)

    def test_distinct_queries_are_counted(self):
        phi, trace = attach(cauchy_of_rational(1, 3))
        phi(5)
        phi(6)
        self.assertEqual(trace.query_count, 2)

    def test_bits_read_are_answer_code_lengths(self):
        phi, trace = attach(cauchy_of_rational(2, 7))
        answers = [phi(n) for n in range(12)]
        self.assertEqual(trace.bits_read, sum(encoded_length(answer) for answer in answers))

    def test_metered_names_answer_the_same(self):
        source = cauchy_of_sqrt(3)
        phi, _ = attach(source)
        self.assertTrue(all(phi(n) == source(n) for n in range(20)))

    def test_real_names_are_queried_by_naturals(self):
        phi = cauchy_of_dyadic(1)
        for query in (-1, "3", 1.0):
            with self.assertRaises(DomainError):
                phi(query)

    def test_wrong_answers_break_the_name(self):
        phi = from_callback(REPRESENTATIONS.cauchy, lambda n: point(0))
        with self.assertRaises(BrokenNameError):
            phi(0)


class FromCallbackTestCase(SimpleTestCase):
    def test_kinds_pick_the_name_class(self):
        self.assertIsInstance(from_callback(REPRESENTATIONS.interval, shrinking), IntervalRealName)
        self.assertIsInstance(from_callback(REPRESENTATIONS.irram, shrinking), IRRAMRealName)

    def test_unknown_kind(self):
        with self.assertRaises(ValueError):
            from_callback("decimal", shrinking)

    def test_shrinking_intervals_validate(self):
        phi = from_callback(REPRESENTATIONS.interval, shrinking, "zero")
        self.assertTrue(validate(phi, 32).ok)

    def test_non_nested_name_is_only_an_irram_name(self):
        witness = ExactWitness(HALF)
        irram = from_callback(REPRESENTATIONS.irram, non_nested)
        self.assertTrue(validate(irram, 32, witness).ok)

        interval = from_callback(REPRESENTATIONS.interval, non_nested)
        report = validate(interval, 32, witness)
        self.assertFalse(report.ok)
        self.assertEqual(report.first().index, 1)
        self.assertEqual(report.first().check, VALIDATION_CHECKS.nested)

    def test_non_converging_name(self):
        phi = from_callback(REPRESENTATIONS.interval, lambda n: FiniteInterval(0, 1))
        report = validate(phi, 32)
        self.assertEqual(report.first().check, VALIDATION_CHECKS.convergence)
        self.assertEqual(report.first().index, 32)

    def test_jump_is_reported_where_nesting_breaks(self):
        def jumping(n):
            return FiniteInterval(1 if n == 5 else 0, Dyadic.power_of_two(-n))

        report = validate(from_callback(REPRESENTATIONS.interval, jumping), 16)
        self.assertEqual(report.first(VALIDATION_CHECKS.nested).index, 5)

    def test_cauchy_name_off_by_too_much(self):
        phi = from_callback(REPRESENTATIONS.cauchy, lambda n: Dyadic.power_of_two(-n + 1))
        report = validate(phi, 8, ExactWitness(0))
        self.assertEqual(report.first().check, VALIDATION_CHECKS.cauchy_bound)
        self.assertEqual(report.first().index, 0)

    def test_answer_types_are_checked(self):
        phi = from_callback(REPRESENTATIONS.cauchy, lambda n: point(0))
        report = validate(phi, 4)
        self.assertEqual(report.first().check, VALIDATION_CHECKS.answer_type)


class PairTestCase(SimpleTestCase):
    def setUp(self):
        self.pair = pair_names(cauchy_of_dyadic(HALF), cauchy_of_dyadic(1))

    def test_queries_are_routed_by_their_first_symbol(self):
        self.assertEqual(self.pair("0" + encode_precision(3)), encode_dyadic(HALF))
        self.assertEqual(self.pair("1" + encode_precision(3)), encode_dyadic(Dyadic(1)))

    def test_empty_query_has_empty_answer(self):
        self.assertEqual(self.pair(""), "")


class RunningIntersectionTestCase(SimpleTestCase):
    def test_answers_are_intersected(self):
        steps = [FiniteInterval(0, 1), FiniteInterval(HALF, 1)]
        running = RunningIntersection(lambda k: steps[k])
        self.assertEqual(running(1), FiniteInterval.from_endpoints(Dyadic(-1, 1), Dyadic(1)))

    def test_each_step_is_computed_once(self):
        calls = []

        def step(k):
            calls.append(k)
            return shrinking(k)

        running = RunningIntersection(step)
        running(4)
        running(2)
        running(5)
        self.assertEqual(calls, list(range(6)))

    def test_disjoint_steps_break_the_name(self):
        running = RunningIntersection(lambda k: point(k))
        with self.assertRaises(BrokenNameError):
            running(1)


class ArithmeticTestCase(SimpleTestCase):
    def _assert_names(self, phi, value, depth=48):
        witness = value if hasattr(value, "within") else ExactWitness(value)
        self.assertTrue(validate(phi, depth, witness).ok)

    def test_sum_and_difference(self):
        third = cauchy_of_rational(1, 3)
        self._assert_names(real_add(third, cauchy_of_dyadic(HALF)), Fraction(5, 6))
        self._assert_names(real_sub(third, cauchy_of_dyadic(HALF)), Fraction(-1, 6))

    def test_product_and_negation(self):
        third = cauchy_of_rational(1, 3)
        self._assert_names(real_mul(third, third), Fraction(1, 9))
        self._assert_names(real_neg(third), Fraction(-1, 3))

    def test_maximum(self):
        phi = real_max(cauchy_of_rational(1, 3), interval_of_dyadic(HALF))
        self._assert_names(phi, Fraction(1, 2))

    def test_square_root(self):
        phi = real_sqrt(cauchy_of_dyadic(2))
        self._assert_names(phi, SqrtWitness(2))

    def test_square_root_of_a_negative_real(self):
        phi = real_sqrt(cauchy_of_dyadic(-1))
        with self.assertRaises(DomainError):
            phi(8)


__all__ = [
    "BuildersTestCase",
    "MemoizationTestCase",
    "FromCallbackTestCase",
    "PairTestCase",
    "RunningIntersectionTestCase",
    "ArithmeticTestCase",
]
