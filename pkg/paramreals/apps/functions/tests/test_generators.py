from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings

from paramreals.apps.core.dyadic import HALF, Dyadic
from paramreals.apps.core.intervals import INFINITE, FiniteInterval, subset
from paramreals.apps.reals.validation import validate
from paramreals.apps.reals.witnesses import ExactWitness

from ..factories import SLOPES, AffineFunctionFactory
from ..generators import (
    affine,
    constant,
    hausdorff_identity,
    identity,
    interval_function,
    logistic,
    pathological,
    psi_k,
    quadratic,
    slow_identity,
)
from ..operations import compose, evaluate, fadd, fmul, fsub
from .helpers import POINTS, nested_intervals, point_name

QUARTER = Dyadic(1, 2)

FUNCTIONS = [
    ("x", identity, lambda x: x),
    ("x/2 + 1/4", lambda: affine(HALF, QUARTER), lambda x: x / 2 + Fraction(1, 4)),
    ("1 - x", lambda: affine(-1, 1), lambda x: 1 - x),
    ("x²", lambda: quadratic(1), lambda x: x * x),
    ("4x(1 - x)", logistic, lambda x: 4 * x * (1 - x)),
    ("slow x", slow_identity, lambda x: x),
    ("1/2", lambda: constant(HALF), lambda x: Fraction(1, 2)),
]


class MonotonicityTestCase(SimpleTestCase):
    @given(pair=nested_intervals())
    @settings(max_examples=1000, deadline=None)
    def test_generators_preserve_inclusion(self, pair):
        inner, outer = pair
        for label, build, _ in FUNCTIONS + [("psi_3", lambda: psi_k(3), None)]:
            psi = build()
            self.assertTrue(subset(psi(inner), psi(outer)), label)

    @given(pair=nested_intervals())
    @settings(max_examples=200, deadline=None)
    def test_operations_preserve_inclusion(self, pair):
        inner, outer = pair
        f, g = logistic(), affine(HALF, QUARTER)
        for psi in (compose(f, g), fadd(f, g), fsub(f, g), fmul(f, g)):
            self.assertTrue(subset(psi(inner), psi(outer)), psi.note)

    def test_hausdorff_identity_is_not_monotone(self):
        inner = FiniteInterval(HALF, Dyadic(1, 3))
        outer = FiniteInterval(HALF, Dyadic(3, 4))
        psi = hausdorff_identity()
        self.assertTrue(subset(inner, outer))
        self.assertFalse(subset(psi(inner), psi(outer)))

    def test_queries_outside_the_unit_interval_are_clamped(self):
        psi = identity()
        self.assertEqual(psi(INFINITE), FiniteInterval(HALF, HALF))
        self.assertEqual(psi(FiniteInterval(3, 1)), FiniteInterval(1))


class NamePropertyTestCase(SimpleTestCase):
    def test_evaluation_names_the_image(self):
        for label, build, f in FUNCTIONS:
            for x in POINTS:
                with self.subTest(label, x=x):
                    phi = evaluate(build(), point_name(x))
                    report = validate(phi, 48, witness=ExactWitness(f(x)))
                    self.assertTrue(report.ok, report.first())

    def test_non_monotone_names_still_evaluate(self):
        for build, value in ((hausdorff_identity, lambda x: x), (pathological, lambda x: 0)):
            for x in POINTS:
                with self.subTest(build.__name__, x=x):
                    phi = evaluate(build(), point_name(x))
                    report = validate(phi, 32, witness=ExactWitness(value(x)))
                    self.assertTrue(report.ok, report.first())

    def test_cancellation(self):
        f = logistic()
        difference = fsub(f, f)
        for x in POINTS:
            phi = evaluate(difference, point_name(x))
            self.assertTrue(validate(phi, 32, witness=ExactWitness(0)).ok)

    def test_factory_functions(self):
        for slope in SLOPES:
            psi = AffineFunctionFactory(slope=slope)
            offset = 0 if slope.sign > 0 else -slope.as_fraction()
            for x in POINTS:
                value = slope.as_fraction() * x + offset
                report = validate(evaluate(psi, point_name(x)), 24, witness=ExactWitness(value))
                self.assertTrue(report.ok, report.first())

    def test_named_functions(self):
        self.assertEqual(interval_function("half").note, affine(HALF).note)
        with self.assertRaises(ValueError):
            interval_function("sin")


__all__ = ["MonotonicityTestCase", "NamePropertyTestCase"]
