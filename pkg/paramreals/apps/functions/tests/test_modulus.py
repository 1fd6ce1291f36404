from django.test import SimpleTestCase

from paramreals.apps.core.dyadic import HALF, ONE, ZERO, Dyadic
from paramreals.apps.core.exceptions import FuelExhausted
from paramreals.apps.core.intervals import point
from paramreals.apps.reals.fitting import growth_ratio
from paramreals.apps.reals.measurement import measure_mu_interval
from paramreals.apps.reals.translate import cauchy_to_interval

from ..generators import (
    affine,
    constant,
    hausdorff_identity,
    identity,
    logistic,
    pathological,
    psi_k,
    quadratic,
    slow_identity,
)
from ..modulus import (
    FunParamBound,
    cover,
    local_modulus,
    measure_mu_if,
    modulus_upper_bound,
    sanity_probe,
    search_modulus,
)
from ..operations import compose, evaluate
from .helpers import POINTS, point_name

QUARTER = Dyadic(1, 2)


class CoverTestCase(SimpleTestCase):
    def test_level_zero(self):
        self.assertEqual(
            [(J.lower, J.upper) for J in cover(0)],
            [(-HALF, HALF), (Dyadic(0), Dyadic(1)), (HALF, Dyadic(3, 1))],
        )

    def test_members_overlap_by_half(self):
        members = list(cover(3))
        self.assertEqual(len(members), 17)
        for left, right in zip(members, members[1:]):
            self.assertEqual(right.lower, left.center)


class ModulusSearchTestCase(SimpleTestCase):
    def test_identity(self):
        for n in range(8):
            self.assertEqual(modulus_upper_bound(identity(), n), n)

        for n in range(1, 8):
            bound = measure_mu_if(identity(), n)
            self.assertLessEqual(n - 1, bound.modulus_part_lower)
            self.assertLessEqual(bound.modulus_part_upper, n + 1)
            self.assertEqual(bound.norm_mag_upper, 1)

    def test_constant_zero(self):
        for n in range(6):
            self.assertEqual(measure_mu_if(constant(0), n), FunParamBound(0, 0, 0))

    def test_lipschitz_constant_two(self):
        for n in range(6):
            bound = measure_mu_if(affine(2), n)
            self.assertEqual(bound.modulus_part_lower, n + 1)
            self.assertEqual(bound.modulus_part_upper, n + 2)
            self.assertEqual(bound.norm_mag_upper, 2)

    def test_row(self):
        row = measure_mu_if(identity(), 3).as_row(3)
        self.assertEqual((row.n, row.value), (3, 5))

    def test_cover_search_grows_exponentially(self):
        probes = []
        for k in range(6, 15):
            search = search_modulus(psi_k(k), 0)
            self.assertEqual(search.level, k)
            self.assertGreaterEqual(search.probes, 2 ** (k - 1))
            probes.append(search.probes)
        self.assertGreaterEqual(growth_ratio(probes), 1.8)

    def test_fuel(self):
        with self.assertRaises(FuelExhausted):
            search_modulus(psi_k(8), 0, fuel=64)


class SanityProbeTestCase(SimpleTestCase):
    def test_pathological_name_is_rejected(self):
        with self.assertRaises(FuelExhausted):
            sanity_probe(pathological())

    def test_valid_names_pass(self):
        for psi in (identity(), hausdorff_identity(), affine(HALF, QUARTER)):
            sanity_probe(psi)

    def test_plain_search_misses_the_pathology(self):
        self.assertEqual(modulus_upper_bound(pathological(), 3), 0)


COMPOSABLE = {
    "x": identity,
    "x/2 + 1/4": lambda: affine(HALF, QUARTER),
    "1 - x": lambda: affine(-1, 1),
    "x²": lambda: quadratic(1),
}


class LocalModulusTestCase(SimpleTestCase):
    def test_identity(self):
        for x in (ZERO, Dyadic(5, 4), HALF, ONE):
            for n in range(10):
                with self.subTest(x=x, n=n):
                    self.assertEqual(local_modulus(identity(), x, n), n)

    def test_halving(self):
        for n in range(10):
            self.assertEqual(local_modulus(affine(HALF), HALF, n), max(n - 1, 0))

    def test_agrees_with_the_cover_search(self):
        for n in range(6):
            self.assertLessEqual(
                local_modulus(quadratic(1), Dyadic(3, 2), n), modulus_upper_bound(quadratic(1), n)
            )


class ChainRuleTestCase(SimpleTestCase):
    def assertCompositionChain(self, outer, inner, upto):
        composed = compose(outer, inner)
        for n in range(upto + 1):
            bound = modulus_upper_bound(inner, modulus_upper_bound(outer, n)) + 2
            self.assertLessEqual(modulus_upper_bound(composed, n), bound, f"n={n}")

    def test_composition(self):
        for outer_label, outer in COMPOSABLE.items():
            for inner_label, inner in COMPOSABLE.items():
                with self.subTest(outer=outer_label, inner=inner_label):
                    self.assertCompositionChain(outer(), inner(), upto=6)

    def assertLocalCompositionChain(self, outer, inner, x, upto):
        composed = compose(outer, inner)
        y = inner(point(x)).center
        for n in range(upto + 1):
            level = local_modulus(inner, x, local_modulus(outer, y, n) + 1) + 1
            self.assertLessEqual(local_modulus(composed, x, n), level, f"n={n}")

    def test_composition_at_points(self):
        for outer_label, outer in COMPOSABLE.items():
            for inner_label, inner in COMPOSABLE.items():
                for x in (ZERO, Dyadic(5, 4), ONE):
                    with self.subTest(outer=outer_label, inner=inner_label, x=x):
                        self.assertLocalCompositionChain(outer(), inner(), x, upto=24)

    def test_composition_of_logistic_maps(self):
        self.assertCompositionChain(logistic(), logistic(), upto=2)

    def test_evaluation(self):
        functions = {
            "1/2": (lambda: constant(HALF), 8),
            "2x": (lambda: affine(2), 8),
            "slow x": (slow_identity, 4),
            **{label: (build, 8) for label, build in COMPOSABLE.items()},
        }
        for label, (build, upto) in functions.items():
            psi = build()
            for x in POINTS[::3]:
                with self.subTest(label, x=x):
                    phi = cauchy_to_interval(point_name(x))
                    output = evaluate(psi, phi)
                    for n in range(upto + 1):
                        modulus = measure_mu_if(psi, n).modulus_part_upper
                        conv_phi = measure_mu_interval(phi, modulus).conv_index
                        conv_out = measure_mu_interval(output, n).conv_index
                        self.assertLessEqual(conv_out, conv_phi + n + 1, f"n={n}")


__all__ = [
    "CoverTestCase",
    "ModulusSearchTestCase",
    "SanityProbeTestCase",
    "LocalModulusTestCase",
    "ChainRuleTestCase",
]
