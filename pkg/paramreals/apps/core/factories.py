import random

import factory
from factory import fuzzy

from .bitcodec import MonotoneTable
from .choices import EXTENSION_RULES
from .dyadic import Dyadic
from .intervals import FiniteInterval


def _nondecreasing(length, step):
    values = []
    for _ in range(length):
        values.append((values[-1] if values else 0) + random.randint(0, step))
    return values


class DyadicFactory(factory.Factory):
    mantissa = fuzzy.FuzzyInteger(-(2**40), 2**40)
    exponent = fuzzy.FuzzyInteger(-8, 40)

    class Meta:
        model = Dyadic


class UnitDyadicFactory(DyadicFactory):
    """Dyadics in [0, 1] with at most `exponent` fractional bits"""

    exponent = fuzzy.FuzzyInteger(0, 24)
    mantissa = factory.LazyAttribute(lambda obj: random.randint(0, 2**obj.exponent))


class RadiusFactory(DyadicFactory):
    mantissa = fuzzy.FuzzyInteger(0, 2**20)
    exponent = fuzzy.FuzzyInteger(0, 30)


class FiniteIntervalFactory(factory.Factory):
    center = factory.SubFactory(DyadicFactory)
    radius = factory.SubFactory(RadiusFactory)

    class Meta:
        model = FiniteInterval


class MonotoneTableFactory(factory.Factory):
    values = factory.LazyAttribute(lambda obj: _nondecreasing(obj.length, obj.step))
    extension = EXTENSION_RULES.hold

    class Params:
        length = 64
        step = 3

    class Meta:
        model = MonotoneTable


__all__ = [
    "DyadicFactory",
    "UnitDyadicFactory",
    "RadiusFactory",
    "FiniteIntervalFactory",
    "MonotoneTableFactory",
]
