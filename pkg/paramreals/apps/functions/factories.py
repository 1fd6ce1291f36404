import factory
from factory import fuzzy

from paramreals.apps.core.dyadic import HALF, ONE, ZERO, Dyadic

from .generators import affine, kc_affine
from .names import IntervalFunctionName, KCFunctionName

SLOPES = [HALF, -HALF, ONE, -ONE, Dyadic(1, 2), Dyadic(-3, 2)]


def _offset(slope):
    """Keeps the range of slope·x + offset on [0, 1] inside [0, 1]"""
    return ZERO if slope.sign > 0 else -slope


class AffineFunctionFactory(factory.Factory):
    query = factory.LazyAttribute(lambda obj: affine(obj.slope, obj.offset).query)
    note = factory.LazyAttribute(lambda obj: f"{obj.slope}·x + {obj.offset}")

    class Params:
        slope = fuzzy.FuzzyChoice(SLOPES)
        offset = factory.LazyAttribute(lambda obj: _offset(obj.slope))

    class Meta:
        model = IntervalFunctionName


class KCAffineFunctionFactory(factory.Factory):
    query = factory.LazyAttribute(lambda obj: obj.generated.query)
    size_table = factory.LazyAttribute(lambda obj: obj.generated.size_table)
    norm_bits = factory.LazyAttribute(lambda obj: obj.generated.norm_bits)
    note = factory.LazyAttribute(lambda obj: obj.generated.note)

    class Params:
        slope = fuzzy.FuzzyChoice(SLOPES)
        offset = factory.LazyAttribute(lambda obj: _offset(obj.slope))
        generated = factory.LazyAttribute(lambda obj: kc_affine(obj.slope, obj.offset))

    class Meta:
        model = KCFunctionName


__all__ = ["AffineFunctionFactory", "KCAffineFunctionFactory"]
