import factory
from factory import fuzzy

from .corpus import LOGISTIC_BODY
from .nodes import Iterate, Lambda, Number

SEEDS = [Number(1, 2), Number(1, 4), Number(3, 8), Number(1, 3), Number(2, 5)]


class LogisticMapFactory(factory.Factory):
    """iterate(x -> r*x*(1-x), count, seed), to be evaluated with r bound"""

    function = Lambda("x", LOGISTIC_BODY)
    count = fuzzy.FuzzyInteger(0, 8)
    seed = fuzzy.FuzzyChoice(SEEDS)

    class Meta:
        model = Iterate


__all__ = ["LogisticMapFactory"]
