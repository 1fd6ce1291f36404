import math
from fractions import Fraction

from hypothesis import strategies as st

from paramreals.apps.core.dyadic import Dyadic
from paramreals.apps.core.intervals import FiniteInterval
from paramreals.apps.reals.builders import cauchy_of_rational

POINTS = [Fraction(j, 7) for j in range(8)]
CORPUS_POINTS = [Fraction(j, 19) for j in range(20)]


def point_name(x: Fraction):
    return cauchy_of_rational(x.numerator, x.denominator)


def binary_chain(x: Fraction, depth: int):
    """[a/2^k, (a+1)/2^k] with a = floor(x·2^k), for k < depth; each holds the next"""
    for k in range(depth):
        a = math.floor(x * 2**k)
        yield FiniteInterval.from_endpoints(Dyadic(a, k), Dyadic(a + 1, k))


@st.composite
def nested_intervals(draw):
    """(inner, outer) with inner ⊆ outer, on the 2^-10 grid around [0, 1]"""
    radius = draw(st.integers(0, 128))
    outer = FiniteInterval(Dyadic(draw(st.integers(-64, 320)), 8), Dyadic(radius, 8))
    width = 8 * radius
    trim_lower = draw(st.integers(0, width))
    trim_upper = draw(st.integers(0, width - trim_lower))
    inner = FiniteInterval.from_endpoints(
        outer.lower + Dyadic(trim_lower, 10), outer.upper - Dyadic(trim_upper, 10)
    )
    return inner, outer
