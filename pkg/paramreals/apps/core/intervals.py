"""
Dyadic interval arithmetic: exact, tight enclosures with dyadic center and
radius, plus the infinite interval that absorbs every operation.
"""
from __future__ import annotations

import functools
import re
from typing import Union

import gmpy2

from .costs import charge
from .dyadic import (
    ONE,
    ZERO,
    Dyadic,
    ceil_scaled,
    floor_scaled,
    mag_bound,
    precision_of,
    round_down_strict,
    round_up_strict,
)
from .exceptions import BrokenNameError, DomainError, FormatError

TEXT_FORMAT = re.compile(r"^\s*\[\s*(\S+)\s*±\s*(\S+)\s*\]\s*$")


class DyadicInterval:
    is_finite = False

    def __str__(self):
        return self.to_text()


class FiniteInterval(DyadicInterval):
    __slots__ = ("center", "radius")
    is_finite = True

    def __init__(self, center: Dyadic, radius: Dyadic = ZERO):
        center = Dyadic.coerce(center)
        radius = Dyadic.coerce(radius)
        if radius.sign < 0:
            raise DomainError(f"Interval radius must not be negative, got {radius}")
        self.center = center
        self.radius = radius

    @classmethod
    def from_endpoints(cls, lower: Dyadic, upper: Dyadic) -> FiniteInterval:
        return cls((lower + upper).scale(-1), (upper - lower).scale(-1))

    @property
    def lower(self) -> Dyadic:
        return self.center - self.radius

    @property
    def upper(self) -> Dyadic:
        return self.center + self.radius

    def to_text(self) -> str:
        return f"[{self.center.to_text()} ± {self.radius.to_text()}]"

    def __eq__(self, other):
        if not isinstance(other, FiniteInterval):
            return NotImplemented
        return self.center == other.center and self.radius == other.radius

    def __hash__(self):
        return hash((self.center, self.radius))

    def __repr__(self):
        return f"[{self.center} ± {self.radius}]"


class InfiniteInterval(DyadicInterval):
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def to_text(self) -> str:
        return "INF"

    def __repr__(self):
        return "[−∞, ∞]"


INFINITE = InfiniteInterval()
UNIT = FiniteInterval.from_endpoints(ZERO, ONE)


@functools.total_ordering
class Top:
    """Diameter of the infinite interval, above every dyadic"""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __hash__(self):
        return hash("top")

    def __repr__(self):
        return "TOP"


TOP = Top()

Diameter = Union[Dyadic, Top]


def point(x: Dyadic) -> FiniteInterval:
    return FiniteInterval(x, ZERO)


def parse(text: str) -> DyadicInterval:
    if text.strip() == "INF":
        return INFINITE
    match = TEXT_FORMAT.match(text)
    if not match:
        raise FormatError(f"{text!r} is not an interval in the form [c ± r] or INF")
    center, radius = match.groups()
    return FiniteInterval(Dyadic.parse(center), Dyadic.parse(radius))


def _endpoint_hull(*values: Dyadic) -> FiniteInterval:
    return FiniteInterval.from_endpoints(min(values), max(values))


def iadd(a: DyadicInterval, b: DyadicInterval) -> DyadicInterval:
    if not (a.is_finite and b.is_finite):
        return INFINITE
    return FiniteInterval(a.center + b.center, a.radius + b.radius)


def isub(a: DyadicInterval, b: DyadicInterval) -> DyadicInterval:
    if not (a.is_finite and b.is_finite):
        return INFINITE
    return FiniteInterval(a.center - b.center, a.radius + b.radius)


def imul(a: DyadicInterval, b: DyadicInterval) -> DyadicInterval:
    if not (a.is_finite and b.is_finite):
        return INFINITE
    return _endpoint_hull(
        a.lower * b.lower, a.lower * b.upper, a.upper * b.lower, a.upper * b.upper
    )


def ineg(a: DyadicInterval) -> DyadicInterval:
    return FiniteInterval(-a.center, a.radius) if a.is_finite else INFINITE


def iscale(a: DyadicInterval, factor: Dyadic) -> DyadicInterval:
    return imul(a, point(factor))


def imax(a: DyadicInterval, b: DyadicInterval) -> DyadicInterval:
    if not (a.is_finite and b.is_finite):
        return INFINITE
    return FiniteInterval.from_endpoints(max(a.lower, b.lower), max(a.upper, b.upper))


def imin(a: DyadicInterval, b: DyadicInterval) -> DyadicInterval:
    if not (a.is_finite and b.is_finite):
        return INFINITE
    return FiniteInterval.from_endpoints(min(a.lower, b.lower), min(a.upper, b.upper))


def intersect(a: DyadicInterval, b: DyadicInterval) -> DyadicInterval:
    if not a.is_finite:
        return b
    if not b.is_finite:
        return a

    lower = max(a.lower, b.lower)
    upper = min(a.upper, b.upper)
    if lower > upper:
        raise BrokenNameError(f"{a!r} and {b!r} are disjoint")
    return FiniteInterval.from_endpoints(lower, upper)


def subset(a: DyadicInterval, b: DyadicInterval) -> bool:
    if not b.is_finite:
        return True
    if not a.is_finite:
        return False
    return b.lower <= a.lower and a.upper <= b.upper


def contains(a: DyadicInterval, x: Dyadic) -> bool:
    if not a.is_finite:
        return True
    return a.lower <= x <= a.upper


def midpoint(a: DyadicInterval) -> Dyadic:
    if not a.is_finite:
        raise DomainError("The infinite interval has no midpoint")
    return a.center


def diam(a: DyadicInterval) -> Diameter:
    return a.radius.scale(1) if a.is_finite else TOP


def diam_at_most(a: DyadicInterval, bound: Dyadic) -> bool:
    return a.is_finite and a.radius.scale(1) <= bound


def within_precision(a: DyadicInterval, n: int) -> bool:
    """diam(a) <= 2^(-n)"""
    return diam_at_most(a, Dyadic.power_of_two(-n))


def diameter_precision(a: DyadicInterval) -> Union[int, None]:
    """Largest k with diam(a) <= 2^(-k); None for points and for the infinite interval"""
    if not a.is_finite or a.radius.is_zero():
        return None
    return precision_of(a.radius.scale(1))


def magnitude(a: DyadicInterval) -> Dyadic:
    """Largest absolute value in a finite interval"""
    return max(abs(a.lower), abs(a.upper))


def magnitude_bracket(a: FiniteInterval):
    """Bounds on ceil(lb(|x| + 1)) for every x in a"""
    lower, upper = a.lower, a.upper
    if lower.sign <= 0 <= upper.sign:
        smallest = ZERO
    else:
        smallest = min(abs(lower), abs(upper))
    return mag_bound(smallest), mag_bound(magnitude(a))


def outward_round(a: DyadicInterval, p: int) -> DyadicInterval:
    if not a.is_finite:
        return INFINITE
    return FiniteInterval.from_endpoints(
        round_down_strict(a.lower, p), round_up_strict(a.upper, p)
    )


def _sqrt_down(x: Dyadic, p: int) -> Dyadic:
    scaled = floor_scaled(x, 2 * p)
    charge(max(1, scaled.bit_length()) ** 2)
    return Dyadic(gmpy2.isqrt(scaled), p)


def _sqrt_up(x: Dyadic, p: int) -> Dyadic:
    scaled = ceil_scaled(x, 2 * p)
    charge(max(1, scaled.bit_length()) ** 2)
    root = gmpy2.isqrt(scaled)
    return Dyadic(root if root * root == scaled else root + 1, p)


def isqrt(a: DyadicInterval, p: int) -> DyadicInterval:
    """Enclosure of the square roots of a, with endpoints on the 2^(-p) grid"""
    if not a.is_finite:
        return INFINITE
    if a.upper.sign < 0:
        raise DomainError(f"No real square root of {a!r}")
    lower = ZERO if a.lower.sign <= 0 else _sqrt_down(a.lower, p)
    return FiniteInterval.from_endpoints(lower, _sqrt_up(a.upper, p))


def clamp(a: DyadicInterval, bounds: FiniteInterval = UNIT) -> FiniteInterval:
    """
    Intersection with bounds, or the nearest endpoint of bounds when they
    are disjoint. Monotone with respect to inclusion.
    """
    if not a.is_finite:
        return bounds
    if a.upper < bounds.lower:
        return point(bounds.lower)
    if a.lower > bounds.upper:
        return point(bounds.upper)
    return intersect(a, bounds)


__all__ = [
    "DyadicInterval",
    "FiniteInterval",
    "InfiniteInterval",
    "INFINITE",
    "UNIT",
    "TOP",
    "point",
    "parse",
    "iadd",
    "isub",
    "imul",
    "ineg",
    "iscale",
    "imax",
    "imin",
    "intersect",
    "subset",
    "contains",
    "midpoint",
    "diam",
    "diam_at_most",
    "within_precision",
    "diameter_precision",
    "magnitude",
    "magnitude_bracket",
    "outward_round",
    "isqrt",
    "clamp",
]
