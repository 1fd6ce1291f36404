"""
Exact dyadic rationals m·2^(-e) with arbitrary precision mantissas.

Values are kept canonical (odd mantissa, or zero with exponent zero), so
structural equality is numeric equality and dyadics can key memo tables.
"""
from __future__ import annotations

import functools
import re
from fractions import Fraction
from typing import Union

import gmpy2
from gmpy2 import mpz

from .costs import charge
from .exceptions import DomainError, FormatError

DyadicLike = Union["Dyadic", int]

INTEGER_TYPES = (int, type(mpz(0)))

TEXT_FORMAT = re.compile(r"^\s*([+-])([01]+)p(-?\d+)\s*$")
FRACTION_FORMAT = re.compile(r"^\s*(-?\d+)\s*/\s*2\^(\d+)\s*$")


def _bits(value) -> int:
    return max(1, value.bit_length())


@functools.total_ordering
class Dyadic:
    __slots__ = ("mantissa", "exponent")

    def __init__(self, mantissa=0, exponent=0):
        mantissa = mpz(mantissa)
        exponent = int(exponent)

        if mantissa == 0:
            exponent = 0
        else:
            shift = gmpy2.bit_scan1(mantissa)
            if shift:
                mantissa >>= shift
                exponent -= shift

        self.mantissa = mantissa
        self.exponent = exponent

    @classmethod
    def coerce(cls, value: DyadicLike) -> Dyadic:
        if isinstance(value, Dyadic):
            return value
        if isinstance(value, INTEGER_TYPES):
            return cls(value, 0)
        if isinstance(value, Fraction):
            return cls.from_fraction(value)
        raise TypeError(f"Can not make a dyadic out of {value!r}")

    @classmethod
    def from_fraction(cls, value: Fraction) -> Dyadic:
        denominator = value.denominator
        if denominator & (denominator - 1):
            raise DomainError(f"{value} is not a dyadic rational")
        return cls(value.numerator, denominator.bit_length() - 1)

    @classmethod
    def power_of_two(cls, k: int) -> Dyadic:
        """2^k, for any integer k"""
        return cls(1, -k)

    @classmethod
    def parse(cls, text: str) -> Dyadic:
        fraction = FRACTION_FORMAT.match(text)
        if fraction:
            numerator, exponent = fraction.groups()
            return cls(int(numerator), int(exponent))

        match = TEXT_FORMAT.match(text)
        if not match:
            raise FormatError(f"{text!r} is not a dyadic in the form <sign><bits>p<exponent>")
        sign, bits, exponent = match.groups()
        mantissa = int(bits, 2)
        return cls(-mantissa if sign == "-" else mantissa, int(exponent))

    def to_text(self) -> str:
        sign = "-" if self.mantissa < 0 else "+"
        return f"{sign}{abs(self.mantissa).digits(2)}p{self.exponent}"

    def as_fraction(self) -> Fraction:
        if self.exponent >= 0:
            return Fraction(int(self.mantissa), 1 << self.exponent)
        return Fraction(int(self.mantissa) << -self.exponent)

    def as_mpq(self):
        if self.exponent >= 0:
            return gmpy2.mpq(self.mantissa, mpz(1) << self.exponent)
        return gmpy2.mpq(self.mantissa << -self.exponent, 1)

    @property
    def bit_length(self) -> int:
        return _bits(self.mantissa) + abs(self.exponent)

    @property
    def sign(self) -> int:
        return gmpy2.sign(self.mantissa)

    def is_zero(self) -> bool:
        return self.mantissa == 0

    def is_integer(self) -> bool:
        return self.exponent <= 0

    def scale(self, k: int) -> Dyadic:
        """Exact multiplication by 2^k"""
        return Dyadic(self.mantissa, self.exponent - k)

    def _aligned(self, other: Dyadic):
        exponent = max(self.exponent, other.exponent)
        return (
            self.mantissa << (exponent - self.exponent),
            other.mantissa << (exponent - other.exponent),
            exponent,
        )

    def __add__(self, other: DyadicLike) -> Dyadic:
        other = Dyadic.coerce(other)
        a, b, exponent = self._aligned(other)
        charge(max(_bits(a), _bits(b)))
        return Dyadic(a + b, exponent)

    __radd__ = __add__

    def __sub__(self, other: DyadicLike) -> Dyadic:
        other = Dyadic.coerce(other)
        a, b, exponent = self._aligned(other)
        charge(max(_bits(a), _bits(b)))
        return Dyadic(a - b, exponent)

    def __rsub__(self, other: DyadicLike) -> Dyadic:
        return Dyadic.coerce(other) - self

    def __mul__(self, other: DyadicLike) -> Dyadic:
        other = Dyadic.coerce(other)
        charge(_bits(self.mantissa) * _bits(other.mantissa))
        return Dyadic(self.mantissa * other.mantissa, self.exponent + other.exponent)

    __rmul__ = __mul__

    def __neg__(self) -> Dyadic:
        return Dyadic(-self.mantissa, self.exponent)

    def __abs__(self) -> Dyadic:
        return self if self.mantissa >= 0 else -self

    def _compare(self, other: DyadicLike) -> int:
        other = Dyadic.coerce(other)
        a, b, _ = self._aligned(other)
        charge(max(_bits(a), _bits(b)))
        return (a > b) - (a < b)

    def __eq__(self, other) -> bool:
        if isinstance(other, INTEGER_TYPES):
            other = Dyadic(other)
        if not isinstance(other, Dyadic):
            return NotImplemented
        return self.mantissa == other.mantissa and self.exponent == other.exponent

    def __lt__(self, other: DyadicLike) -> bool:
        if not isinstance(other, (Dyadic,) + INTEGER_TYPES):
            return NotImplemented
        return self._compare(other) < 0

    def __hash__(self) -> int:
        if self.exponent <= 0:
            return hash(int(self.mantissa) << -self.exponent)
        return hash((int(self.mantissa), self.exponent))

    def __repr__(self) -> str:
        return f"Dyadic({self.as_fraction()})"

    def __str__(self) -> str:
        return str(self.as_fraction())


ZERO = Dyadic(0)
ONE = Dyadic(1)
HALF = Dyadic(1, 1)


def add(a: Dyadic, b: Dyadic) -> Dyadic:
    return a + b


def mul(a: Dyadic, b: Dyadic) -> Dyadic:
    return a * b


def floor_scaled(x: Dyadic, n: int) -> int:
    """floor(x·2^n) as an integer"""
    shift = n - x.exponent
    if shift >= 0:
        return int(x.mantissa << shift)
    return int(x.mantissa >> -shift)


def ceil_scaled(x: Dyadic, n: int) -> int:
    return -floor_scaled(-x, n)


def round_up_strict(x: Dyadic, n: int) -> Dyadic:
    """Least multiple of 2^(-n) strictly greater than x"""
    return Dyadic(floor_scaled(x, n) + 1, n)


def round_down_strict(x: Dyadic, n: int) -> Dyadic:
    """Greatest multiple of 2^(-n) strictly smaller than x"""
    return Dyadic(ceil_scaled(x, n) - 1, n)


def round_nearest(x: Dyadic, n: int) -> Dyadic:
    # ties go toward -infinity
    return Dyadic(ceil_scaled(x.scale(n) - HALF, 0), n)


def mag_bound(x: Dyadic) -> int:
    """ceil(lb(|x| + 1)), exact also when |x| + 1 is a power of two"""
    y = abs(x) + ONE
    return max(0, (y.mantissa - 1).bit_length() - y.exponent)


def precision_of(d: Dyadic) -> int:
    """Largest k with d <= 2^(-k), for d > 0"""
    if d.sign <= 0:
        raise DomainError(f"precision_of needs a positive dyadic, got {d}")
    return d.exponent - (d.mantissa - 1).bit_length()


__all__ = [
    "Dyadic",
    "ZERO",
    "ONE",
    "HALF",
    "add",
    "mul",
    "floor_scaled",
    "ceil_scaled",
    "round_up_strict",
    "round_down_strict",
    "round_nearest",
    "mag_bound",
    "precision_of",
]
