"""
Measured parameters of interval and iRRAM names.

The parameter of an interval name at n is the index of its first answer
of diameter at most 2^(-n), plus the magnitude ceil(lb(|x| + 1)) of the
real it names. The magnitude is only known up to a bracket, and every
bound check uses the upper end.
"""
import logging
from dataclasses import dataclass
from typing import Optional

from paramreals.apps.core.bitcodec import MonotoneTable, size_of
from paramreals.apps.core.choices import REPRESENTATIONS
from paramreals.apps.core.dyadic import Dyadic
from paramreals.apps.core.fuel import Fuel
from paramreals.apps.core.intervals import diam_at_most, magnitude_bracket
from paramreals.apps.core.schemas import ParameterRow
from paramreals.apps.core.settings import app_settings as core_settings

from .names import Name, ProductName

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ParamBound:
    conv_index: int
    mag_low: int
    mag_high: int
    estimate: bool = False

    @property
    def value(self) -> int:
        return self.conv_index + self.mag_high

    def as_row(self, n: int) -> ParameterRow:
        return ParameterRow(
            n=n,
            conv_index=self.conv_index,
            mag_low=self.mag_low,
            mag_high=self.mag_high,
            value=self.value,
            estimate=self.estimate,
        )


def _converges_at(phi, N, n) -> bool:
    return diam_at_most(phi(N), Dyadic.power_of_two(-n))


def search_convergence(phi: Name, n: int, fuel: Fuel, start: int = 0) -> int:
    """Least N >= start with diam(phi(N)) <= 2^(-n)"""
    N = start
    while True:
        fuel.spend()
        if _converges_at(phi, N, n):
            return N
        N += 1


def search_stable_convergence(phi: Name, n: int, fuel: Fuel, window: int, start: int = 0) -> int:
    """Least N >= start such that every answer in N..N+window has diam <= 2^(-n)"""
    N = start
    run = 0
    while True:
        fuel.spend()
        if _converges_at(phi, N + run, n):
            run += 1
            if run > window:
                return N
        else:
            N += run + 1
            run = 0


def _is_irram(phi, representation):
    return (representation or phi.representation) == REPRESENTATIONS.irram


def measure_mu_interval(
    phi: Name,
    n: int,
    fuel: Optional[int] = None,
    representation: Optional[str] = None,
    start: int = 0,
) -> ParamBound:
    budget = Fuel(fuel, purpose=f"measuring {phi!r} at {n}")

    if _is_irram(phi, representation):
        window = core_settings.Measurement.irram_window
        first_unit = search_stable_convergence(phi, 0, budget, window)
        conv_index = search_stable_convergence(phi, n, budget, window, start=start)
        estimate = True
    else:
        first_unit = search_convergence(phi, 0, budget)
        conv_index = search_convergence(phi, n, budget, start=start)
        estimate = False

    mag_low, mag_high = magnitude_bracket(phi(first_unit))
    logger.debug(f"{phi!r} reaches 2^-{n} at {conv_index}, magnitude in [{mag_low}, {mag_high}]")
    return ParamBound(conv_index, mag_low, mag_high, estimate=estimate)


def measure_parameters(phi: Name, upto: int, fuel: Optional[int] = None, representation=None):
    """ParamBound for every n in 0..upto, each search resuming where the last one stopped"""
    bounds = []
    start = 0
    for n in range(upto + 1):
        bound = measure_mu_interval(phi, n, fuel, representation=representation, start=start)
        bounds.append(bound)
        start = bound.conv_index
    return bounds


def measure_parameter_table(
    phi: Name, upto: int, fuel: Optional[int] = None, representation=None
) -> MonotoneTable:
    """n -> conv_index(n) + mag_high, usable as the function argument of a bound"""
    bounds = measure_parameters(phi, upto, fuel, representation=representation)
    return MonotoneTable.running_max(bound.value for bound in bounds)


def measure_mu_product(pair: ProductName, n: int, fuel: Optional[int] = None) -> int:
    return max(
        measure_mu_interval(pair.first, n, fuel).value,
        measure_mu_interval(pair.second, n, fuel).value,
    )


def measure_product_table(pair: ProductName, upto: int, fuel: Optional[int] = None):
    first = measure_parameter_table(pair.first, upto, fuel)
    second = measure_parameter_table(pair.second, upto, fuel)
    return first.pointwise_max(second)


def measure_size_table(phi, upto: int) -> MonotoneTable:
    """|phi|(0..upto), exact for names that declare their size bound"""
    return MonotoneTable.running_max(size_of(phi, n) for n in range(upto + 1))


__all__ = [
    "ParamBound",
    "search_convergence",
    "search_stable_convergence",
    "measure_mu_interval",
    "measure_parameters",
    "measure_parameter_table",
    "measure_mu_product",
    "measure_product_table",
    "measure_size_table",
]
