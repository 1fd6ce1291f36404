"""
Measuring the parameter of a function name.

The modulus part at n is the least N such that every query of diameter
at most 2^(-N) inside [0, 1] gets an answer of diameter at most 2^(-n).
It is searched level by level over covers of [0, 1] by intervals of
radius 2^(-N-1) centered on the 2^(-N-1) grid. Any interval of diameter
2^(-N-1) lies inside one of them, which costs the upper bound one level.
"""
import logging
from dataclasses import dataclass
from typing import Iterator, Optional, Union

from paramreals.apps.core.dyadic import Dyadic, ceil_scaled, floor_scaled, mag_bound
from paramreals.apps.core.fuel import Fuel
from paramreals.apps.core.intervals import FiniteInterval, diam_at_most, magnitude, point
from paramreals.apps.core.schemas import FunctionParameterRow

from .app_settings import app_settings
from .names import IRRAMFunctionName

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ModulusSearch:
    level: int
    probes: int
    violated_level: Optional[int] = None


@dataclass(frozen=True)
class FunParamBound:
    modulus_part_lower: int
    modulus_part_upper: int
    norm_mag_upper: int

    @property
    def value(self) -> int:
        return self.modulus_part_upper + self.norm_mag_upper

    def as_row(self, n: int) -> FunctionParameterRow:
        return FunctionParameterRow(
            n=n,
            modulus_part_lower=self.modulus_part_lower,
            modulus_part_upper=self.modulus_part_upper,
            norm_mag_upper=self.norm_mag_upper,
            value=self.value,
        )


def cover(level: int) -> Iterator[FiniteInterval]:
    radius = Dyadic(1, level + 1)
    for j in range(2 ** (level + 1) + 1):
        yield FiniteInterval(Dyadic(j, level + 1), radius)


def covering(K: FiniteInterval, level: int) -> Iterator[FiniteInterval]:
    """Members of cover(level) holding K, for K inside [0, 1]"""
    scale = level + 1
    low = max(ceil_scaled(K.upper, scale) - 1, 0)
    high = min(floor_scaled(K.lower, scale) + 1, 2**scale)
    radius = Dyadic(1, scale)
    for j in range(low, high + 1):
        yield FiniteInterval(Dyadic(j, scale), radius)


def _as_fuel(fuel: Union[Fuel, int, None], purpose: str) -> Fuel:
    return fuel if isinstance(fuel, Fuel) else Fuel(fuel, purpose=purpose)


def _members_pass(psi, members: Iterator[FiniteInterval], target: Dyadic, fuel: Fuel) -> bool:
    for J in members:
        fuel.spend()
        if not diam_at_most(psi(J), target):
            return False
    return True


def search_modulus(
    psi: IRRAMFunctionName, n: int, fuel: Union[Fuel, int, None] = None, confirm: int = 0
) -> ModulusSearch:
    """
    The least cover level whose answers all have diameter at most 2^(-n).
    With `confirm`, that many finer levels have to pass as well, which
    catches names that are not monotone.
    """
    fuel = _as_fuel(fuel, f"searching the modulus of {psi!r} at {n}")
    spent_before = fuel.spent
    target = Dyadic.power_of_two(-n)
    violated_level = None

    level = 0
    while True:
        failed = next(
            (
                level + offset
                for offset in range(confirm + 1)
                if not _members_pass(psi, cover(level + offset), target, fuel)
            ),
            None,
        )
        if failed is None:
            probes = fuel.spent - spent_before
            logger.debug(f"{psi!r}: modulus level {level} at {n}, {probes} probes")
            return ModulusSearch(level, probes, violated_level)
        violated_level = failed
        level = failed + 1


def modulus_upper_bound(
    psi: IRRAMFunctionName, n: int, fuel: Union[Fuel, int, None] = None
) -> int:
    return search_modulus(psi, n, fuel).level


def local_modulus(
    psi: IRRAMFunctionName, x: Dyadic, n: int, fuel: Union[Fuel, int, None] = None
) -> int:
    """The least cover level whose members holding x all answer within 2^(-n)"""
    fuel = _as_fuel(fuel, f"searching the modulus of {psi!r} at {x} and {n}")
    target = Dyadic.power_of_two(-n)
    K = point(Dyadic.coerce(x))
    level = 0
    while not _members_pass(psi, covering(K, level), target, fuel):
        level += 1
    return level


def norm_magnitude(psi: IRRAMFunctionName, fuel: Union[Fuel, int, None] = None) -> int:
    fuel = _as_fuel(fuel, f"bounding the norm of {psi!r}")
    level = search_modulus(psi, 0, fuel).level
    return max(mag_bound(magnitude(psi(J))) for J in cover(level))


def measure_mu_if(
    psi: IRRAMFunctionName, n: int, fuel: Union[Fuel, int, None] = None
) -> FunParamBound:
    search = search_modulus(psi, n, fuel)
    # [1/2 ± 1/2] is a level 0 cover member and holds every clamped query
    upper = search.level + 1 if search.level else 0
    lower = 0 if search.violated_level is None else search.violated_level + 1
    return FunParamBound(lower, upper, norm_magnitude(psi, fuel))


def sanity_probe(psi: IRRAMFunctionName, fuel=None) -> None:
    """
    Searches the modulus at the first few precisions on a small budget,
    confirming every level on finer covers. Raises FuelExhausted for
    names whose answers do not keep shrinking.
    """
    fuel = _as_fuel(
        fuel or app_settings.Sanity.probe_fuel, f"probing {psi!r} before conversion"
    )
    for n in range(app_settings.Sanity.precisions):
        search_modulus(psi, n, fuel, confirm=app_settings.Sanity.confirm_levels)


__all__ = [
    "ModulusSearch",
    "FunParamBound",
    "cover",
    "covering",
    "search_modulus",
    "modulus_upper_bound",
    "local_modulus",
    "norm_magnitude",
    "measure_mu_if",
    "sanity_probe",
]
