import logging

from .exceptions import FuelExhausted
from .settings import app_settings
from .signals import fuel_exhausted

logger = logging.getLogger(__name__)


class Fuel:
    """Budget of query-steps for a search that may not terminate"""

    def __init__(self, budget=None, purpose="searching"):
        self.budget = app_settings.Search.fuel if budget is None else budget
        self.purpose = purpose
        self.spent = 0

        if self.budget <= 0:
            raise ValueError("Fuel budget must be positive")

    @property
    def remaining(self):
        return self.budget - self.spent

    def spend(self, units=1):
        if self.spent + units > self.budget:
            fuel_exhausted.send(sender=Fuel, purpose=self.purpose, fuel=self.budget)
            raise FuelExhausted(f"Fuel exhausted while {self.purpose}", fuel=self.budget)
        self.spent += units


__all__ = ["Fuel"]
