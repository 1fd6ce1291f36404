import logging

from django.dispatch import receiver

from .signals import fuel_exhausted, name_violation

logger = logging.getLogger(__name__)


@receiver(name_violation)
def on_name_violation_log_it(sender, **kw):
    violation = kw["violation"]
    logger.warning(f"{kw['name']!r} violates {violation.check} at {violation.index}")


@receiver(fuel_exhausted)
def on_fuel_exhausted_log_it(sender, **kw):
    logger.warning(f"Ran out of fuel ({kw['fuel']} units) while {kw['purpose']}")
