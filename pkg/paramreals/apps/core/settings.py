import logging

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured
from django.test.signals import setting_changed

logger = logging.getLogger(__name__)


def read_user_settings(prefix):
    try:
        user_settings = getattr(settings, "PARAMREALS", {})
    except ImproperlyConfigured:
        return {}

    return {
        key[len(prefix) :]: value for key, value in user_settings.items() if key.startswith(prefix)
    }


class AppSettings:
    PREFIX = "CORE_"

    class Search:
        fuel = 2**20  # query-steps per bounded search

    class Measurement:
        irram_window = 16

    class Validation:
        convergence_divisor = 8

    def __init__(self):
        self.load()

    def load(self):
        ATTRS = {
            "SEARCH_FUEL": (self.Search, "fuel"),
            "MEASUREMENT_IRRAM_WINDOW": (self.Measurement, "irram_window"),
            "VALIDATION_CONVERGENCE_DIVISOR": (self.Validation, "convergence_divisor"),
        }

        for setting, value in read_user_settings(self.PREFIX).items():
            if setting not in ATTRS:
                logger.warning(f"Ignoring {self.PREFIX}{setting}, it is not a core setting")
                continue

            setting_class, attr = ATTRS[setting]
            setattr(setting_class, attr, value)


app_settings = AppSettings()


def reload_settings(*args, **kw):
    global app_settings
    setting = kw["setting"]
    if setting == "PARAMREALS":
        app_settings.load()


setting_changed.connect(reload_settings)
