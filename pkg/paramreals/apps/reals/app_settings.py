import logging

from django.test.signals import setting_changed

from paramreals.apps.core.settings import read_user_settings

logger = logging.getLogger(__name__)


class AppSettings:
    PREFIX = "REALS_"

    class Normalizer:
        degree = 1  # p(X) = X^degree

    class Translation:
        delay_budget = 256  # fuel per query bit in the delay transform

    class Arithmetic:
        guard_bits = 2

    def __init__(self):
        self.load()

    def load(self):
        ATTRS = {
            "NORMALIZER_DEGREE": (self.Normalizer, "degree"),
            "TRANSLATION_DELAY_BUDGET": (self.Translation, "delay_budget"),
            "ARITHMETIC_GUARD_BITS": (self.Arithmetic, "guard_bits"),
        }

        for setting, value in read_user_settings(self.PREFIX).items():
            if setting not in ATTRS:
                logger.warning(f"Ignoring {self.PREFIX}{setting}, it is not a reals setting")
                continue

            setting_class, attr = ATTRS[setting]
            setattr(setting_class, attr, value)


app_settings = AppSettings()


def reload_settings(*args, **kw):
    if kw["setting"] == "PARAMREALS":
        app_settings.load()


setting_changed.connect(reload_settings)
