import logging

from django.test.signals import setting_changed

from paramreals.apps.core.settings import read_user_settings

logger = logging.getLogger(__name__)


class AppSettings:
    PREFIX = "FUNCTIONS_"

    class Currying:
        zero_radius_cap = 64  # precision assumed for point queries

    class Sanity:
        probe_fuel = 2**12
        precisions = 2
        confirm_levels = 4

    class KC:
        string_table_length = 256

    def __init__(self):
        self.load()

    def load(self):
        ATTRS = {
            "CURRYING_ZERO_RADIUS_CAP": (self.Currying, "zero_radius_cap"),
            "SANITY_PROBE_FUEL": (self.Sanity, "probe_fuel"),
            "SANITY_PRECISIONS": (self.Sanity, "precisions"),
            "SANITY_CONFIRM_LEVELS": (self.Sanity, "confirm_levels"),
            "KC_STRING_TABLE_LENGTH": (self.KC, "string_table_length"),
        }

        for setting, value in read_user_settings(self.PREFIX).items():
            if setting not in ATTRS:
                logger.warning(f"Ignoring {self.PREFIX}{setting}, it is not a functions setting")
                continue

            setting_class, attr = ATTRS[setting]
            setattr(setting_class, attr, value)


app_settings = AppSettings()


def reload_settings(*args, **kw):
    if kw["setting"] == "PARAMREALS":
        app_settings.load()


setting_changed.connect(reload_settings)
