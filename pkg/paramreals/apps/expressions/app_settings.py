import logging

from django.test.signals import setting_changed

from paramreals.apps.core.settings import read_user_settings

logger = logging.getLogger(__name__)


class AppSettings:
    PREFIX = "EXPRESSIONS_"

    class Restart:
        cap = 12  # doublings of the working precision

    class Dag:
        guard_bits = 2

    class Tree:
        node_cap = 2**15

    def __init__(self):
        self.load()

    def load(self):
        ATTRS = {
            "RESTART_CAP": (self.Restart, "cap"),
            "DAG_GUARD_BITS": (self.Dag, "guard_bits"),
            "TREE_NODE_CAP": (self.Tree, "node_cap"),
        }

        for setting, value in read_user_settings(self.PREFIX).items():
            if setting not in ATTRS:
                logger.warning(f"Ignoring {self.PREFIX}{setting}, not an expressions setting")
                continue

            setting_class, attr = ATTRS[setting]
            setattr(setting_class, attr, value)


app_settings = AppSettings()


def reload_settings(*args, **kw):
    if kw["setting"] == "PARAMREALS":
        app_settings.load()


setting_changed.connect(reload_settings)
