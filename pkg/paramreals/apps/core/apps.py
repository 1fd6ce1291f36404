from django.apps import AppConfig


class ParamRealsCoreConfig(AppConfig):
    name = "paramreals.apps.core"
    label = "paramreals_core"

    def ready(self):
        from . import handlers  # noqa
        from . import signals  # noqa
