from django.apps import AppConfig


class ParamRealsExpressionsConfig(AppConfig):
    name = "paramreals.apps.expressions"
    label = "paramreals_expressions"

    def ready(self):
        from paramreals.cli import celery  # noqa
