from django.apps import AppConfig


class ParamRealsRealsConfig(AppConfig):
    name = "paramreals.apps.reals"
    label = "paramreals_reals"
