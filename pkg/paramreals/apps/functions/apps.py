from django.apps import AppConfig


class ParamRealsFunctionsConfig(AppConfig):
    name = "paramreals.apps.functions"
    label = "paramreals_functions"
