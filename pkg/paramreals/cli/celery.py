import os

from celery import Celery
from django.conf import settings


class ParamRealsCeleryConfig:
    name = "ParamReals"

    broker_url = settings.CELERY_BROKER_URL
    result_backend = settings.CELERY_RESULT_BACKEND
    task_always_eager = (
        "PARAMREALS_TEST" in os.environ or settings.CELERY_BROKER_URL.startswith("memory")
    )
    task_eager_propagates = True
    accept_content = ["json"]
    task_serializer = "json"
    result_serializer = "json"


app = Celery()
app.config_from_object(ParamRealsCeleryConfig)
app.autodiscover_tasks()
