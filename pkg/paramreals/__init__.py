import os

__version__ = "0.1.0"


def setup(settings_module="paramreals.cli.settings"):
    """
    Configures django for library use, so that app settings, signals and
    logging are available outside of the `pr` command.
    """
    import django

    os.environ.setdefault("DJANGO_SETTINGS_MODULE", settings_module)
    django.setup()
