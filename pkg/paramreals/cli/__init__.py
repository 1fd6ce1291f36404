import os
import sys

COMMAND_ALIASES = {"check-bound": "check_bound"}


def main(argv=None):
    from django.core.management import execute_from_command_line

    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "paramreals.cli.settings")

    argv = list(sys.argv if argv is None else argv)
    if len(argv) > 1:
        argv[1] = COMMAND_ALIASES.get(argv[1], argv[1])

    execute_from_command_line(argv)
