import logging

from django.core.management.base import BaseCommand, CommandError

from paramreals.apps.core.choices import REAL_REPRESENTATIONS
from paramreals.apps.core.exceptions import (
    BrokenNameError,
    DomainError,
    FormatError,
    FuelExhausted,
    TableRangeError,
)
from paramreals.apps.core.meter import attach, trace_report
from paramreals.apps.core.schemas import TranslationReport
from paramreals.apps.reals.tables import load_name, table_text
from paramreals.apps.reals.translate import interval_to_cauchy, irram_to_cauchy, translate

logger = logging.getLogger(__name__)

KINDS = [kind for kind, _ in REAL_REPRESENTATIONS]


class Command(BaseCommand):
    help = "Translates a tabulated name into another representation of the same real"
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument("--in", dest="source_file", required=True, help="tabulated name")
        parser.add_argument("--from", dest="source", choices=KINDS, required=True)
        parser.add_argument("--to", dest="target", choices=KINDS, required=True)
        parser.add_argument("--depth", type=int, required=True, help="last query to tabulate")
        parser.add_argument("--out", help="write the table here instead of standard output")
        parser.add_argument("--fuel", type=int, default=None, help="query-steps per search")
        parser.add_argument("--trace", help="write the metered trace report here")

    def _translate(self, phi, source, target, fuel):
        if (source, target) == (REAL_REPRESENTATIONS.interval, REAL_REPRESENTATIONS.cauchy):
            return interval_to_cauchy(phi, fuel=fuel)
        if (source, target) == (REAL_REPRESENTATIONS.irram, REAL_REPRESENTATIONS.cauchy):
            return irram_to_cauchy(phi, fuel=fuel)
        return translate(phi, source, target)

    def handle(self, *args, **options):
        source, target, depth = options["source"], options["target"], options["depth"]

        try:
            phi = load_name(options["source_file"], representation=source)
            psi, trace = attach(self._translate(phi, source, target, options["fuel"]))
            text = table_text(psi, depth, representation=target)
        except OSError as exc:
            raise CommandError(str(exc), returncode=2)
        except (FormatError, TableRangeError, ValueError) as exc:
            raise CommandError(str(exc), returncode=2)
        except FuelExhausted as exc:
            raise CommandError(str(exc), returncode=3)
        except (BrokenNameError, DomainError) as exc:
            raise CommandError(f"Input is not a valid {source} name: {exc}", returncode=1)

        logger.info(f"Translated {options['source_file']} from {source} to {target}")

        if options["out"]:
            with open(options["out"], "w") as out_file:
                out_file.write(text)
        else:
            self.stdout.write(text, ending="")

        if options["trace"]:
            report = TranslationReport(
                source=source, target=target, depth=depth, trace=trace_report(trace)
            )
            with open(options["trace"], "w") as trace_file:
                trace_file.write(report.to_json())
