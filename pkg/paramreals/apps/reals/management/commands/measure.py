import logging

from django.core.management.base import BaseCommand, CommandError

from paramreals.apps.core.choices import REAL_REPRESENTATIONS
from paramreals.apps.core.exceptions import FormatError, FuelExhausted, TableRangeError
from paramreals.apps.core.management.arguments import parse_range
from paramreals.apps.core.schemas import MeasurementReport
from paramreals.apps.reals.measurement import measure_mu_interval
from paramreals.apps.reals.tables import load_name

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = "Measures the parameter of a tabulated interval or iRRAM name"
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument("--in", dest="source_file", required=True, help="tabulated name")
        parser.add_argument(
            "--repr",
            dest="representation",
            choices=(REAL_REPRESENTATIONS.interval, REAL_REPRESENTATIONS.irram),
            required=True,
        )
        parser.add_argument("--n", dest="precisions", default="0..16", help="A..B")
        parser.add_argument("--fuel", type=int, default=None, help="query-steps per search")

    def handle(self, *args, **options):
        precisions = parse_range(options["precisions"])
        representation = options["representation"]

        try:
            phi = load_name(options["source_file"], representation=representation)
            rows = []
            start = 0
            for n in precisions:
                bound = measure_mu_interval(phi, n, options["fuel"], start=start)
                rows.append(bound.as_row(n))
                start = bound.conv_index
        except OSError as exc:
            raise CommandError(str(exc), returncode=2)
        except (FormatError, TableRangeError) as exc:
            raise CommandError(str(exc), returncode=2)
        except FuelExhausted as exc:
            raise CommandError(str(exc), returncode=3)

        report = MeasurementReport(representation=representation, rows=rows)
        self.stdout.write(report.to_json(), ending="")
