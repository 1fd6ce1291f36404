import logging

from django.core.management.base import BaseCommand, CommandError

from paramreals.apps.core.choices import BENCHMARKS
from paramreals.apps.core.exceptions import FuelExhausted
from paramreals.apps.core.management.arguments import parse_range

from ...benchmarks import bench_logistic, bench_modulus, bench_strategies, bench_translations

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = "Runs a benchmark and reports its rows and fitted constants"
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument("benchmark", choices=[benchmark for benchmark, _ in BENCHMARKS])
        parser.add_argument("--iterations", default=None, help="logistic: N, strategies: A..B")
        parser.add_argument("--prec", type=int, default=None, help="target precision")
        parser.add_argument("--rate", default="7/2", help="logistic rate r")
        parser.add_argument("--seed", default="1/2", help="logistic starting point")
        parser.add_argument("--family", default="4..12", help="modulus: K range of psi_K")
        parser.add_argument("--upto", type=int, default=32, help="translations: last query")
        parser.add_argument("--out", help="write the report here instead of standard output")
        parser.add_argument(
            "--timestamp", action="store_true", help="include the generated_at field"
        )

    def _run(self, benchmark, options):
        precision = options["prec"]
        if benchmark == BENCHMARKS.logistic:
            iterations = int(options["iterations"] or 20)
            precision = 40 if precision is None else precision
            return bench_logistic(iterations, precision, options["rate"], options["seed"])
        if benchmark == BENCHMARKS.modulus:
            return bench_modulus(parse_range(options["family"]))
        if benchmark == BENCHMARKS.strategies:
            return bench_strategies(
                parse_range(options["iterations"] or "1..16"),
                16 if precision is None else precision,
            )
        return bench_translations(options["upto"])

    def handle(self, *args, **options):
        benchmark = options["benchmark"]
        try:
            report = self._run(benchmark, options)
        except ValueError as exc:
            raise CommandError(str(exc), returncode=2)
        except FuelExhausted as exc:
            raise CommandError(str(exc), returncode=3)

        logger.info(f"Benchmark {benchmark} ran {len(report.rows)} cases")
        text = report.to_json(timestamp=options["timestamp"])
        if options["out"]:
            with open(options["out"], "w") as out_file:
                out_file.write(text)
        else:
            self.stdout.write(text, ending="")
