import logging
from datetime import datetime

from django.core.management.base import BaseCommand, CommandError

from paramreals.apps.core.choices import STRATEGIES
from paramreals.apps.core.exceptions import (
    DomainError,
    ExpressionSyntaxError,
    FuelExhausted,
    NodeCapExceeded,
    ScopeError,
)
from paramreals.apps.core.meter import trace_report, write_csv

from ...parser import parse, parse_binding, to_text
from ...schemas import EvaluationReport
from ...strategies import eval_expr

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = "Evaluates a real expression to an enclosure of diameter at most 2^(-N)"
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument("--expr", required=True, help="e.g. 'apply(sqrt, 2) - 1'")
        parser.add_argument("--prec", type=int, required=True, help="N")
        parser.add_argument(
            "--strategy", choices=[strategy for strategy, _ in STRATEGIES], default=STRATEGIES.dag
        )
        parser.add_argument(
            "--bind", action="append", default=[], metavar="NAME=VALUE", help="repeatable"
        )
        parser.add_argument("--fuel", type=int, default=None, help="query-steps for the dag")
        parser.add_argument("--report", help="write the JSON evaluation report here")
        parser.add_argument("--csv", help="write the per-query trace table here")

    def handle(self, *args, **options):
        strategy, precision = options["strategy"], options["prec"]
        if precision < 0:
            raise CommandError("The precision is a natural number", returncode=2)
        if options["fuel"] is not None and options["fuel"] <= 0:
            raise CommandError("The fuel budget must be positive", returncode=2)

        try:
            expr = parse(options["expr"])
            bindings = dict(parse_binding(text) for text in options["bind"])
            enclosure, trace = eval_expr(
                expr, precision, strategy, bindings=bindings, fuel=options["fuel"]
            )
        except (ExpressionSyntaxError, ScopeError, DomainError) as exc:
            raise CommandError(str(exc), returncode=2)
        except NodeCapExceeded as exc:
            raise CommandError(
                f"{exc} (peak of {exc.trace.peak_live_nodes} live nodes)", returncode=3
            )
        except FuelExhausted as exc:
            raise CommandError(str(exc), returncode=3)

        logger.info(f"{strategy} evaluation used {trace.work_units} work units")
        self.stdout.write(enclosure.to_text())

        if options["report"]:
            report = EvaluationReport(
                expression=to_text(expr),
                strategy=strategy,
                precision=precision,
                bindings={name: to_text(value) for name, value in bindings.items()},
                enclosure=enclosure.to_text(),
                trace=trace_report(trace),
                generated_at=datetime.now(),
            )
            with open(options["report"], "w") as report_file:
                report_file.write(report.to_json())

        if options["csv"]:
            write_csv(trace, options["csv"])
