import logging

from django.core.management.base import BaseCommand, CommandError

from paramreals.apps.core.bitcodec import MonotoneTable
from paramreals.apps.core.exceptions import ExpressionSyntaxError, FormatError, TableRangeError
from paramreals.apps.core.meter import check_bound, load_json, verdict_report
from paramreals.apps.core.sop import parse_sop

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = "Checks that a second-order polynomial dominates the queries of a recorded trace"
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument("--trace", required=True, help="JSON trace report")
        parser.add_argument("--sop", required=True, help="bound, e.g. 'X + l(2) + 1'")
        parser.add_argument("--table", required=True, help="monotone table for l")
        parser.add_argument("--n", type=int, default=None, help="only check queries up to n")
        parser.add_argument(
            "--quantity", choices=("work", "answer_size", "query_size"), default="work"
        )

    def handle(self, *args, **options):
        try:
            trace = load_json(options["trace"])
            bound = parse_sop(options["sop"])
            with open(options["table"]) as table_file:
                table = MonotoneTable.parse(table_file.read(), path=options["table"])
        except OSError as exc:
            raise CommandError(str(exc), returncode=2)
        except (FormatError, ExpressionSyntaxError, ValueError) as exc:
            raise CommandError(str(exc), returncode=2)

        try:
            verdict = check_bound(
                trace, bound, table, n=options["n"], quantity=options["quantity"]
            )
        except TableRangeError as exc:
            raise CommandError(str(exc), returncode=2)

        self.stdout.write(verdict_report(verdict, bound, quantity=options["quantity"]).to_json())
        if not verdict.dominated:
            raise CommandError(
                f"{bound} is violated at query {verdict.witness.argument}", returncode=1
            )
