"""
Tabulated KC function names: the representation header, the size table,
then one `r n <TAB> d` record per line.

    # representation: kc_function
    # size: 0 1 2 3
    +1p1 2	+1p1
"""
import logging
import re
from typing import Dict, Iterable, Tuple

from paramreals.apps.core.bitcodec import MonotoneTable
from paramreals.apps.core.choices import EXTENSION_RULES, REPRESENTATIONS
from paramreals.apps.core.dyadic import Dyadic
from paramreals.apps.core.exceptions import (
    FormatError,
    NonMonotoneTableError,
    TableRangeError,
)
from paramreals.apps.reals.tables import HEADER

from .names import KCFunctionName, KCQuery

logger = logging.getLogger(__name__)

SIZE_HEADER = re.compile(r"^#\s*size:\s*(.*)$")


class KCTable:
    def __init__(self, answers: Dict[KCQuery, Dyadic], source=None):
        self.answers = answers
        self.source = source

    def __call__(self, q: KCQuery) -> Dyadic:
        try:
            return self.answers[q]
        except KeyError:
            r, n = q
            raise TableRangeError(f"{self.source or 'table'} has no answer for r={r}, n={n}")


def _parse_size(text: str, path, number) -> MonotoneTable:
    try:
        values = [int(field) for field in text.split()]
        return MonotoneTable(values, extension=EXTENSION_RULES.fail)
    except (ValueError, NonMonotoneTableError) as exc:
        raise FormatError(f"Bad size table: {exc}", path=path, line=number)


def parse_kc_table(text: str, path=None) -> Tuple[KCTable, MonotoneTable]:
    declared = None
    size_table = None
    answers: Dict[KCQuery, Dyadic] = {}

    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue

        header = HEADER.match(line)
        if header:
            declared = header.group(1)
            if declared != REPRESENTATIONS.kc_function:
                raise FormatError(f"Expected a kc_function table, found {declared}", path, number)
            continue

        size = SIZE_HEADER.match(line)
        if size:
            size_table = _parse_size(size.group(1), path, number)
            continue

        if line.startswith("#"):
            continue

        if declared is None:
            raise FormatError("Records before the representation header", path=path, line=number)

        query, _, answer = line.partition("\t")
        try:
            point, precision = query.split()
            key = (Dyadic.parse(point), int(precision))
            value = Dyadic.parse(answer)
        except (ValueError, FormatError):
            raise FormatError(f"Expected 'r n<TAB>d', got {line!r}", path=path, line=number)

        if key in answers:
            raise FormatError(f"Second record for query {query.strip()}", path=path, line=number)
        answers[key] = value

    if declared is None:
        raise FormatError("Missing '# representation: kc_function' header", path=path)
    if size_table is None:
        raise FormatError("Missing '# size: ...' header", path=path)

    return KCTable(answers, source=path), size_table


def load_kc_name(path) -> KCFunctionName:
    with open(path) as table_file:
        table, size_table = parse_kc_table(table_file.read(), path=path)
    logger.info(f"Loaded {len(table.answers)} kc_function answers from {path}")
    return KCFunctionName(table, size_table=size_table, note=f"table {path}")


def kc_table_text(kappa: KCFunctionName, points: Iterable[Dyadic], depth: int) -> str:
    lines = [
        f"# representation: {REPRESENTATIONS.kc_function}",
        "# size: " + " ".join(str(kappa.modulus(n)) for n in range(depth + 1)),
    ]
    for r in points:
        lines.extend(f"{r.to_text()} {n}\t{kappa((r, n)).to_text()}" for n in range(depth + 1))
    return "\n".join(lines) + "\n"


def store_kc_name(kappa: KCFunctionName, points: Iterable[Dyadic], depth: int, path):
    with open(path, "w") as table_file:
        table_file.write(kc_table_text(kappa, points, depth))


__all__ = ["KCTable", "parse_kc_table", "load_kc_name", "kc_table_text", "store_kc_name"]
