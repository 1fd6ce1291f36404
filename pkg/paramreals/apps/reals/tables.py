"""
Tabulated names: a header naming the representation, then one
`n <TAB> answer` record per line.

    # representation: interval
    0	[+0p0 ± +1p0]
    1	[+0p0 ± +1p1]
"""
import logging
import re
from typing import Dict, Optional

from paramreals.apps.core import intervals
from paramreals.apps.core.choices import REAL_REPRESENTATIONS, REPRESENTATIONS
from paramreals.apps.core.dyadic import Dyadic
from paramreals.apps.core.exceptions import FormatError, TableRangeError

from .names import Name, from_callback

logger = logging.getLogger(__name__)

HEADER = re.compile(r"^#\s*representation:\s*(\w+)\s*$")


def format_answer(answer) -> str:
    return answer.to_text()


def parse_answer(text: str, representation: str):
    if representation == REPRESENTATIONS.cauchy:
        return Dyadic.parse(text)
    return intervals.parse(text)


class Table:
    def __init__(self, representation: str, answers: Dict[int, object], source=None):
        self.representation = representation
        self.answers = answers
        self.source = source

    def __call__(self, n):
        try:
            return self.answers[n]
        except KeyError:
            raise TableRangeError(f"{self.source or 'table'} has no answer for {n}")

    @property
    def depth(self) -> int:
        return max(self.answers, default=-1)


def parse_table(text: str, path=None, representation: Optional[str] = None) -> Table:
    lines = text.splitlines()
    declared = None
    answers = {}

    for number, line in enumerate(lines, start=1):
        if not line.strip():
            continue

        header = HEADER.match(line)
        if header:
            declared = header.group(1)
            if declared not in REAL_REPRESENTATIONS:
                raise FormatError(f"Unknown representation {declared!r}", path=path, line=number)
            continue

        if line.startswith("#"):
            continue

        if declared is None:
            raise FormatError("Records before the representation header", path=path, line=number)

        index, _, answer = line.partition("\t")
        if not answer or not index.strip().isdigit():
            raise FormatError(f"Expected 'n<TAB>answer', got {line!r}", path=path, line=number)
        n = int(index)
        if n in answers:
            raise FormatError(f"Second record for query {n}", path=path, line=number)
        try:
            answers[n] = parse_answer(answer, declared)
        except FormatError as exc:
            raise FormatError(str(exc), path=path, line=number)

    if declared is None:
        raise FormatError("Missing '# representation: ...' header", path=path)

    if representation is not None and representation != declared:
        raise FormatError(f"Expected a {representation} table, found {declared}", path=path)

    return Table(declared, answers, source=path)


def load_name(path, representation: Optional[str] = None) -> Name:
    with open(path) as table_file:
        table = parse_table(table_file.read(), path=path, representation=representation)
    logger.info(f"Loaded {len(table.answers)} {table.representation} answers from {path}")
    return from_callback(table.representation, table, contract_note=f"table {path}")


def table_text(phi: Name, depth: int, representation: Optional[str] = None) -> str:
    representation = representation or phi.representation
    lines = [f"# representation: {representation}"]
    lines.extend(f"{n}\t{format_answer(phi(n))}" for n in range(depth + 1))
    return "\n".join(lines) + "\n"


def store_name(phi: Name, depth: int, path, representation: Optional[str] = None):
    with open(path, "w") as table_file:
        table_file.write(table_text(phi, depth, representation))


__all__ = [
    "Table",
    "parse_table",
    "load_name",
    "table_text",
    "store_name",
    "format_answer",
    "parse_answer",
]
