"""
Reference reals with exact witnesses, used by tests, commands and benchmarks.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List

from paramreals.apps.core.dyadic import Dyadic

from .builders import cauchy_of_dyadic, cauchy_of_rational, cauchy_of_sqrt, interval_of_dyadic
from .names import Name
from .translate import cauchy_to_interval
from .witnesses import ExactWitness, SqrtWitness, Witness


@dataclass(frozen=True)
class CorpusEntry:
    label: str
    cauchy: Callable[[], Name]
    interval: Callable[[], Name]
    witness: Witness


def _dyadic(label: str, value: Fraction) -> CorpusEntry:
    d = Dyadic.from_fraction(value)
    return CorpusEntry(
        label, lambda: cauchy_of_dyadic(d), lambda: interval_of_dyadic(d), ExactWitness(d)
    )


def _computed(label: str, build: Callable[[], Name], witness: Witness) -> CorpusEntry:
    return CorpusEntry(label, build, lambda: cauchy_to_interval(build()), witness)


def corpus() -> List[CorpusEntry]:
    """Every call builds fresh names, with empty memos"""
    return [
        _dyadic("0", Fraction(0)),
        _dyadic("1", Fraction(1)),
        _dyadic("1/2", Fraction(1, 2)),
        _computed("1/3", lambda: cauchy_of_rational(1, 3), ExactWitness(Fraction(1, 3))),
        _dyadic("7/8", Fraction(7, 8)),
        _computed("sqrt(2)-1", lambda: cauchy_of_sqrt(2, offset=-1), SqrtWitness(2, -1)),
    ]


def corpus_entry(label: str) -> CorpusEntry:
    for entry in corpus():
        if entry.label == label:
            return entry
    raise KeyError(label)


__all__ = ["CorpusEntry", "corpus", "corpus_entry"]
