"""
Executable form of each representation's contract, checked up to a depth.
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional

from paramreals.apps.core.choices import REPRESENTATIONS, VALIDATION_CHECKS
from paramreals.apps.core.dyadic import Dyadic
from paramreals.apps.core.exceptions import BrokenNameError
from paramreals.apps.core.intervals import DyadicInterval, diam_at_most, intersect, subset
from paramreals.apps.core.settings import app_settings as core_settings
from paramreals.apps.core.signals import name_violation

from .names import Name
from .witnesses import Witness

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Violation:
    index: int
    check: str
    detail: str = ""


@dataclass
class ValidationReport:
    representation: str
    depth: int
    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def first(self, check: Optional[str] = None) -> Optional[Violation]:
        return next((v for v in self.violations if check in (None, v.check)), None)

    def add(self, index, check, detail=""):
        self.violations.append(Violation(index, check, detail))


def _collect_answers(phi, depth, answer_type, report):
    answers = []
    for n in range(depth + 1):
        try:
            answer = phi(n)
        except BrokenNameError as exc:
            report.add(n, VALIDATION_CHECKS.answer_type, str(exc))
            return None
        if not isinstance(answer, answer_type):
            report.add(n, VALIDATION_CHECKS.answer_type, f"{answer!r} is not a {answer_type}")
            return None
        answers.append(answer)
    return answers


def _check_cauchy(answers, witness, report):
    depth = len(answers) - 1
    last = answers[depth]
    slack = Dyadic.power_of_two(-depth)
    for n, answer in enumerate(answers):
        if witness is not None:
            if not witness.approximated_by(answer, n):
                report.add(n, VALIDATION_CHECKS.cauchy_bound, f"{answer} is off by > 2^-{n}")
        elif abs(answer - last) > Dyadic.power_of_two(-n) + slack:
            report.add(n, VALIDATION_CHECKS.consistency, f"{answer} is far from {last}")


def _check_enclosures(answers, witness, report, nested):
    depth = len(answers) - 1
    for n, answer in enumerate(answers):
        if nested and n > 0 and not subset(answer, answers[n - 1]):
            report.add(n, VALIDATION_CHECKS.nested, f"{answer!r} is not in {answers[n - 1]!r}")

        if witness is not None:
            if not witness.within(answer):
                report.add(n, VALIDATION_CHECKS.containment, f"{answer!r} misses {witness!r}")
        else:
            try:
                intersect(answer, answers[depth])
            except BrokenNameError:
                report.add(n, VALIDATION_CHECKS.consistency, f"{answer!r} misses the last answer")

    target = depth // core_settings.Validation.convergence_divisor
    if not diam_at_most(answers[depth], Dyadic.power_of_two(-target)):
        report.add(depth, VALIDATION_CHECKS.convergence, f"diameter above 2^-{target}")


def validate(
    phi: Name,
    depth: int,
    witness: Optional[Witness] = None,
    representation: Optional[str] = None,
) -> ValidationReport:
    """
    Checks answers 0..depth. Without a witness, Cauchy and iRRAM names can
    only be checked for consistency with their last answer.
    """
    representation = representation or phi.representation
    report = ValidationReport(representation=representation, depth=depth)

    if representation == REPRESENTATIONS.cauchy:
        answers = _collect_answers(phi, depth, Dyadic, report)
        if answers:
            _check_cauchy(answers, witness, report)
    elif representation in (REPRESENTATIONS.interval, REPRESENTATIONS.irram):
        answers = _collect_answers(phi, depth, DyadicInterval, report)
        if answers:
            nested = representation == REPRESENTATIONS.interval
            _check_enclosures(answers, witness, report, nested=nested)
    else:
        raise ValueError(f"Can not validate {representation} names")

    for violation in report.violations:
        name_violation.send(sender=Name, name=phi, violation=violation)
    return report


__all__ = ["Violation", "ValidationReport", "validate"]
