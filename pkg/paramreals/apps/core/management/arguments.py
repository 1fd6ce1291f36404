import re

from django.core.management.base import CommandError

RANGE_FORMAT = re.compile(r"^(\d+)(?:\.\.(\d+))?$")


def parse_range(text):
    """'A..B' or 'A', as the inclusive range of naturals"""
    match = RANGE_FORMAT.match(text.strip())
    if not match:
        raise CommandError(f"Expected a range like 0..16, got {text!r}", returncode=2)
    low, high = match.groups()
    low = int(low)
    high = low if high is None else int(high)
    if high < low:
        raise CommandError(f"Empty range {text!r}", returncode=2)
    return range(low, high + 1)
