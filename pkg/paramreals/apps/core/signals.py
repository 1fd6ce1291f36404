from django.dispatch import Signal

name_violation = Signal(["name", "violation"])
fuel_exhausted = Signal(["purpose", "fuel"])

__all__ = [
    "name_violation",
    "fuel_exhausted",
]
