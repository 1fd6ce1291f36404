from typing import Callable, Union

from .dyadic import Dyadic
from .intervals import DyadicInterval

BitString = str
Precision = int
Answer = Union[Dyadic, DyadicInterval, BitString]
PointOracle = Callable[[Precision], Dyadic]
Evaluator = Callable[[PointOracle, Precision], Dyadic]
