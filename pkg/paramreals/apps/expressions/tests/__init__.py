from .test_benchmarks import *  # noqa
from .test_commands import *  # noqa
from .test_oracles import *  # noqa
from .test_parser import *  # noqa
from .test_strategies import *  # noqa
