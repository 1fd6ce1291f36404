from .test_currying import *  # noqa
from .test_generators import *  # noqa
from .test_modulus import *  # noqa
from .test_tables import *  # noqa
