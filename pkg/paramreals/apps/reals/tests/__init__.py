from .test_commands import *  # noqa
from .test_measurement import *  # noqa
from .test_names import *  # noqa
from .test_translate import *  # noqa
