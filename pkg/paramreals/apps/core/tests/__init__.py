from .test_bitcodec import *  # noqa
from .test_dyadic import *  # noqa
from .test_intervals import *  # noqa
from .test_meter import *  # noqa
from .test_sop import *  # noqa
