from . import binet
from . import cli
from . import identities
from . import matrixrep
from . import problem
from . import quaternion
from . import ring
from . import sequences
from . import series
from . import settings
