from . import common  # isort:skip
from . import code, locality  # isort:skip
from . import subcode, construct, structure, recovery
from .common import Verdict
