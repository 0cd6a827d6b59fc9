from . import logging


def _np_options() -> None:
    import numpy as np

    np.set_printoptions(linewidth=150, threshold=10_000)


def _is_editable() -> bool:
    import importlib.util
    import pathlib
    import site

    # Get the ModuleSpec of lrcsim
    lrcsim_spec = importlib.util.find_spec(name="lrcsim")

    # This can be None. If it's None, assume non-editable installation.
    if lrcsim_spec is None or lrcsim_spec.origin is None:
        return False

    # Get the folder containing the lrcsim package
    lrcsim_package_dir = str(pathlib.Path(lrcsim_spec.origin).parent.parent)

    # The installation is editable if the package dir is not in any {site|dist}-packages
    return lrcsim_package_dir not in site.getsitepackages()


def _version() -> str:

    try:
        from ._version import __version__
    except ImportError:
        return "0.0.0"

    return __version__


__version__ = _version()

# Initialize the logging verbosity
if _is_editable():
    logging.configure(level=logging.LoggingLevel.DEBUG)
else:
    logging.configure(level=logging.LoggingLevel.WARNING)

# Initialize the numpy print options
_np_options()

del _np_options
del _is_editable
del _version

from . import config, exceptions, math, utils  # isort:skip
from . import api, parsers
