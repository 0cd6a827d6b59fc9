import contextlib
import enum
import logging
import os
from collections.abc import Iterator

import coloredlogs

LOGGER_NAME = "lrcsim"
LEVEL_ENV_VAR = "LRCSIM_LOGGING_LEVEL"

_HANDLER_FORMAT = "%(name)s[%(process)d] %(levelname)s %(message)s"


class LoggingLevel(enum.IntEnum):
    NOTSET = logging.NOTSET
    DEBUG = logging.DEBUG
    INFO = logging.INFO
    WARNING = logging.WARNING
    ERROR = logging.ERROR


def _logger() -> logging.Logger:
    return logging.getLogger(name=LOGGER_NAME)


def _level_from_environment() -> LoggingLevel | None:

    name = os.environ.get(LEVEL_ENV_VAR)

    if name is None:
        return None

    try:
        return LoggingLevel[name.strip().upper()]
    except KeyError:
        return None


def set_logging_level(level: int | LoggingLevel = LoggingLevel.WARNING) -> None:
    _logger().setLevel(level=LoggingLevel(level).value)


def get_logging_level() -> LoggingLevel:
    return LoggingLevel(_logger().getEffectiveLevel())


def configure(level: LoggingLevel = LoggingLevel.WARNING) -> None:
    """
    Attach the colored handler to the 'lrcsim' logger.

    Args:
        level: The default level, overridden by the `LRCSIM_LOGGING_LEVEL`
            environment variable (e.g. "debug") when it is set.
    """

    logger = _logger()

    # The package and the command line may both configure the logger.
    if not any(
        isinstance(h.formatter, coloredlogs.ColoredFormatter) for h in logger.handlers
    ):
        handler = logging.StreamHandler()
        handler.setFormatter(fmt=coloredlogs.ColoredFormatter(fmt=_HANDLER_FORMAT))
        logger.addHandler(hdlr=handler)

    # Do not propagate the messages to handlers of parent loggers
    # (preventing duplicate logging)
    logger.propagate = False

    from_env = _level_from_environment()
    set_logging_level(level=from_env if from_env is not None else level)

    debug(f"Logger configured with level {get_logging_level().name}")


@contextlib.contextmanager
def logging_level(level: int | LoggingLevel) -> Iterator[LoggingLevel]:
    """
    Context manager to temporarily change the verbosity.

    Args:
        level: The level active within the context.

    Yields:
        The previous level, restored when exiting the context.
    """

    previous = get_logging_level()
    set_logging_level(level=level)

    try:
        yield previous
    finally:
        set_logging_level(level=previous)


def debug(msg: str = "") -> None:
    _logger().debug(msg=msg)


def info(msg: str = "") -> None:
    _logger().info(msg=msg)


def warning(msg: str = "") -> None:
    _logger().warning(msg=msg)


def error(msg: str = "") -> None:
    _logger().error(msg=msg)
