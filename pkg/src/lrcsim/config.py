import contextlib
import contextvars
import dataclasses
import os
from collections.abc import Iterator

from lrcsim import logging


def _from_env(name: str, default: int) -> int:

    value = os.environ.get(name)

    if value is None:
        return default

    try:
        return int(value)
    except ValueError:
        logging.warning(msg=f"Ignoring non-integer value '{value}' of '{name}'")
        return default


@dataclasses.dataclass(frozen=True)
class Limits:
    """
    Limits of the exhaustive analyses.

    Attributes:
        max_codewords: The maximum number of codewords of a codebook.
        max_symbols: The maximum number of symbols (codewords times length).
        max_subsets: The maximum number of coordinate subsets a search visits.
    """

    max_codewords: int = 2**16
    max_symbols: int = 2**22
    max_subsets: int = 2**20

    @staticmethod
    def from_environment() -> "Limits":
        """
        Build the limits reading the `LRCSIM_MAX_*` environment variables.

        Returns:
            The limits, with defaults for the variables that are not set.
        """

        defaults = Limits()

        return Limits(
            max_codewords=_from_env("LRCSIM_MAX_CODEWORDS", defaults.max_codewords),
            max_symbols=_from_env("LRCSIM_MAX_SYMBOLS", defaults.max_symbols),
            max_subsets=_from_env("LRCSIM_MAX_SUBSETS", defaults.max_subsets),
        )


# Each thread and each asyncio task sees its own overrides.
_LIMITS: contextvars.ContextVar[Limits] = contextvars.ContextVar(
    "lrcsim_limits", default=Limits.from_environment()
)


def get_limits() -> Limits:
    """Return the limits active in the current context."""

    return _LIMITS.get()


@contextlib.contextmanager
def override_limits(**changes: int) -> Iterator[Limits]:
    """
    Context manager to temporarily replace some of the active limits.

    Args:
        **changes: The fields of `Limits` to replace.

    Yields:
        The limits active within the context.
    """

    limits = dataclasses.replace(get_limits(), **changes)
    token = _LIMITS.set(limits)

    try:
        logging.debug(msg=f"Overriding limits: {limits}")
        yield limits

    finally:
        _LIMITS.reset(token)
