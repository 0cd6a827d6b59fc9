from typing import Any, NamedTuple


class Verdict(NamedTuple):
    """
    The outcome of a single check.

    Attributes:
        passed: Whether the check passed.
        detail: A witness when the check passed, a counterexample otherwise.
    """

    passed: bool
    detail: Any = None


def all_passed(verdicts: dict[str, Verdict]) -> bool:
    """Return whether all the verdicts passed."""

    return all(v.passed for v in verdicts.values())
