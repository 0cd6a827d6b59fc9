from __future__ import annotations

import jax_dataclasses
import numpy as np
from jax_dataclasses import Static

import lrcsim.api as lrc
import lrcsim.typing as ltp
from lrcsim import exceptions, logging
from lrcsim.math import Subsets
from lrcsim.utils import LrcDataclass


@jax_dataclasses.pytree_dataclass
class LocalityEntry(LrcDataclass):
    """
    The locality of a single coordinate.

    Attributes:
        coordinate: The coordinate.
        locality: The size of its smallest repair set, or None if none was found.
        witness: The canonical smallest repair set, or None.
    """

    coordinate: Static[int]
    locality: Static[int | None]
    witness: Static[ltp.Coordinates | None]


@jax_dataclasses.pytree_dataclass
class LocalityProfile(LrcDataclass):
    """
    The locality of all the coordinates of a code.

    Attributes:
        entries: One entry per coordinate, sorted by coordinate.
        size_cap: The largest repair-set size considered by the search.
    """

    entries: tuple[LocalityEntry, ...]
    size_cap: Static[int]

    def __getitem__(self, coordinate: int) -> LocalityEntry:
        return self.entries[coordinate]

    def __len__(self) -> int:
        return len(self.entries)

    def localities(self) -> tuple[int | None, ...]:
        """Return the locality of each coordinate."""

        return tuple(e.locality for e in self.entries)

    def witnesses(self) -> tuple[ltp.Coordinates | None, ...]:
        """Return the canonical repair set of each coordinate."""

        return tuple(e.witness for e in self.entries)


def _check_target(codebook: lrc.code.Codebook, target: int) -> int:

    if not 0 <= int(target) < codebook.n:
        raise exceptions.ShapeError(f"Coordinate {target} outside of [0, {codebook.n})")

    return int(target)


def _check_size_cap(codebook: lrc.code.Codebook, size_cap: int | None) -> int:

    if size_cap is None:
        return codebook.n - 1

    if not 0 <= size_cap <= codebook.n - 1:
        msg = "The size cap {} is outside of [0, {}]"
        raise exceptions.ShapeError(msg.format(size_cap, codebook.n - 1))

    return int(size_cap)


def determines(
    code: lrc.code.CodeLike,
    *,
    coordinates: ltp.CoordinatesLike,
    target: int,
) -> bool:
    """
    Check whether some coordinates determine another one in every codeword.

    Args:
        code: The code to consider.
        coordinates: The coordinates S.
        target: The coordinate i, not in S.

    Returns:
        True if any two codewords agreeing on S also agree on i.

    Note:
        S determines i iff grouping the codewords on their S-projection yields
        as many groups as grouping them on their (S + i)-projection.
    """

    codebook = lrc.code.as_codebook(code)
    target = _check_target(codebook, target)
    coordinates = lrc.code.check_coordinates(coordinates, n=codebook.n)

    if target in coordinates:
        raise exceptions.ShapeError(f"The target {target} belongs to {coordinates}")

    return lrc.code.count_projections(
        codebook, coordinates
    ) == lrc.code.count_projections(codebook, coordinates + (target,))


def repair_sets(
    code: lrc.code.CodeLike,
    *,
    target: int,
    size_cap: int | None = None,
    first_only: bool = False,
) -> list[ltp.Coordinates]:
    """
    Find all the repair sets of a coordinate up to a given size.

    Args:
        code: The code to consider.
        target: The coordinate to repair.
        size_cap: The largest size considered, defaults to n - 1.
        first_only: Stop at the first repair set found.

    Returns:
        The repair sets, in the canonical order (increasing size, then
        lexicographic).
    """

    codebook = lrc.code.as_codebook(code)
    target = _check_target(codebook, target)
    size_cap = _check_size_cap(codebook, size_cap)

    others = [c for c in range(codebook.n) if c != target]
    Subsets.check_budget(n_items=len(others), max_size=size_cap)

    found = []

    for subset in Subsets.canonical(others, max_size=size_cap):

        if determines(codebook, coordinates=subset, target=target):
            found.append(subset)

            if first_only:
                break

    return found


def min_repair_set(
    code: lrc.code.CodeLike, *, target: int, size_cap: int | None = None
) -> ltp.Coordinates | None:
    """
    Find the canonical smallest repair set of a coordinate.

    Args:
        code: The code to consider.
        target: The coordinate to repair.
        size_cap: The largest size considered, defaults to n - 1.

    Returns:
        The first repair set in the canonical order, or None.

    Note:
        A constant coordinate is repaired by the empty set.
    """

    found = repair_sets(code, target=target, size_cap=size_cap, first_only=True)
    return found[0] if found else None


def locality_of(
    code: lrc.code.CodeLike, *, target: int, size_cap: int | None = None
) -> int | None:
    """
    Return the locality of a coordinate.

    Args:
        code: The code to consider.
        target: The coordinate.
        size_cap: The largest repair-set size considered, defaults to n - 1.

    Returns:
        The size of the smallest repair set, or None if there is none within the cap.
    """

    witness = min_repair_set(code, target=target, size_cap=size_cap)
    return len(witness) if witness is not None else None


def locality_profile(
    code: lrc.code.CodeLike, *, size_cap: int | None = None
) -> LocalityProfile:
    """
    Compute the locality of every coordinate.

    Args:
        code: The code to consider.
        size_cap: The largest repair-set size considered, defaults to n - 1.

    Returns:
        The locality profile.
    """

    codebook = lrc.code.as_codebook(code)
    size_cap = _check_size_cap(codebook, size_cap)

    # Check the budget of the whole batch upfront.
    Subsets.check_budget(n_items=codebook.n - 1, max_size=size_cap)

    entries = []

    for coordinate in range(codebook.n):
        witness = min_repair_set(codebook, target=coordinate, size_cap=size_cap)
        entries.append(
            LocalityEntry(
                coordinate=coordinate,
                locality=len(witness) if witness is not None else None,
                witness=witness,
            )
        )

    logging.debug(msg=f"Localities: {[e.locality for e in entries]}")

    return LocalityProfile(entries=tuple(entries), size_cap=size_cap)


def information_locality(
    code: lrc.code.SystematicCode, *, size_cap: int | None = None
) -> int | None:
    """
    Compute the information locality of a systematic code.

    Args:
        code: The systematic code.
        size_cap: The largest repair-set size considered, defaults to n - 1.

    Returns:
        The largest locality of the information coordinates, or None if any of
        them has no repair set within the cap.
    """

    if not isinstance(code, lrc.code.SystematicCode):
        raise TypeError("The information locality needs a systematic code")

    localities = [
        locality_of(code, target=i, size_cap=size_cap)
        for i in code.information_coordinates()
    ]

    if not localities or any(l is None for l in localities):
        return None

    return max(localities)


def reversibility_check(
    code: lrc.code.CodeLike, *, group: ltp.CoordinatesLike
) -> dict[int, bool]:
    """
    Check which members of a group are determined by all the other members.

    Args:
        code: The code to consider.
        group: The group of at least two coordinates.

    Returns:
        The map from each member i of the group to whether the rest of the
        group determines i.
    """

    codebook = lrc.code.as_codebook(code)
    group = lrc.code.check_coordinates(group, n=codebook.n)

    if len(group) < 2:
        raise exceptions.ShapeError("A group needs at least two coordinates")

    return {
        member: determines(
            codebook,
            coordinates=tuple(c for c in group if c != member),
            target=member,
        )
        for member in group
    }


def is_constant(code: lrc.code.CodeLike, *, coordinate: int) -> bool:
    """
    Check whether a coordinate takes a single value over the code.

    Args:
        code: The code to consider.
        coordinate: The coordinate.

    Returns:
        True if all the codewords share the same symbol at the coordinate.
    """

    codebook = lrc.code.as_codebook(code)
    column = codebook.words[:, _check_target(codebook, coordinate)]

    return bool(np.all(column == column[0]))
