from __future__ import annotations

import itertools
from collections.abc import Sequence
from typing import NamedTuple

import numpy as np

import lrcsim.api as lrc
import lrcsim.typing as ltp
from lrcsim import exceptions, logging

from .common import Verdict, all_passed


class Partition(NamedTuple):
    """
    The normal form of the coordinates of an optimal code.

    Attributes:
        I: The information groups, each made of r coordinates.
        L: The light parities, the j-th one being determined by the j-th group.
        H: The heavy parities, i.e. all the remaining coordinates.
    """

    I: tuple[ltp.Coordinates, ...]
    L: ltp.Coordinates
    H: ltp.Coordinates

    def information(self) -> ltp.Coordinates:
        """Return the union of the information groups."""

        return tuple(sorted(c for group in self.I for c in group))


class StructureReport(NamedTuple):
    """
    The verdicts of the structure verification of a code.

    Attributes:
        optimal: Whether the code meets the locality bound with equality.
        groups: The distinct repair groups S + {i} of the information coordinates.
        partition: The normal form found, if any.
        items: The verdict of each verified item, keyed by item id.
        heavy_bound: The lower bound k - (k/r - 1)(d - 3) on the heavy localities.
    """

    optimal: bool
    groups: tuple[ltp.Coordinates, ...]
    partition: Partition | None
    items: dict[str, Verdict]
    heavy_bound: int

    def passed(self) -> bool:
        """Return True if all the items passed."""

        return all_passed(self.items)


# ===============
# Dependency maps
# ===============


def _information_cube(code: lrc.code.SystematicCode, target: int) -> np.ndarray:

    if not isinstance(code, lrc.code.SystematicCode):
        raise TypeError("The dependency analysis needs a systematic code")

    if not 0 <= target < code.n:
        raise exceptions.ShapeError(f"Coordinate {target} outside of [0, {code.n})")

    # Codewords are sorted by their information prefix, hence the row index
    # is the base-q integer of the encoder input.
    return code.words[:, target].reshape((code.q,) * code.k)


def dependency_set(code: lrc.code.SystematicCode, *, target: int) -> ltp.Coordinates:
    """
    Find the information coordinates a coordinate depends on.

    Args:
        code: The systematic code.
        target: The coordinate.

    Returns:
        The information coordinates i for which two encoder inputs differing
        only at i have encodings differing at the target.
    """

    cube = _information_cube(code, target)

    return tuple(
        i for i in range(code.k) if bool(np.any(np.diff(cube, axis=i) != 0))
    )


def heavy_dependency_check(
    code: lrc.code.SystematicCode,
    *,
    h: int,
    groups: Sequence[ltp.CoordinatesLike],
) -> bool:
    """
    Check whether every change of a single information symbol changes a coordinate.

    Args:
        code: The systematic code.
        h: The parity coordinate.
        groups: The information groups of the code.

    Returns:
        True if, for every pair of encoder inputs differing in exactly one
        information coordinate, the encodings differ at h.
    """

    members: set[int] = set()

    for group in groups:
        group = lrc.code.check_coordinates(group, n=code.n)

        if not members.isdisjoint(group):
            raise exceptions.ShapeError(f"The groups {list(groups)} overlap")

        members |= set(group)

    if h in members:
        raise exceptions.ShapeError(f"The coordinate {h} belongs to a light group")

    cube = _information_cube(code, h)

    # Along each axis, the q symbols of every fiber must be pairwise distinct.
    for axis in range(code.k):
        fibers = np.sort(cube, axis=axis)

        if np.any(np.diff(fibers, axis=axis) == 0):
            return False

    return True


# =============
# Repair groups
# =============


def _minimal_repair_sets(
    code: lrc.code.SystematicCode, *, target: int, r: int
) -> list[ltp.Coordinates]:

    minimal: list[ltp.Coordinates] = []

    # Subsets come before their supersets in the canonical order.
    for S in lrc.locality.repair_sets(code, target=target, size_cap=r):
        if not any(set(m) <= set(S) for m in minimal):
            minimal.append(S)

    return minimal


def _normal_form(
    code: lrc.code.SystematicCode,
    *,
    groups: tuple[ltp.Coordinates, ...],
    r: int,
    trace: lrc.subcode.SubcodeTrace | None,
) -> tuple[Partition | None, str | None]:

    candidates: list[tuple[str, list[ltp.Coordinates], list[int]]] = []

    parities = [[c for c in g if c >= code.k] for g in groups]

    if all(len(p) == 1 for p in parities):
        candidates.append(
            (
                "natural",
                [tuple(c for c in g if c != p[0]) for g, p in zip(groups, parities)],
                [p[0] for p in parities],
            )
        )

    if trace is not None and {s.group() for s in trace.steps} == set(groups):
        candidates.append(
            ("trace", [s.S for s in trace.steps], [s.i for s in trace.steps])
        )

    for source, information, light in candidates:

        if any(len(I) != r for I in information):
            continue

        if not lrc.subcode.independence_check(code, sets=information):
            continue

        if not all(
            lrc.locality.determines(code, coordinates=I, target=l)
            for I, l in zip(information, light)
        ):
            continue

        covered = set(light).union(*information)
        heavy = tuple(c for c in range(code.n) if c not in covered)

        order = np.argsort([min(I) for I in information])
        partition = Partition(
            I=tuple(tuple(information[j]) for j in order),
            L=tuple(int(light[j]) for j in order),
            H=heavy,
        )

        return partition, source

    return None, None


def _check_hypotheses(
    code: lrc.code.SystematicCode, *, r: int
) -> tuple[int, dict[int, list[ltp.Coordinates]]]:

    if not isinstance(code, lrc.code.SystematicCode):
        raise TypeError("The structure verification needs a systematic code")

    k, n = code.k, code.n

    if r < 1 or r >= k or k % r != 0:
        raise exceptions.NotApplicable(f"Expected r | k and r < k, got k={k}, r={r}")

    d = lrc.code.min_distance(code)

    if d < 2:
        raise exceptions.NotApplicable(f"The distance {d} is smaller than 2")

    bound = lrc.subcode.check_locality_bound(n=n, k=k, d=d, r=r)

    if not bound.optimal:
        msg = "The code is not optimal: n={} while the bound is {}"
        raise exceptions.NotApplicable(msg.format(n, bound.rhs))

    minimal = {
        i: _minimal_repair_sets(code, target=i, r=r)
        for i in code.information_coordinates()
    }

    missing = [i for i, sets in minimal.items() if not sets]

    if missing:
        msg = "The coordinates {} have no repair set of size <= {}"
        raise exceptions.NotApplicable(msg.format(missing, r))

    return d, minimal


def verify_theorem4(code: lrc.code.SystematicCode, *, r: int) -> StructureReport:
    """
    Verify the structure shared by all the optimal codes with information locality r.

    Args:
        code: The systematic code.
        r: The information locality, dividing k and smaller than k.

    Returns:
        The report with the items "t4_1" (minimal repair sets have size r),
        "t4_2" (repair groups are reversible), "t4_3" (repair groups are equal
        or disjoint) and "t4_4" (a normal form I/L/H exists).

    Raises:
        NotApplicable: If the code is not optimal or has locality larger than r.
    """

    d, minimal = _check_hypotheses(code, r=r)
    k = code.k

    items: dict[str, Verdict] = {}

    wrong_size = [
        {"i": i, "S": list(S)} for i, sets in minimal.items() for S in sets if len(S) != r
    ]
    items["t4_1"] = Verdict(
        passed=not wrong_size,
        detail={
            "checked": sum(len(s) for s in minimal.values()),
            "counterexamples": wrong_size,
        },
    )

    groups = tuple(
        sorted({tuple(sorted(S + (i,))) for i, sets in minimal.items() for S in sets})
    )

    not_reversible = []

    for group in groups:
        verdicts = lrc.locality.reversibility_check(code, group=group)
        failing = [member for member, ok in verdicts.items() if not ok]

        if failing:
            not_reversible.append({"group": list(group), "members": failing})

    items["t4_2"] = Verdict(
        passed=not not_reversible, detail={"counterexamples": not_reversible}
    )

    overlapping = [
        {"groups": [list(a), list(b)]}
        for a, b in itertools.combinations(groups, 2)
        if not set(a).isdisjoint(b)
    ]
    items["t4_3"] = Verdict(
        passed=not overlapping, detail={"counterexamples": overlapping}
    )

    partition, source, reason = None, None, None

    if overlapping:
        reason = "overlapping repair groups"

    elif len(groups) != k // r:
        reason = f"found {len(groups)} repair groups, expected {k // r}"

    else:
        trace = lrc.subcode.run_subcode(code, r=r)
        partition, source = _normal_form(code, groups=groups, r=r, trace=trace)

        if partition is None:
            reason = "no independent choice of information groups"

        elif len(partition.H) != d - 2:
            reason = f"found {len(partition.H)} heavy parities, expected {d - 2}"

    items["t4_4"] = Verdict(
        passed=partition is not None and reason is None,
        detail={"source": source, "reason": reason},
    )

    report = StructureReport(
        optimal=True,
        groups=groups,
        partition=partition,
        items=items,
        heavy_bound=k - (k // r - 1) * (d - 3),
    )

    logging.debug(msg=f"Verdicts: { {n: v.passed for n, v in items.items()} }")

    return report


def verify_theorem5(code: lrc.code.SystematicCode, *, r: int) -> StructureReport:
    """
    Verify the light and heavy parities of an optimal code with small distance.

    Args:
        code: The systematic code.
        r: The information locality, dividing k and smaller than k.

    Returns:
        The report with the items of `verify_theorem4` and the items "t5_1"
        (light parities depend on disjoint groups of size r), "t5_2" (heavy
        parities depend on every information symbol), "t5_3" (light parities
        have locality exactly r) and "t5_4" (heavy parities have locality at
        least the heavy bound).

    Raises:
        NotApplicable: If the hypotheses of `verify_theorem4` are not met, or if
            d >= r + 3.
    """

    d = lrc.code.min_distance(code) if isinstance(code, lrc.code.SystematicCode) else 0

    if d >= r + 3:
        raise exceptions.NotApplicable(f"The distance {d} is at least r + 3 = {r + 3}")

    report = verify_theorem4(code, r=r)
    partition = report.partition
    items = dict(report.items)

    if partition is None:
        missing = Verdict(passed=False, detail={"reason": "no normal form"})
        items.update({f"t5_{j}": missing for j in range(1, 5)})
        return report._replace(items=items)

    dependencies = [dependency_set(code, target=l) for l in partition.L]
    seen = [c for deps in dependencies for c in deps]

    items["t5_1"] = Verdict(
        passed=all(len(deps) == r for deps in dependencies)
        and len(set(seen)) == len(seen),
        detail={
            "light": list(partition.L),
            "dependencies": [list(deps) for deps in dependencies],
        },
    )

    not_dependent = [
        h
        for h in partition.H
        if not heavy_dependency_check(code, h=h, groups=partition.I)
    ]
    items["t5_2"] = Verdict(passed=not not_dependent, detail={"h": not_dependent})

    localities = [
        lrc.locality.locality_of(code, target=l, size_cap=r) for l in partition.L
    ]
    items["t5_3"] = Verdict(
        passed=all(locality == r for locality in localities),
        detail={"light": list(partition.L), "localities": localities},
    )

    # A repair set smaller than the bound would falsify the item.
    cap = min(report.heavy_bound - 1, code.n - 1)
    witnesses = [
        (
            lrc.locality.min_repair_set(code, target=h, size_cap=cap)
            if cap >= 0
            else None
        )
        for h in partition.H
    ]
    items["t5_4"] = Verdict(
        passed=all(w is None for w in witnesses),
        detail={
            "bound": report.heavy_bound,
            "h": list(partition.H),
            "witness": [list(w) if w is not None else None for w in witnesses],
        },
    )

    return report._replace(items=items)


# =========
# Sub-codes
# =========


def light_group_subcode(
    code: lrc.code.SystematicCode,
    report: StructureReport,
    *,
    group: int,
    sigmas: Sequence[ltp.WordLike],
) -> lrc.code.Codebook:
    """
    Fix all the information groups but one and drop the fixed coordinates.

    Args:
        code: The systematic code.
        report: The structure report of the code, with a normal form.
        group: The index of the information group left free.
        sigmas: The values of the other information groups, in order.

    Returns:
        The code on the coordinates of the free group, its light parity and the
        heavy parities. It has q^r codewords when the code is optimal.
    """

    partition = report.partition

    if partition is None:
        raise exceptions.NotApplicable("The report has no normal form")

    if not 0 <= group < len(partition.I):
        raise exceptions.ShapeError(f"Group {group} outside of [0, {len(partition.I)})")

    others = [I for j, I in enumerate(partition.I) if j != group]

    if len(sigmas) != len(others):
        msg = "Expected {} values, one per fixed group, got {}"
        raise exceptions.ShapeError(msg.format(len(others), len(sigmas)))

    mask = np.ones(code.size, dtype=bool)

    for I, sigma in zip(others, sigmas):
        sigma = np.asarray(sigma, dtype=np.int64)

        if sigma.shape != (len(I),):
            raise exceptions.ShapeError(f"Expected {len(I)} symbols, got {sigma}")

        mask &= np.all(code.words[:, list(I)] == sigma, axis=1)

    kept = partition.I[group] + (partition.L[group],) + partition.H

    return code.base.restrict(mask).puncture(kept)


def reverse_subcode(
    code: lrc.code.SystematicCode, *, trace: lrc.subcode.SubcodeTrace, r: int
) -> lrc.code.Codebook:
    """
    Replay a trace in reverse order and extract the last non-trivial sub-code.

    Args:
        code: The systematic code the trace was recorded on.
        trace: The trace to replay.
        r: The information locality.

    Returns:
        The sub-code after ell reversed steps, restricted to its unfixed
        coordinates.
    """

    replay = lrc.subcode.run_subcode(
        code, r=r, strategy=lrc.subcode.reverse_strategy(trace), verbose=True
    )

    if replay.ell == 0:
        return code.base

    fixed = {c for step in replay.steps[: replay.ell] for c in step.group()}
    kept = [c for c in range(code.n) if c not in fixed]

    return replay.steps[replay.ell - 1].subcode.puncture(kept)
