from __future__ import annotations

import enum
import math
from collections.abc import Sequence
from typing import NamedTuple

import jax_dataclasses
import numpy as np
from jax_dataclasses import Static

import lrcsim.api as lrc
import lrcsim.typing as ltp
from lrcsim import exceptions, logging
from lrcsim.utils import LrcDataclass

from .common import Verdict, all_passed


@enum.unique
class StrategyMode(enum.Enum):
    """
    How the sub-code algorithm chooses the coordinate and its repair set.
    """

    Auto = "auto"
    Forced = "forced"


@jax_dataclasses.pytree_dataclass
class Strategy(LrcDataclass):
    """
    The policy choosing the pair (i_j, S_j) at each step of the sub-code algorithm.

    Attributes:
        mode: `Auto` uses the canonical choice at every step, `Forced` replays
            the given steps first and continues with the canonical choice.
        forced_steps: The pairs (i_j, S_j) of the first steps.
    """

    mode: Static[StrategyMode] = StrategyMode.Auto
    forced_steps: Static[tuple[tuple[int, ltp.Coordinates], ...]] = ()

    @staticmethod
    def build(
        forced_steps: Sequence[tuple[int, ltp.CoordinatesLike]] | None = None,
    ) -> Strategy:
        """
        Build a strategy.

        Args:
            forced_steps: The optional pairs (i_j, S_j) to replay first.

        Returns:
            A forced strategy if steps are given, the automatic one otherwise.
        """

        if not forced_steps:
            return Strategy(mode=StrategyMode.Auto)

        steps = tuple(
            (int(i), tuple(sorted(int(c) for c in S))) for i, S in forced_steps
        )

        return Strategy(mode=StrategyMode.Forced, forced_steps=steps)


@jax_dataclasses.pytree_dataclass
class SubcodeStep(LrcDataclass):
    """
    A single iteration of the sub-code algorithm.

    Attributes:
        i: The coordinate i_j, outside of all the previous groups.
        S: The repair set S_j of i_j.
        T: The coordinates of S_j not fixed by the previous steps.
        sigma: The most frequent value of the codewords over S_j.
        size_after: The number of codewords of the sub-code C_j.
        patterns: The number of distinct values over S_j in C_{j-1}, if recorded.
        subcode: The sub-code C_j, retained only by verbose runs.
    """

    i: Static[int]
    S: Static[ltp.Coordinates]
    T: Static[ltp.Coordinates]
    sigma: Static[ltp.Word]
    size_after: Static[int]
    patterns: Static[int | None] = None
    subcode: lrc.code.Codebook | None = None

    @property
    def t(self) -> int:
        """The number of newly fixed coordinates."""

        return len(self.T)

    def group(self) -> ltp.Coordinates:
        """Return the group S_j + {i_j}."""

        return tuple(sorted(set(self.S) | {self.i}))


@jax_dataclasses.pytree_dataclass
class SubcodeTrace(LrcDataclass):
    """
    The history of a run of the sub-code algorithm.

    Attributes:
        steps: The steps, in execution order.
        ell: The largest j such that C_j has more than one codeword.
        R: The coordinates fixed after step ell.
    """

    steps: tuple[SubcodeStep, ...]
    ell: Static[int]
    R: Static[ltp.Coordinates]

    def sizes(self) -> tuple[int, ...]:
        """Return the sizes of the sub-codes C_1, C_2, ..."""

        return tuple(s.size_after for s in self.steps)

    def pairs(self) -> tuple[tuple[int, ltp.Coordinates], ...]:
        """Return the pairs (i_j, S_j) of all the steps."""

        return tuple((s.i, s.S) for s in self.steps)


def _choose_sigma(
    words: ltp.Words, coordinates: ltp.Coordinates, q: int
) -> tuple[int, ltp.Word, int]:

    keys = lrc.code.row_keys(words[:, list(coordinates)], q=q)
    values, first_index, counts = np.unique(keys, return_index=True, return_counts=True)

    # The unique keys are sorted, and so are the projections they encode:
    # argmax returns the lexicographically smallest among the most frequent.
    best = int(np.argmax(counts))
    sigma = tuple(int(s) for s in words[first_index[best], list(coordinates)])

    return values[best], sigma, int(values.size)


def run_subcode(
    code: lrc.code.SystematicCode,
    *,
    r: int,
    strategy: Strategy | None = None,
    verbose: bool = False,
) -> SubcodeTrace:
    """
    Run the algorithm that shrinks a code by fixing repair sets.

    Args:
        code: The systematic code, with information locality at most r.
        r: The locality.
        strategy: The policy choosing (i_j, S_j), the canonical one by default.
        verbose: Whether to retain the sub-codes in the trace.

    Returns:
        The trace of the run.

    Note:
        The canonical choice of i_j is the smallest information coordinate not in
        R_{j-1} that is not constant over C_{j-1}, paired with its canonical
        smallest repair set (never padded to size r). The value sigma_j is the
        most frequent projection, ties broken lexicographically.
    """

    if not isinstance(code, lrc.code.SystematicCode):
        raise TypeError("The sub-code algorithm needs a systematic code")

    if r < 1:
        raise exceptions.ShapeError(f"The locality must be positive, got {r}")

    strategy = strategy if strategy is not None else Strategy()

    if strategy.mode is StrategyMode.Auto and strategy.forced_steps:
        raise exceptions.InvalidStrategy("An automatic strategy has no forced steps")

    codebook = code.base
    mask = np.ones(codebook.size, dtype=bool)
    fixed: set[int] = set()
    steps: list[SubcodeStep] = []
    repair_sets: dict[int, ltp.Coordinates | None] = {}

    while mask.sum() > 1:

        j = len(steps) + 1
        current = codebook.words[mask]

        if j <= len(strategy.forced_steps):
            i, S = strategy.forced_steps[j - 1]
            S = lrc.code.check_coordinates(S, n=codebook.n)

            if (
                not 0 <= i < codebook.n
                or i in fixed
                or i in S
                or len(S) > r
                or not lrc.locality.determines(codebook, coordinates=S, target=i)
            ):
                msg = "The forced step {} (i={}, S={}) is not eligible"
                raise exceptions.InvalidStrategy(msg.format(j, i, S))

        else:
            candidates = (
                c
                for c in code.information_coordinates()
                if c not in fixed and not np.all(current[:, c] == current[0, c])
            )
            i = next(candidates, None)

            # Two distinct codewords differ on some information coordinate, and
            # they agree on all the fixed ones.
            if i is None:
                msg = "No eligible coordinate at step {} with {} codewords left"
                raise exceptions.InternalInvariantViolation(msg.format(j, len(current)))

            if i not in repair_sets:
                repair_sets[i] = lrc.locality.min_repair_set(
                    codebook, target=i, size_cap=min(r, codebook.n - 1)
                )

            S = repair_sets[i]

            if S is None:
                msg = "The coordinate {} has no repair set of size <= {}"
                raise exceptions.NoRepairSet(msg.format(i, r))

        sigma_key, sigma, patterns = _choose_sigma(current, S, codebook.q)

        all_keys = lrc.code.row_keys(codebook.words[:, list(S)], q=codebook.q)
        mask = mask & (all_keys == sigma_key)

        T = tuple(c for c in S if c not in fixed)
        fixed |= set(S) | {i}

        step = SubcodeStep(
            i=int(i),
            S=tuple(S),
            T=T,
            sigma=sigma,
            size_after=int(mask.sum()),
            patterns=patterns,
            subcode=codebook.restrict(mask) if verbose else None,
        )

        logging.debug(
            msg=f"Step {j}: i={step.i} S={step.S} T={step.T} sigma={step.sigma} "
            f"|C_{j}|={step.size_after}"
        )

        steps.append(step)

    if len(strategy.forced_steps) > len(steps):
        msg = "The code shrank to one codeword after {} of the {} forced steps"
        raise exceptions.InvalidStrategy(
            msg.format(len(steps), len(strategy.forced_steps))
        )

    ell = max(len(steps) - 1, 0)
    R = tuple(sorted({c for s in steps[:ell] for c in s.T + (s.i,)}))

    return SubcodeTrace(steps=tuple(steps), ell=ell, R=R)


def reverse_strategy(trace: SubcodeTrace) -> Strategy:
    """
    Build the strategy replaying the steps of a trace in reverse order.

    Args:
        trace: The trace to replay.

    Returns:
        The forced strategy.
    """

    return Strategy.build(forced_steps=trace.pairs()[::-1])


class BoundReport(NamedTuple):
    """
    The bound n >= k + ceil(k/r) + d - 2 on the block-length.

    Attributes:
        rhs: The right-hand side of the bound.
        holds: Whether n satisfies the bound.
        optimal: Whether n meets the bound with equality.
    """

    rhs: int
    holds: bool
    optimal: bool


def check_locality_bound(*, n: int, k: int, d: int, r: int) -> BoundReport:
    """
    Evaluate the bound on the block-length of codes with information locality.

    Args:
        n: The block-length.
        k: The dimension.
        d: The minimum distance.
        r: The information locality.

    Returns:
        The report of the bound.
    """

    if min(n, k, d, r) < 1 or not r <= k <= n:
        msg = "Invalid parameters n={}, k={}, d={}, r={}"
        raise exceptions.ShapeError(msg.format(n, k, d, r))

    rhs = k + math.ceil(k / r) + d - 2

    return BoundReport(rhs=rhs, holds=n >= rhs, optimal=n == rhs)


class TraceReport(NamedTuple):
    """
    The checks performed on a trace.

    Attributes:
        passed: Whether all the checks passed.
        checks: The verdict of each check, keyed by name.
    """

    passed: bool
    checks: dict[str, Verdict]


def check_trace_bound(trace: SubcodeTrace, *, k: int, r: int, q: int) -> TraceReport:
    """
    Check the inequalities that any run on a code with locality r satisfies.

    Args:
        trace: The trace of the run.
        k: The dimension of the code.
        r: The information locality.
        q: The size of the alphabet.

    Returns:
        The report with the checks "ell_lower_bound", "fixed_coordinates" and
        "averaging".
    """

    checks = {}

    ell_bound = math.ceil(k / r) - 1
    checks["ell_lower_bound"] = Verdict(
        passed=trace.ell >= ell_bound, detail={"ell": trace.ell, "bound": ell_bound}
    )

    total = sum(s.t for s in trace.steps)
    checks["fixed_coordinates"] = Verdict(
        passed=total >= k, detail={"sum_t": total, "k": k}
    )

    # |C_j| >= |C_{j-1}| / q^{t_j}
    offending = None
    previous = q**k

    for j, step in enumerate(trace.steps, start=1):
        if step.size_after * q**step.t < previous:
            offending = j
            break
        previous = step.size_after

    checks["averaging"] = Verdict(passed=offending is None, detail={"step": offending})

    return TraceReport(passed=all_passed(checks), checks=checks)


def verify_trace_tightness(
    trace: SubcodeTrace,
    *,
    k: int,
    r: int,
    q: int,
    n: int | None = None,
    d: int | None = None,
) -> TraceReport:
    """
    Check the equalities that every run on an optimal code satisfies.

    Args:
        trace: The trace of the run.
        k: The dimension of the code.
        r: The information locality, dividing k and smaller than k.
        q: The size of the alphabet.
        n: The optional block-length.
        d: The optional minimum distance.

    Returns:
        The report with the checks "t_equals_r", "ell", "sizes", "disjoint_groups"
        and "uniform_patterns", plus "singleton_tight" when n and d are given.
        Failing checks carry the offending step (1-based).
    """

    if r < 1 or k % r != 0 or r >= k:
        raise exceptions.ShapeError(f"Expected r | k and r < k, got k={k}, r={r}")

    checks = {}

    offending = next((j for j, s in enumerate(trace.steps, 1) if s.t != r), None)
    checks["t_equals_r"] = Verdict(
        passed=offending is None and len(trace.steps) > 0,
        detail={"step": offending, "t": [s.t for s in trace.steps]},
    )

    checks["ell"] = Verdict(
        passed=trace.ell == k // r - 1, detail={"ell": trace.ell, "expected": k // r - 1}
    )

    offending = next(
        (
            j
            for j, s in enumerate(trace.steps, 1)
            if k - r * j < 0 or s.size_after != q ** (k - r * j)
        ),
        None,
    )
    checks["sizes"] = Verdict(
        passed=offending is None and len(trace.steps) == k // r,
        detail={"step": offending, "sizes": list(trace.sizes())},
    )

    offending = None
    seen: set[int] = set()

    for j, step in enumerate(trace.steps, 1):
        group = set(step.group())
        if len(group) != r + 1 or not seen.isdisjoint(group):
            offending = j
            break
        seen |= group

    checks["disjoint_groups"] = Verdict(
        passed=offending is None,
        detail={"step": offending, "groups": [list(s.group()) for s in trace.steps]},
    )

    offending = next(
        (
            j
            for j, s in enumerate(trace.steps, 1)
            if s.patterns is not None and s.patterns != q**r
        ),
        None,
    )
    checks["uniform_patterns"] = Verdict(
        passed=offending is None, detail={"step": offending}
    )

    if n is not None and d is not None:
        checks["singleton_tight"] = Verdict(
            passed=n == k + trace.ell + d - 1,
            detail={"n": n, "k_plus_ell_plus_d_minus_1": k + trace.ell + d - 1},
        )

    report = TraceReport(passed=all_passed(checks), checks=checks)

    if not report.passed:
        failed = [name for name, v in checks.items() if not v.passed]
        logging.info(msg=f"Trace tightness failed: {failed}")

    return report


def independence_check(
    code: lrc.code.SystematicCode, *, sets: Sequence[ltp.CoordinatesLike]
) -> bool:
    """
    Check whether disjoint sets of coordinates jointly take all the q^k values.

    Args:
        code: The systematic code.
        sets: Pairwise disjoint sets with k coordinates in total.

    Returns:
        True if the projection onto their union is a bijection onto {0..q-1}^k.
    """

    union: list[int] = []

    for coordinates in sets:
        union.extend(lrc.code.check_coordinates(coordinates, n=code.n))

    if len(set(union)) != len(union):
        raise exceptions.ShapeError(f"The sets {list(sets)} overlap")

    if len(union) != code.k:
        msg = "The sets have {} coordinates, expected {}"
        raise exceptions.ShapeError(msg.format(len(union), code.k))

    return lrc.code.count_projections(code, sorted(union)) == code.q**code.k
