from __future__ import annotations

import math
from typing import NamedTuple

import jax
import jax.numpy as jnp
import jax_dataclasses
import numpy as np
import numpy.typing as npt
from jax_dataclasses import Static

import lrcsim.typing as ltp
from lrcsim import exceptions, logging
from lrcsim.config import get_limits
from lrcsim.math import PrimeField
from lrcsim.utils import LrcDataclass


@jax_dataclasses.pytree_dataclass
class Codebook(LrcDataclass):
    """
    An explicit, possibly non-linear, code over the alphabet {0, ..., q-1}.

    Attributes:
        words: The distinct codewords stacked by rows, sorted lexicographically.
        q: The size of the alphabet.

    Note:
        Always create codebooks with `Codebook.build`, which validates the words
        and establishes the canonical ordering.
    """

    words: ltp.Words
    q: Static[int]

    @staticmethod
    def build(words: ltp.WordsLike, *, q: int) -> Codebook:
        """
        Build a codebook from its codewords.

        Args:
            words: The codewords, in any order.
            q: The size of the alphabet.

        Returns:
            The codebook with its codewords in lexicographic order.
        """

        if isinstance(q, bool) or not isinstance(q, (int, np.integer)) or q < 2:
            raise exceptions.ShapeError(f"Invalid alphabet size '{q}'")

        try:
            array = np.asarray(words, dtype=np.int64)
        except (OverflowError, ValueError) as e:
            raise exceptions.ShapeError(f"Invalid codewords: {e}") from e

        if array.ndim != 2 or array.shape[0] == 0:
            raise exceptions.ShapeError(
                f"Expected a non-empty 2D array of codewords, got shape {array.shape}"
            )

        check_size(size=array.shape[0], length=array.shape[1])

        if array.size > 0 and (array.min() < 0 or array.max() >= q):
            raise exceptions.ShapeError(f"Found symbols outside of [0, {q - 1}]")

        # Sort lexicographically, the first coordinate being the primary key.
        array = array[np.lexsort(array.T[::-1])] if array.shape[1] > 0 else array

        if array.shape[0] > 1 and np.all(array[1:] == array[:-1], axis=1).any():
            raise exceptions.ShapeError("The codewords are not distinct")

        return Codebook(words=array, q=int(q))

    def __eq__(self, other: Codebook) -> bool:

        if not isinstance(other, Codebook):
            return False

        return self.q == other.q and np.array_equal(self.words, other.words)

    def __hash__(self) -> int:

        return hash((self.q, self.words.shape, self.words.tobytes()))

    # ==========
    # Properties
    # ==========

    @property
    def n(self) -> int:
        """The block-length."""

        return int(self.words.shape[1])

    @property
    def size(self) -> int:
        """The number K of codewords."""

        return int(self.words.shape[0])

    def dimension(self) -> int | None:
        """
        Return the dimension log_q(K) when it is an integer.

        Returns:
            The integer k such that K = q^k, or None.
        """

        return integer_log(self.size, base=self.q)

    def word(self, index: int) -> ltp.Word:
        """
        Return a codeword as a tuple of symbols.

        Args:
            index: The index of the codeword in the canonical order.

        Returns:
            The codeword.
        """

        return tuple(int(s) for s in self.words[index])

    def as_tuples(self) -> list[ltp.Word]:
        """Return all the codewords as tuples, in the canonical order."""

        return [tuple(int(s) for s in w) for w in self.words]

    # ==========
    # Sub-codes
    # ==========

    def restrict(self, mask: npt.NDArray) -> Codebook:
        """
        Return the sub-code made of the selected codewords.

        Args:
            mask: The boolean mask selecting the codewords.

        Returns:
            The sub-code, which keeps the canonical ordering.
        """

        mask = np.asarray(mask, dtype=bool)

        if mask.shape != (self.size,):
            raise exceptions.ShapeError(f"Expected a mask of {self.size} entries")

        if not mask.any():
            raise exceptions.ShapeError("A sub-code needs at least one codeword")

        return Codebook(words=self.words[mask], q=self.q)

    def puncture(self, coordinates: ltp.CoordinatesLike) -> Codebook:
        """
        Project the code onto the kept coordinates, dropping all the others.

        Args:
            coordinates: The coordinates to keep.

        Returns:
            The punctured code.

        Raises:
            ShapeError: If two codewords collapse, i.e. if the dropped coordinates
                were not constant over the code.
        """

        kept = check_coordinates(coordinates, n=self.n)
        return Codebook.build(words=self.words[:, list(kept)], q=self.q)


@jax_dataclasses.pytree_dataclass
class SystematicCode(LrcDataclass):
    """
    A codebook of size q^k whose first k coordinates range over all of {0..q-1}^k.

    Attributes:
        base: The underlying codebook.
        k: The dimension, i.e. the number of information coordinates.
    """

    base: Codebook
    k: Static[int]

    def __eq__(self, other: SystematicCode) -> bool:

        if not isinstance(other, SystematicCode):
            return False

        return self.k == other.k and self.base == other.base

    def __hash__(self) -> int:

        return hash((self.k, hash(self.base)))

    @property
    def q(self) -> int:
        return self.base.q

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def size(self) -> int:
        return self.base.size

    @property
    def words(self) -> ltp.Words:
        return self.base.words

    def information_coordinates(self) -> ltp.Coordinates:
        """Return the information coordinates 0, ..., k-1."""

        return tuple(range(self.k))

    def parity_coordinates(self) -> ltp.Coordinates:
        """Return the parity coordinates k, ..., n-1."""

        return tuple(range(self.k, self.n))

    def index_of(self, information: ltp.WordLike) -> int:
        """
        Return the index of the codeword carrying the given information symbols.

        Args:
            information: The k information symbols.

        Returns:
            The index of the codeword in the canonical order.

        Note:
            The codewords are sorted lexicographically and their prefixes are all
            distinct, therefore the index is the base-q value of the prefix.
        """

        information = np.asarray(information, dtype=np.int64)

        if information.shape != (self.k,):
            raise exceptions.ShapeError(f"Expected {self.k} information symbols")

        if information.size > 0 and (
            information.min() < 0 or information.max() >= self.q
        ):
            raise exceptions.ShapeError(f"Found symbols outside of [0, {self.q - 1}]")

        return int(row_keys(information[np.newaxis, :], q=self.q)[0])

    def encode(self, information: ltp.WordLike) -> ltp.Word:
        """
        Encode the information symbols.

        Args:
            information: The k information symbols.

        Returns:
            The codeword whose first k symbols are the information symbols.
        """

        return self.base.word(self.index_of(information))


CodeLike = Codebook | SystematicCode


def as_codebook(code: CodeLike) -> Codebook:
    """Return the codebook underlying either a codebook or a systematic code."""

    if isinstance(code, SystematicCode):
        return code.base

    if isinstance(code, Codebook):
        return code

    raise TypeError(f"Expected a code, got '{type(code).__name__}'")


# ================
# Helper functions
# ================


def integer_log(value: int, *, base: int) -> int | None:
    """
    Compute the exact logarithm of an integer.

    Args:
        value: The positive integer.
        base: The base, at least 2.

    Returns:
        The integer e with base^e = value, or None if it does not exist.
    """

    exponent, power = 0, 1

    while power < value:
        power *= base
        exponent += 1

    return exponent if power == value else None


def check_size(size: int, length: int) -> None:
    """
    Make sure that a codebook fits the configured limits.

    Args:
        size: The number of codewords.
        length: The block-length.
    """

    limits = get_limits()

    if size > limits.max_codewords:
        msg = "{} codewords exceed the limit of {}"
        raise exceptions.TooLarge(msg.format(size, limits.max_codewords))

    if size * length > limits.max_symbols:
        msg = "{} symbols exceed the limit of {}"
        raise exceptions.TooLarge(msg.format(size * length, limits.max_symbols))


def check_coordinates(coordinates: ltp.CoordinatesLike, *, n: int) -> ltp.Coordinates:
    """
    Validate a set of coordinates.

    Args:
        coordinates: The coordinates.
        n: The block-length.

    Returns:
        The coordinates as a sorted tuple.
    """

    coordinates = [int(c) for c in coordinates]

    if len(set(coordinates)) != len(coordinates):
        raise exceptions.ShapeError(f"Repeated coordinates in {coordinates}")

    if any(not 0 <= c < n for c in coordinates):
        raise exceptions.ShapeError(f"Coordinates {coordinates} outside of [0, {n})")

    return tuple(sorted(coordinates))


def row_keys(words: ltp.Words, *, q: int) -> npt.NDArray:
    """
    Encode each row as the integer whose base-q digits are its symbols.

    Args:
        words: The rows to encode.
        q: The size of the alphabet.

    Returns:
        The keys, which preserve the lexicographic order of the rows.
    """

    words = np.asarray(words)
    n = words.shape[1]

    if n == 0:
        return np.zeros(words.shape[0], dtype=np.int64)

    if q**n < 2**63:
        radix = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
        return words.astype(np.int64) @ radix

    # Python integers do not overflow.
    radix = np.array([q**e for e in range(n - 1, -1, -1)], dtype=object)
    return words.astype(object) @ radix


def count_projections(code: CodeLike, coordinates: ltp.CoordinatesLike) -> int:
    """
    Count the distinct values taken by the codewords on some coordinates.

    Args:
        code: The code to consider.
        coordinates: The coordinates to project onto.

    Returns:
        The number of distinct projections.
    """

    codebook = as_codebook(code)
    projection = codebook.words[:, list(coordinates)]

    return int(np.unique(row_keys(projection, q=codebook.q)).size)


# ==================
# Distance functions
# ==================


def hamming_distance(x: ltp.WordLike, y: ltp.WordLike) -> int:
    """
    Compute the Hamming distance between two words.

    Args:
        x: The first word.
        y: The second word.

    Returns:
        The number of coordinates where the words differ.
    """

    x = jnp.atleast_1d(jnp.asarray(x, dtype=jnp.int32))
    y = jnp.atleast_1d(jnp.asarray(y, dtype=jnp.int32))

    if x.shape != y.shape or x.ndim != 1:
        raise exceptions.ShapeError(f"Incompatible words of shape {x.shape}, {y.shape}")

    return int(jnp.sum(x != y))


@jax.jit
def _min_pairwise_distance(words: jax.Array) -> jax.Array:

    size, n = words.shape
    indices = jnp.arange(size)

    def min_distance_from_row(i: jax.Array) -> jax.Array:
        distances = jnp.sum(words != words[i], axis=1)
        # Only pairs (i, j) with j > i, each unordered pair once.
        return jnp.min(jnp.where(indices > i, distances, n + 1))

    return jnp.min(jax.lax.map(min_distance_from_row, indices))


def min_distance(code: CodeLike) -> int:
    """
    Compute the minimum distance of a code by scanning all the pairs of codewords.

    Args:
        code: The code to consider.

    Returns:
        The minimum Hamming distance between two distinct codewords.
    """

    codebook = as_codebook(code)

    if codebook.size < 2:
        raise exceptions.DegenerateCode("The minimum distance needs two codewords")

    d = int(_min_pairwise_distance(jnp.asarray(codebook.words, dtype=jnp.int32)))
    logging.debug(msg=f"Minimum distance of a ({codebook.n}, {codebook.size}) code: {d}")

    return d


class SingletonReport(NamedTuple):
    """
    Both sides of the Singleton bound n >= log_q(K) + d - 1.

    Attributes:
        lhs: The block-length n.
        rhs: The right-hand side, an integer when K is a power of q.
        holds: Whether the bound holds, decided with exact integer arithmetic.
        slack: The difference lhs - rhs.
    """

    lhs: int
    rhs: int | float
    holds: bool
    slack: int | float


def check_singleton(code: CodeLike) -> SingletonReport:
    """
    Evaluate the Singleton bound on a code.

    Args:
        code: The code to consider.

    Returns:
        The report with both sides of the bound.
    """

    codebook = as_codebook(code)
    d = min_distance(codebook)
    n, q, size = codebook.n, codebook.q, codebook.size

    k = codebook.dimension()
    rhs = k + d - 1 if k is not None else math.log(size, q) + d - 1

    # log_q(K) <= n - d + 1  <=>  K <= q^(n - d + 1)
    holds = size <= q ** (n - d + 1)

    return SingletonReport(lhs=n, rhs=rhs, holds=holds, slack=n - rhs)


class ProjectionReport(NamedTuple):
    """
    Outcome of the projection of a code onto a set of coordinates.

    Attributes:
        bijective: Whether the projection hits every value exactly once.
        counterexample: Two codewords with the same projection, if any.
    """

    bijective: bool
    counterexample: tuple[ltp.Word, ltp.Word] | None


def mds_projection_check(
    code: CodeLike, *, coordinates: ltp.CoordinatesLike
) -> ProjectionReport:
    """
    Check whether the projection onto k coordinates is a bijection onto {0..q-1}^k.

    Args:
        code: The code to consider, with K = q^k codewords.
        coordinates: The k coordinates to project onto.

    Returns:
        The report, with two colliding codewords when the projection is not bijective.
    """

    codebook = as_codebook(code)
    k = codebook.dimension()

    if k is None:
        raise exceptions.NonIntegralDimension(
            f"{codebook.size} codewords is not a power of {codebook.q}"
        )

    coordinates = check_coordinates(coordinates, n=codebook.n)

    if len(coordinates) != k:
        msg = "Expected {} coordinates, got {}"
        raise exceptions.ShapeError(msg.format(k, len(coordinates)))

    keys = row_keys(codebook.words[:, list(coordinates)], q=codebook.q)

    # K = q^k codewords hit all the q^k values iff the keys are distinct.
    order = np.argsort(keys, kind="stable")
    collisions = np.flatnonzero(keys[order][1:] == keys[order][:-1])

    if collisions.size == 0:
        return ProjectionReport(bijective=True, counterexample=None)

    first, second = sorted((order[collisions[0]], order[collisions[0] + 1]))

    return ProjectionReport(
        bijective=False,
        counterexample=(codebook.word(first), codebook.word(second)),
    )


def is_mds(code: CodeLike) -> bool:
    """
    Check whether a code meets the Singleton bound with equality.

    Args:
        code: The code to consider, with K = q^k codewords.

    Returns:
        True if n = k + d - 1.
    """

    codebook = as_codebook(code)
    k = codebook.dimension()

    if k is None:
        raise exceptions.NonIntegralDimension(
            f"{codebook.size} codewords is not a power of {codebook.q}"
        )

    return codebook.n == k + min_distance(codebook) - 1


def systematic_from_codebook(code: CodeLike, *, k: int) -> SystematicCode:
    """
    Wrap a codebook whose first k coordinates are information symbols.

    Args:
        code: The codebook to wrap.
        k: The dimension.

    Returns:
        The systematic code.
    """

    codebook = as_codebook(code)

    if k < 0 or k > codebook.n or codebook.size != codebook.q**k:
        raise exceptions.NonIntegralDimension(
            f"The code has {codebook.size} codewords, expected {codebook.q}^{k}"
        )

    # The prefix keys of a lexicographically sorted code are non-decreasing,
    # thus they are a bijection iff they are exactly 0, 1, ..., q^k - 1.
    prefix_keys = row_keys(codebook.words[:, :k], q=codebook.q)

    if not np.array_equal(prefix_keys, np.arange(codebook.size)):
        raise exceptions.NotSystematic(
            f"The first {k} coordinates do not determine the codewords"
        )

    return SystematicCode(base=codebook, k=int(k))


def is_additively_closed(code: CodeLike, block_size: int = 64) -> bool:
    """
    Check whether a code over a prime field is closed under addition.

    Args:
        code: The code to consider, with q prime.
        block_size: The number of codewords processed at once.

    Returns:
        True if x + y belongs to the code for all codewords x and y.
    """

    codebook = as_codebook(code)
    _ = PrimeField(p=codebook.q)

    keys = row_keys(codebook.words, q=codebook.q)

    for start in range(0, codebook.size, block_size):

        block = codebook.words[start : start + block_size]
        sums = (block[:, np.newaxis, :] + codebook.words[np.newaxis, :, :]) % codebook.q
        sum_keys = row_keys(sums.reshape(-1, codebook.n), q=codebook.q)

        if not np.isin(sum_keys, keys).all():
            return False

    return True
