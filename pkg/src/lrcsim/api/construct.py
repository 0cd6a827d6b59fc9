from __future__ import annotations

import jax
import jax_dataclasses
import numpy as np
import numpy.typing as npt
from jax_dataclasses import Static

import lrcsim.api as lrc
import lrcsim.typing as ltp
from lrcsim import exceptions, logging
from lrcsim.math import PrimeField, systematic_mds_generator
from lrcsim.utils import LrcDataclass

# ==============
# Specifications
# ==============


@jax_dataclasses.pytree_dataclass
class RsMdsSpec(LrcDataclass):
    """
    The parameters of a systematic Reed-Solomon code.

    Attributes:
        q: The prime size of the alphabet.
        k: The dimension.
        d: The minimum distance, the code having length k + d - 1.
    """

    q: Static[int]
    k: Static[int]
    d: Static[int]


@jax_dataclasses.pytree_dataclass
class PyramidSpec(LrcDataclass):
    """
    The parameters of a Pyramid code.

    Attributes:
        q: The prime size of the alphabet.
        k: The dimension.
        r: The size of the information groups, dividing k.
        d: The minimum distance.
    """

    q: Static[int]
    k: Static[int]
    r: Static[int]
    d: Static[int]

    def validate(self) -> None:
        """
        Make sure that the parameters describe a Pyramid code.

        Raises:
            InvalidSpec: If the parameters are not valid.
            AlphabetTooSmall: If no Reed-Solomon code of length k + d - 1 exists.
        """

        if self.k < 1 or self.r < 1 or self.r > self.k or self.k % self.r != 0:
            msg = "The group size r={} must divide k={}"
            raise exceptions.InvalidSpec(msg.format(self.r, self.k))

        # The distance of a code with information locality is at least 2.
        if self.d < 2:
            raise exceptions.InvalidSpec(f"The distance must be at least 2, got {self.d}")

        try:
            _ = PrimeField(p=self.q)
        except exceptions.NotPrime as e:
            raise exceptions.InvalidSpec(str(e)) from e

        if self.q < self.k + self.d - 1:
            msg = "GF({}) is too small for a code of length {}"
            raise exceptions.AlphabetTooSmall(msg.format(self.q, self.k + self.d - 1))

    def length(self) -> int:
        """Return the block-length n = k + k/r + d - 2."""

        return self.k + self.k // self.r + self.d - 2


@jax_dataclasses.pytree_dataclass
class TwistSpec(LrcDataclass):
    """
    Coordinate-wise permutations of the alphabet.

    Attributes:
        perms: One permutation of {0, ..., q-1} per coordinate.
        seed: The seed the permutations were drawn from, if any.
    """

    perms: Static[tuple[tuple[int, ...], ...]]
    seed: Static[int | None] = None

    @staticmethod
    def from_seed(seed: int, *, q: int, n: int) -> TwistSpec:
        """
        Draw the permutations from a seed.

        Args:
            seed: The seed.
            q: The size of the alphabet.
            n: The block-length.

        Returns:
            The twist specification.

        Note:
            The permutation of coordinate j is drawn with the threefry key
            obtained by folding j into the key of the seed, therefore it does
            not depend on n.
        """

        key = jax.random.PRNGKey(seed)

        perms = tuple(
            tuple(
                int(s)
                for s in np.asarray(
                    jax.random.permutation(jax.random.fold_in(key, j), q)
                )
            )
            for j in range(n)
        )

        return TwistSpec(perms=perms, seed=int(seed))

    @staticmethod
    def identity(*, q: int, n: int) -> TwistSpec:
        """Return the twist leaving every code unchanged."""

        return TwistSpec(perms=tuple(tuple(range(q)) for _ in range(n)))

    def validate(self, *, q: int, n: int) -> None:
        """
        Make sure that the twist applies to codes with the given shape.

        Args:
            q: The size of the alphabet.
            n: The block-length.
        """

        if len(self.perms) != n:
            msg = "The twist has {} permutations, the code {} coordinates"
            raise exceptions.ShapeError(msg.format(len(self.perms), n))

        for j, perm in enumerate(self.perms):
            if sorted(perm) != list(range(q)):
                msg = "The entry {} is not a permutation of [0, {}]"
                raise exceptions.ShapeError(msg.format(j, q - 1))


ConstructionSpec = RsMdsSpec | PyramidSpec

# ========
# Builders
# ========


def _systematic_code(*, q: int, parity: npt.NDArray) -> lrc.code.SystematicCode:

    m, k = parity.shape
    lrc.code.check_size(size=q**k, length=k + m)

    # All the information vectors, in lexicographic order.
    information = np.indices((q,) * k).reshape(k, -1).T.astype(np.int64)
    words = np.hstack([information, information @ parity.T.astype(np.int64) % q])

    codebook = lrc.code.Codebook.build(words=words, q=q)

    return lrc.code.systematic_from_codebook(codebook, k=k)


def build_rs_mds(*, q: int, k: int, d: int) -> lrc.code.SystematicCode:
    """
    Build a systematic Reed-Solomon code, which is MDS.

    Args:
        q: The prime size of the alphabet.
        k: The dimension.
        d: The minimum distance.

    Returns:
        The code with length k + d - 1 and minimum distance d.
    """

    if k < 1:
        raise exceptions.InvalidSpec(f"The dimension must be positive, got {k}")

    if d < 2:
        raise exceptions.InvalidSpec(f"The distance must be at least 2, got {d}")

    coefficients = systematic_mds_generator(p=q, k=k, m=d - 1)

    logging.debug(msg=f"Building the RS code q={q}, k={k}, d={d}")

    return _systematic_code(q=q, parity=coefficients)


def pyramid_parity_matrix(spec: PyramidSpec) -> npt.NDArray:
    """
    Compute the parity coefficients of a Pyramid code.

    Args:
        spec: The parameters of the code, with r < k.

    Returns:
        The `(k/r + d - 2, k)` matrix whose rows are the light parities, one per
        information group, followed by the heavy parities.

    Note:
        The light parities split the first parity of the Reed-Solomon code of
        length k + d - 1 over the consecutive groups of r information symbols.
    """

    spec.validate()

    coefficients = systematic_mds_generator(p=spec.q, k=spec.k, m=spec.d - 1)

    light = np.zeros((spec.k // spec.r, spec.k), dtype=np.int64)

    for g in range(spec.k // spec.r):
        group = slice(g * spec.r, (g + 1) * spec.r)
        light[g, group] = coefficients[0, group]

    return np.vstack([light, coefficients[1:]])


def build_pyramid(spec: PyramidSpec) -> lrc.code.SystematicCode:
    """
    Build a Pyramid code, an optimal code with information locality r.

    Args:
        spec: The parameters of the code.

    Returns:
        The code with coordinates ordered as information symbols, light parities
        and heavy parities.
    """

    spec.validate()

    if spec.r == spec.k:
        return build_rs_mds(q=spec.q, k=spec.k, d=spec.d)

    logging.debug(msg=f"Building the Pyramid code {spec}")

    return _systematic_code(q=spec.q, parity=pyramid_parity_matrix(spec))


def build(spec: ConstructionSpec) -> lrc.code.SystematicCode:
    """
    Build the code described by a construction specification.

    Args:
        spec: The specification.

    Returns:
        The systematic code.
    """

    match spec:

        case PyramidSpec():
            return build_pyramid(spec)

        case RsMdsSpec():
            return build_rs_mds(q=spec.q, k=spec.k, d=spec.d)

        case _:
            raise exceptions.InvalidSpec(f"Unknown construction '{spec}'")


def twist(code: lrc.code.CodeLike, spec: TwistSpec) -> lrc.code.CodeLike:
    """
    Apply a permutation of the alphabet to each coordinate.

    Args:
        code: The code to twist.
        spec: The permutations.

    Returns:
        The twisted code, systematic if the input code is.
    """

    codebook = lrc.code.as_codebook(code)
    spec.validate(q=codebook.q, n=codebook.n)

    perms = np.array(spec.perms, dtype=np.int64).reshape(codebook.n, codebook.q)
    words = perms[np.arange(codebook.n)[np.newaxis, :], codebook.words]

    twisted = lrc.code.Codebook.build(words=words, q=codebook.q)

    # The information symbols are permuted bijectively, hence the twisted code
    # is still systematic on the same coordinates.
    if isinstance(code, lrc.code.SystematicCode):
        return code.replace(base=twisted, validate=True)

    return twisted


def build_nonreversible_example() -> lrc.code.Codebook:
    """
    Build the binary code whose third symbol is the AND of the first two.

    Returns:
        The code {000, 010, 100, 111}, where {1, 2} determine 3 but {2, 3} do
        not determine 1 (1-based).
    """

    return lrc.code.Codebook.build(
        words=[[0, 0, 0], [0, 1, 0], [1, 0, 0], [1, 1, 1]], q=2
    )


def pad_with_duplicate(
    code: lrc.code.SystematicCode, *, coordinate: int
) -> lrc.code.SystematicCode:
    """
    Append a copy of a parity coordinate, producing a non-optimal code.

    Args:
        code: The systematic code.
        coordinate: The parity coordinate to duplicate.

    Returns:
        The code with n + 1 coordinates.
    """

    if not code.k <= coordinate < code.n:
        raise exceptions.ShapeError(f"{coordinate} is not a parity coordinate")

    words = np.hstack([code.words, code.words[:, [coordinate]]])
    return code.replace(base=lrc.code.Codebook.build(words=words, q=code.q))


def light_parity_coordinates(spec: PyramidSpec) -> ltp.Coordinates:
    """Return the coordinates of the light parities of a Pyramid code."""

    spec.validate()

    if spec.r == spec.k:
        return ()

    return tuple(range(spec.k, spec.k + spec.k // spec.r))
