from collections.abc import Sequence

import jax
import numpy.typing as npt

# ===================
# Coding-theory types
# ===================

# A single codeword, one symbol per coordinate.
Word = tuple[int, ...]
WordLike = Sequence[int] | npt.NDArray

# All the codewords of a codebook, stacked by rows.
Words = npt.NDArray
WordsLike = Sequence[WordLike] | npt.NDArray | jax.Array

# A set of coordinates, always stored sorted.
Coordinates = tuple[int, ...]
CoordinatesLike = Sequence[int] | frozenset[int] | set[int]

# A word with erasures, `None` marking an erased position.
ErasedWord = tuple[int | None, ...]
