from __future__ import annotations

import enum
from typing import NamedTuple

import jax_dataclasses
import numpy as np
from jax_dataclasses import Static

import lrcsim.api as lrc
import lrcsim.typing as ltp
from lrcsim import exceptions, logging
from lrcsim.utils import LrcDataclass


@jax_dataclasses.pytree_dataclass
class ErasurePattern(LrcDataclass):
    """
    A received word in which some symbols were erased.

    Attributes:
        word: The symbols, None marking the erased positions.
    """

    word: Static[ltp.ErasedWord]

    @staticmethod
    def build(word: ltp.ErasedWord | list[int | None]) -> ErasurePattern:
        """
        Build an erasure pattern.

        Args:
            word: The symbols, None marking the erased positions.

        Returns:
            The erasure pattern.
        """

        symbols = []

        for symbol in word:
            if symbol is not None and (
                isinstance(symbol, bool) or not isinstance(symbol, (int, np.integer))
            ):
                raise exceptions.ShapeError(f"Invalid symbol '{symbol}'")

            symbols.append(None if symbol is None else int(symbol))

        return ErasurePattern(word=tuple(symbols))

    @staticmethod
    def erase(word: ltp.WordLike, *, erased: ltp.CoordinatesLike) -> ErasurePattern:
        """
        Erase some coordinates of a codeword.

        Args:
            word: The codeword.
            erased: The coordinates to erase.

        Returns:
            The erasure pattern.
        """

        erased = set(lrc.code.check_coordinates(erased, n=len(word)))

        return ErasurePattern.build(
            [None if c in erased else int(s) for c, s in enumerate(word)]
        )

    @property
    def n(self) -> int:
        return len(self.word)

    def erased(self) -> ltp.Coordinates:
        """Return the erased coordinates."""

        return tuple(c for c, s in enumerate(self.word) if s is None)

    def known(self) -> ltp.Coordinates:
        """Return the coordinates that were not erased."""

        return tuple(c for c, s in enumerate(self.word) if s is not None)

    def validate(self, *, q: int, n: int) -> None:
        """
        Make sure that the pattern fits a code.

        Args:
            q: The size of the alphabet.
            n: The block-length.
        """

        if self.n != n:
            msg = "The pattern has {} symbols, the code {} coordinates"
            raise exceptions.ShapeError(msg.format(self.n, n))

        if any(s is not None and not 0 <= s < q for s in self.word):
            raise exceptions.ShapeError(f"Symbols of {self.word} outside of [0, {q})")


class RecoveryStatus(enum.Enum):
    """The outcome of the recovery of an erasure pattern."""

    Unique = "unique"
    Ambiguous = "ambiguous"
    Inconsistent = "inconsistent"


class RecoveryResult(NamedTuple):
    """
    The result of the recovery of an erasure pattern.

    Attributes:
        status: The outcome.
        count: The number of codewords matching the pattern.
        codeword: The recovered codeword, when unique.
    """

    status: RecoveryStatus
    count: int
    codeword: ltp.Word | None = None


class RepairedSymbol(NamedTuple):
    """
    A symbol repaired from its witness set.

    Attributes:
        value: The repaired symbol.
        accessed: The coordinates read to repair it.
    """

    value: int
    accessed: ltp.Coordinates


def _matching(
    codebook: lrc.code.Codebook,
    pattern: ErasurePattern,
    coordinates: ltp.Coordinates,
) -> np.ndarray:

    symbols = np.array([pattern.word[c] for c in coordinates], dtype=np.int64)

    return np.all(codebook.words[:, list(coordinates)] == symbols, axis=1)


def recover_erasures(
    code: lrc.code.CodeLike, *, pattern: ErasurePattern
) -> RecoveryResult:
    """
    Recover the erased symbols by scanning the whole codebook.

    Args:
        code: The code.
        pattern: The erasure pattern.

    Returns:
        The recovery result, unique whenever at most d - 1 symbols of a
        codeword were erased.
    """

    codebook = lrc.code.as_codebook(code)
    pattern.validate(q=codebook.q, n=codebook.n)

    matches = np.flatnonzero(_matching(codebook, pattern, pattern.known()))

    logging.debug(msg=f"{matches.size} codewords match {pattern.word}")

    match matches.size:

        case 0:
            return RecoveryResult(status=RecoveryStatus.Inconsistent, count=0)

        case 1:
            return RecoveryResult(
                status=RecoveryStatus.Unique,
                count=1,
                codeword=codebook.word(int(matches[0])),
            )

        case _:
            return RecoveryResult(
                status=RecoveryStatus.Ambiguous, count=int(matches.size)
            )


def local_repair(
    code: lrc.code.CodeLike,
    *,
    pattern: ErasurePattern,
    profile: lrc.locality.LocalityProfile,
) -> dict[int, RepairedSymbol]:
    """
    Repair each erased symbol by reading only its witness set.

    Args:
        code: The code.
        pattern: The erasure pattern.
        profile: The locality profile of the code, providing the witness sets.

    Returns:
        The repaired symbol of each erased coordinate.

    Raises:
        NeedsGlobalRepair: If a witness set is missing or contains an erasure.
        InconsistentPattern: If no codeword matches a witness set.
    """

    codebook = lrc.code.as_codebook(code)
    pattern.validate(q=codebook.q, n=codebook.n)

    if len(profile) != codebook.n:
        msg = "The profile has {} entries, the code {} coordinates"
        raise exceptions.ShapeError(msg.format(len(profile), codebook.n))

    erased = pattern.erased()
    repaired = {}

    for coordinate in erased:

        witness = profile[coordinate].witness

        if witness is None or not set(witness).isdisjoint(erased):
            msg = "The witness set {} of coordinate {} is not available"
            raise exceptions.NeedsGlobalRepair(msg.format(witness, coordinate))

        values = np.unique(
            codebook.words[_matching(codebook, pattern, witness), coordinate]
        )

        if values.size == 0:
            msg = "No codeword matches the symbols on {}"
            raise exceptions.InconsistentPattern(msg.format(witness))

        if values.size > 1:
            msg = "The set {} does not determine coordinate {}"
            raise exceptions.InternalInvariantViolation(msg.format(witness, coordinate))

        repaired[coordinate] = RepairedSymbol(value=int(values[0]), accessed=witness)

    return repaired
