import dataclasses
import functools
from typing import Literal

import galois
import numpy as np
import numpy.typing as npt

from lrcsim import exceptions, logging

FieldOperation = Literal["add", "sub", "mul", "inv", "div"]


@dataclasses.dataclass(frozen=True)
class PrimeField:
    """
    The prime field GF(p) whose elements are the canonical integers {0, ..., p-1}.

    Attributes:
        p: The prime modulus, also the size of the alphabet of the codes.
    """

    p: int

    def __post_init__(self) -> None:

        if (
            isinstance(self.p, bool)
            or not isinstance(self.p, (int, np.integer))
            or self.p < 2
            or not galois.is_prime(int(self.p))
        ):
            raise exceptions.NotPrime(f"The modulus '{self.p}' is not prime")

    @functools.cached_property
    def GF(self) -> type[galois.FieldArray]:
        """The `galois` field class backing the arithmetic."""

        return galois.GF(int(self.p))

    def element(self, a: int) -> galois.FieldArray:
        """
        Convert an integer to a field element.

        Args:
            a: The integer, that must be in {0, ..., p-1}.

        Returns:
            The field element.
        """

        if isinstance(a, bool) or not isinstance(a, (int, np.integer)):
            raise exceptions.ShapeError(f"'{a}' is not an integer")

        if not 0 <= a < self.p:
            raise exceptions.ShapeError(f"'{a}' is not an element of GF({self.p})")

        return self.GF(int(a))

    def add(self, a: int, b: int) -> int:
        return int(self.element(a) + self.element(b))

    def sub(self, a: int, b: int) -> int:
        return int(self.element(a) - self.element(b))

    def mul(self, a: int, b: int) -> int:
        return int(self.element(a) * self.element(b))

    def inv(self, a: int) -> int:

        if self.element(a) == 0:
            raise exceptions.DivisionByZero(f"0 has no inverse in GF({self.p})")

        return int(self.element(a) ** -1)

    def div(self, a: int, b: int) -> int:

        if self.element(b) == 0:
            raise exceptions.DivisionByZero(f"Division by 0 in GF({self.p})")

        return int(self.element(a) / self.element(b))


def field_arith(p: int, op: FieldOperation, a: int, b: int | None = None) -> int:
    """
    Apply a single operation of the prime field GF(p).

    Args:
        p: The prime modulus.
        op: The operation, one of "add", "sub", "mul", "inv", "div".
        a: The first operand.
        b: The second operand, absent only for "inv".

    Returns:
        The canonical result of the operation.
    """

    field = PrimeField(p=p)

    if op != "inv" and b is None:
        raise exceptions.ShapeError(f"The operation '{op}' needs two operands")

    match op:

        case "add":
            return field.add(a, b)

        case "sub":
            return field.sub(a, b)

        case "mul":
            return field.mul(a, b)

        case "inv":
            return field.inv(a)

        case "div":
            return field.div(a, b)

        case _:
            raise ValueError(op)


def systematic_mds_generator(p: int, k: int, m: int) -> npt.NDArray:
    """
    Compute the parity coefficients of a systematic Reed-Solomon code over GF(p).

    Args:
        p: The prime size of the alphabet.
        k: The dimension of the code.
        m: The number of parity symbols.

    Returns:
        The `(m, k)` matrix `C` such that appending the parities `C @ x` to the
        information vector `x` yields a code of length `k + m` and distance `m + 1`.

    Note:
        The generator is the Vandermonde matrix evaluated in 0, 1, ..., k+m-1,
        brought in systematic form by Gaussian elimination over GF(p).
    """

    field = PrimeField(p=p)

    if k < 1 or m < 0:
        raise exceptions.ShapeError(f"Invalid dimensions k={k}, m={m}")

    n = k + m

    if p < n:
        msg = "GF({}) has less than {} distinct evaluation points"
        raise exceptions.AlphabetTooSmall(msg.format(p, n))

    vandermonde = field.GF(
        np.array([[pow(a, i, p) for a in range(n)] for i in range(k)], dtype=int)
    )

    # The first k columns are an invertible Vandermonde block, therefore
    # the reduced row echelon form is [I | P].
    generator = vandermonde.row_reduce()
    coefficients = generator[:, k:].T.view(np.ndarray).astype(np.int64)

    logging.debug(msg=f"Systematic MDS generator over GF({p}): k={k}, m={m}")

    return coefficients
