class LrcError(Exception):
    """Base class of all the errors raised by lrcsim."""


class ShapeError(LrcError, ValueError):
    """Lengths, coordinates or symbols are not compatible with the code."""


class NotPrime(LrcError, ValueError):
    """The modulus of a prime field is not prime."""


class DivisionByZero(LrcError, ZeroDivisionError):
    """Inversion or division by the zero element of a field."""


class InvalidSpec(LrcError, ValueError):
    """The parameters of a construction are not valid."""


class AlphabetTooSmall(InvalidSpec):
    """The alphabet cannot host the requested MDS code."""


class DegenerateCode(LrcError, ValueError):
    """The code has less than two codewords."""


class NonIntegralDimension(LrcError, ValueError):
    """The number of codewords is not a power of the alphabet size."""


class NotSystematic(LrcError, ValueError):
    """The information coordinates do not range bijectively over all values."""


class TooLarge(LrcError, ValueError):
    """The exhaustive analysis would exceed the configured limits."""


class NoRepairSet(LrcError, ValueError):
    """A coordinate has no repair set within the requested size."""


class InvalidStrategy(LrcError, ValueError):
    """A forced step of the sub-code algorithm is not eligible."""


class InternalInvariantViolation(LrcError, RuntimeError):
    """An invariant guaranteed by construction does not hold."""


class NotApplicable(LrcError, ValueError):
    """The hypotheses of a structure verification are not met."""


class NeedsGlobalRepair(LrcError, ValueError):
    """A local repair is not possible and the whole codebook must be scanned."""


class InconsistentPattern(LrcError, ValueError):
    """No codeword matches the non-erased symbols."""


class FormatError(LrcError, ValueError):
    """The content of a file does not follow the expected format."""
