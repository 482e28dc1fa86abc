"""Exception hierarchy.

Errors that mean "the numbers do not describe a valid state" derive from
:class:`ValidationError`; the CLI maps those to exit code 2 and everything
else to exit code 1.
"""


class MixsimError(ValueError):
    """Base class for all package errors."""


class ValidationError(MixsimError):
    """A matrix or vector violates a state invariant."""


class NonHermitian(ValidationError):
    pass


class NotPSD(ValidationError):
    pass


class TraceNotOne(ValidationError):
    pass


class BadDimension(ValidationError):
    pass


class NotNormalized(ValidationError):
    pass


class OutOfRange(MixsimError):
    pass


class LengthMismatch(MixsimError):
    pass


class DimensionMismatch(MixsimError):
    pass


class LabelError(MixsimError):
    """Qubit labels are out of range, repeated, or otherwise unusable."""


class WeightError(MixsimError):
    pass


class UnknownGate(MixsimError):
    pass


class NotCoprime(MixsimError):
    pass


class UnsupportedModulus(MixsimError):
    pass


class ConfigError(MixsimError):
    pass


class ParseError(MixsimError):
    pass
