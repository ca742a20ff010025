"""Exceptions raised by cc_padic.

Everything derives from PadicError, which is a ValueError: all of these
are rejections of input values. The CLI maps them to exit code 2.
"""


class PadicError(ValueError):
    """Base class for invalid input to any cc_padic operation."""


class NotPrimeError(PadicError):
    """The modulus p is not a prime number."""


class LiteralError(PadicError):
    """A rational literal is malformed or has a zero denominator."""


class PrimeMismatchError(PadicError):
    """Two values living over different primes were combined."""


class ZeroDivisionPadicError(PadicError, ZeroDivisionError):
    """Division by an exact zero."""


class NotAutomorphismError(PadicError):
    """A zero coefficient was used where an automorphism is required."""


class DistributionError(PadicError):
    """A distribution's components are invalid."""


class WindowError(PadicError):
    """A verification or quotient window does not fit the inputs."""


class CounterexampleError(PadicError):
    """Parameters outside the range of the counterexample construction."""


class ConfigError(PadicError):
    """A configuration file could not be read or validated."""
