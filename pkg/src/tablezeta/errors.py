"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: input problems -> 2, declared
unsupported cases -> 3, verification failure -> 1.
"""


class TableZetaError(Exception):
    """Base class for all package errors."""


class InputError(TableZetaError):
    """Malformed user input (files, parameters)."""


class UnsupportedCaseError(TableZetaError):
    """A case the implementation deliberately refuses (documented limits)."""


class NonCommutative(UnsupportedCaseError):
    pass


class NonIntegralRescale(TableZetaError):
    def __init__(self, i, j, k, value):
        self.position = (i, j, k)
        self.value = value
        super().__init__(f"rescaled structure constant at {(i, j, k)} is {value}, not a nonnegative integer")


class NotMonogenic(UnsupportedCaseError):
    pass


class DegreeTooLarge(UnsupportedCaseError):
    pass


class MaximalityUncertified(UnsupportedCaseError):
    pass


class NotCertifiedMaximal(UnsupportedCaseError):
    pass


class BasisKindMismatch(TableZetaError):
    pass


class MissingBadPrime(TableZetaError):
    pass


class NotStabilized(TableZetaError):
    def __init__(self, partial):
        self.partial = list(partial)
        super().__init__(f"series quotient did not stabilize; partial quotient {self.partial}")


class NonIntegralQuotient(TableZetaError):
    pass


class UnsupportedM(UnsupportedCaseError):
    pass


class PrecisionUnstable(TableZetaError):
    pass


class DepthExceeded(TableZetaError):
    pass


class NotFullRank(TableZetaError):
    pass
