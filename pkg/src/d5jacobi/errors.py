"""Exception hierarchy shared by every module."""


class D5JacobiError(Exception):
    """Base class for all package errors."""


class BasisMismatchError(D5JacobiError):
    pass


class InvalidRootError(D5JacobiError):
    pass


class IndeterminatePointError(D5JacobiError, ZeroDivisionError):
    """A birational map was evaluated where one of its denominators vanishes.

    ``denominator`` names the vanishing expression; ``prefix`` is the part of a
    word already applied when the failure happened (empty for single maps).
    """

    def __init__(self, generator, denominator, prefix=()):
        self.generator = generator
        self.denominator = denominator
        self.prefix = tuple(prefix)
        where = f" after prefix {'.'.join(self.prefix)}" if self.prefix else ""
        super().__init__(f"{generator}: denominator {denominator} vanishes{where}")


class SingularStepError(D5JacobiError, ZeroDivisionError):
    def __init__(self, step, denominator, index=None):
        self.step = step
        self.denominator = denominator
        self.index = index
        at = f" at n={index}" if index is not None else ""
        super().__init__(f"{step}: denominator {denominator} vanishes{at}")


class SamplingExhaustedError(D5JacobiError):
    pass


class PrecisionExhaustedError(D5JacobiError):
    pass


class DomainError(D5JacobiError, ValueError):
    pass


class IndexRangeError(D5JacobiError, IndexError):
    pass


class VerificationError(D5JacobiError):
    """A base-point or lattice claim did not verify."""
