"""Exception types raised by the library."""


class MahonianError(ValueError):
    pass


class MalformedMultisetError(MahonianError):
    """A letter content has a gap where full support is required."""


class DimensionError(MahonianError):
    """Sizes of two arguments do not agree."""


class ParameterError(MahonianError):
    """A numeric parameter (d, r, i, x, ...) is out of range."""


class DomainError(MahonianError):
    """The input is not a member of the function's domain."""


class NotMahonianWordError(DomainError):
    """The word does not have an increasing tail permutation."""


class UnsupportedStatisticError(MahonianError):
    """Unknown statistic name, or STAT, which is deliberately not provided."""


class PreconditionError(MahonianError):
    """A verification claim was requested on a domain it does not cover."""
