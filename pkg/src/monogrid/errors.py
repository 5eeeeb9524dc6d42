"""Exception types shared across the package."""


class MonogridError(Exception):
    """Base class for all package-specific errors."""


class CapacityError(MonogridError):
    """A requested graph or search exceeds a configured size cap."""


class ShapeMismatchError(MonogridError):
    """Two exponent vectors do not live in the same (n, d) family."""


class GraphIdentityError(MonogridError):
    """A vertex set was used with a graph it was not created from."""


class DomainError(MonogridError):
    """An argument is outside the mathematical domain of the operation."""


class EdgeListFormatError(MonogridError):
    """An imported edge list is malformed (self-loop, duplicate, bad header)."""


class InfeasibleChoiceError(MonogridError):
    """A requested combinatorial choice does not exist (e.g. full alternation
    in an odd cycle)."""


class IdentityCheckError(MonogridError):
    """A closed-form arithmetic identity failed; indicates a transcription bug."""


class CacheConflictError(MonogridError):
    """Two exact cache entries disagree; the cache refuses to overwrite."""
