"""Exception hierarchy shared across the package."""


class MinHomError(Exception):
    """Base class for all errors raised by this package."""


class InputFormatError(MinHomError):
    """A text file or in-memory structure does not match its declared format."""


class NotSemicompleteBipartite(MinHomError):
    """An operation requiring a semicomplete bipartite target got something else."""


class NotSemicompleteMultipartite(MinHomError):
    """The given partition does not make the digraph semicomplete multipartite."""


class IntervalError(MinHomError):
    """An accepted ordering produced out-neighborhoods that are not consecutive
    intervals, or interval endpoints that are not monotone."""


class DimensionMismatch(MinHomError):
    """Cost table dimensions do not match the instance and target digraphs."""


class BudgetExceeded(MinHomError):
    """The exhaustive oracle exceeded its configured search budget."""


class InconsistencyError(MinHomError):
    """An internal invariant that theory guarantees was violated; indicates a bug
    in this package rather than in the caller's input."""
