"""Exception hierarchy.

Input problems derive from ``InputError`` (CLI exit status 1); instances the
solver cannot handle derive from ``UnsupportedInstance`` (exit status 2).
"""


class CubicSchedError(Exception):
    """Base class for every error raised by this package."""


class InputError(CubicSchedError, ValueError):
    pass


class MalformedInput(InputError):
    pass


class NotCubic(InputError):
    pass


class NotSimple(InputError):
    pass


class OddOrder(InputError):
    pass


class InvalidOrder(InputError):
    pass


class SizeMismatch(InputError):
    pass


class GenerationExhausted(CubicSchedError, RuntimeError):
    pass


class UnsupportedInstance(CubicSchedError):
    pass


class Infeasible(UnsupportedInstance):
    pass


class IsK4(Infeasible):
    pass


class UnsupportedSpeeds(UnsupportedInstance):
    pass


class UnsupportedStructure(UnsupportedInstance):
    pass


class ExcludedGraph(UnsupportedInstance):
    pass


class ComponentExcluded(ExcludedGraph):
    pass


class NotBicubic(UnsupportedInstance):
    pass


class NotTricubic(UnsupportedInstance):
    pass


class NotBipartite(CubicSchedError):
    pass


class Unbalanceable(CubicSchedError):
    pass


class AlreadyMinimalWidth(CubicSchedError):
    pass


class TargetUnreachable(CubicSchedError):
    pass


class PreconditionTooSmall(CubicSchedError):
    pass


class SearchExhausted(CubicSchedError):
    pass


class NoFeasibleCandidate(CubicSchedError):
    pass


class BudgetExceeded(CubicSchedError):
    pass
