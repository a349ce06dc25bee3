"""Exception hierarchy.

Failures that come with an :class:`~homhopf.hom_structures.AxiomReport` keep
it on ``.report`` so the caller can print the witnesses.
"""


class HomHopfError(Exception):
    pass


class ParseError(HomHopfError):
    pass


class FieldCharError(ParseError):
    pass


class UnknownExample(HomHopfError):
    pass


class DimMismatch(HomHopfError, ValueError):
    pass


class SingularMap(HomHopfError, ArithmeticError):
    pass


class NoAntipode(HomHopfError):
    pass


class NonUniqueAntipode(HomHopfError):
    def __init__(self, message, nullity=None):
        super().__init__(message)
        self.nullity = nullity


class MissingDoubleTag(HomHopfError):
    pass


class ReportedFailure(HomHopfError):
    """Base for failures that carry an axiom report.

    ``structure`` holds the rejected object when one was built, so callers
    can still inspect what the construction produced.
    """

    def __init__(self, message, report=None, structure=None):
        super().__init__(message)
        self.report = report
        self.structure = structure


class DualAxiomFailure(ReportedFailure):
    pass


class OpAxiomFailure(ReportedFailure):
    pass


class IncompatibleAction(ReportedFailure):
    pass


class IncompatibleCoaction(ReportedFailure):
    pass


class BicrossConditionFailure(ReportedFailure):
    pass


class MatchedPairFailure(ReportedFailure):
    pass


class ConstructionFailure(ReportedFailure):
    """A construction produced a structure that fails its own checker."""


class MirrorMismatch(ReportedFailure):
    pass


class DoubleMismatch(ReportedFailure):
    pass
