"""Exception hierarchy shared by every module of the toolkit."""


class FoliaError(Exception):
    """Base class for all toolkit errors."""


class InsufficientTruncation(FoliaError):
    """A truncated series did not carry enough terms to certify a result."""


class NotSmoothHere(FoliaError):
    pass


class NotANode(FoliaError):
    pass


class IrrationalTangents(FoliaError):
    pass


class NotSingularHere(FoliaError):
    pass


class CurveIsInvariant(FoliaError):
    """Raised by the tangency index when a component of the curve is invariant."""

    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor


class BranchNotInvariant(FoliaError):
    pass


class UnsupportedBranch(FoliaError):
    """Invariant curve singularity that is neither smooth nor a node."""


class MismatchedPoints(FoliaError):
    pass


class DepthExceeded(FoliaError):
    pass


class TreeIncomplete(FoliaError):
    pass


class UnknownCurve(FoliaError):
    pass


class InsufficientData(FoliaError):
    pass


class ModelInconsistency(FoliaError):
    pass


class MissingIndices(FoliaError):
    pass


class NotDecomposable(FoliaError):
    pass


class NotContractible(FoliaError):
    pass


class NotNef(FoliaError):
    pass


class OrbifoldSingularityClash(FoliaError):
    """A foliation singularity was placed on an orbifold point of the surface."""
