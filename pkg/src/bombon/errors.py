"""Exception types raised by the public API."""


class BombonError(Exception):
    """Base class for all library errors."""


class ZeroVector(BombonError):
    """Homogeneous coordinates are (numerically) all zero."""


class CoincidentPoints(BombonError):
    """Two points expected to be distinct agree projectively."""


class NoConvergence(BombonError):
    """An iterative routine failed to reach its target accuracy."""


class NotABombon(BombonError):
    """Hermitian form is definite, semidefinite or zero; its zero set
    does not separate projective space into two components."""


class TypeMismatch(BombonError):
    """The two quadrics are projectively inequivalent."""


class NotComplementary(BombonError):
    """Subspaces fail to be complementary in the ambient space."""


class NotOnQuadric(BombonError):
    """Point does not lie on the quadric within tolerance."""


class NotSmooth(BombonError):
    """Operation requires a quadric with trivial kernel."""


class ExpectationViolated(BombonError):
    """A structural assertion guaranteed by theory failed numerically."""


class PointOnCircle(BombonError):
    """Point lies on the generalized circle, so the operation is undefined."""


class OracleInconsistent(BombonError):
    """A membership oracle returned answers inconsistent with convexity."""


class DegenerateSpan(BombonError):
    """Input points do not affinely span the ambient complex space."""


class NotOnSphere(BombonError):
    """Input point is not on the unit sphere within tolerance."""


class PreconditionError(BombonError):
    """A documented precondition of the operation does not hold."""
