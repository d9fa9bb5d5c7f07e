"""Exception types shared across the package."""


class QMinkError(Exception):
    """Base class for every error raised by this package."""


class ParseError(QMinkError):
    """Malformed instance data: bad scalar encoding, wrong shape, stray keys."""


class ConstraintError(QMinkError):
    """Instance data violates a structural constraint (q or s not a sign,
    singular X, bad deformation parameter)."""


class UnknownInstance(QMinkError):
    """Requested builtin instance name does not exist."""


class DegreeError(QMinkError):
    """Polynomial degree exceeds the configured truncation cap."""


class ShapeError(QMinkError):
    """Matrix shapes do not compose for the requested operation."""


class CalculusObstruction(QMinkError):
    """The first-order differential calculus does not exist because the
    obstruction matrix is nonzero."""


class NotCotriangular(QMinkError):
    """Symmetric-group actions were requested from an evaluator that is not
    cotriangular."""
