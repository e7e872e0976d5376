"""Exception hierarchy.

Every domain failure derives from :class:`GeometryError` so callers (and the
CLI) can separate bad geometry from programming errors.
"""


class GeometryError(ValueError):
    pass


class DimensionMismatch(GeometryError):
    pass


class IdenticalPlanes(GeometryError):
    pass


class NoCommon3Space(GeometryError):
    pass


class ModelMismatch(GeometryError):
    """A point does not satisfy the defining equation of its model."""


class OutOfHemisphere(GeometryError):
    pass


class OutOfDisc(GeometryError):
    pass


class EquatorPoint(GeometryError):
    pass


class DegeneratePair(GeometryError):
    pass


class DegenerateTriangle(GeometryError):
    pass


class NotCollinear(GeometryError):
    pass


class NotDistinct(GeometryError):
    pass


class ApexOnLine(GeometryError):
    pass


class NoIntersection(GeometryError):
    pass


class NonCoplanarConfiguration(GeometryError):
    pass


class CoincidentPoints(GeometryError):
    pass


class PointOutsideBall(GeometryError):
    pass


class RadiusOutOfRange(GeometryError):
    pass
