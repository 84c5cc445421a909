"""Exception hierarchy shared by all modules."""


class GeometryError(Exception):
    """Base class for every error raised by lagtetra."""


class DegenerateInput(GeometryError):
    """Points that must be distinct coincide within tolerance."""


class ZeroForm(GeometryError):
    pass


class NumericalDegeneracy(GeometryError):
    """A decision falls inside the ambiguity band of a tolerance."""


class NotOnQuadric(GeometryError):
    pass


class NotLagrangian(GeometryError):
    pass


class NotRegular(GeometryError):
    pass


class NotOnAxis(GeometryError):
    pass


class UndefinedProjection(GeometryError):
    pass


class NotInOmega(GeometryError):
    pass


class AmbiguousBoundary(GeometryError):
    """A vertex sits on the up/down threshold circle within tolerance."""


class DomainError(GeometryError, ValueError):
    pass


class InconsistentSequence(GeometryError):
    pass


class NotUnimodular(GeometryError):
    pass
