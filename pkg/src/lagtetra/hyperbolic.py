"""Upper half-space H^3, the axis from -i to i and the plane over the real line.

Interior points are ``H3Point(z, t)``; ideal points are ``ProjPoint``.  The
axis is handled in the chart ``m(z) = (z + i)/(1 + i z)`` which sends -i, i
to 0, infinity, so axis coordinates and heights become log-moduli there.
Extended reals are plain floats; every function that can meet an infinite
value branches on it before doing geometry.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import NotOnAxis, UndefinedProjection
from .projective import ProjPoint, Mobius, mobius_apply
from .tolerance import get_tol

__all__ = [
    "H3Point",
    "H2Point",
    "ORIGIN",
    "AXIS_CHART",
    "poincare_extend",
    "h3_distance",
    "eta",
    "eta_inv",
    "height",
    "project_to_P",
    "axis_translate",
    "reflect_iota",
    "model_tetra_axis_distance",
    "ETA_A_O",
    "ETA_B_O",
    "PLUS_I",
    "MINUS_I",
]


@dataclass(frozen=True)
class H3Point:
    """Interior point ``(z, t)`` of upper half-space, ``t > 0``."""

    z: complex
    t: float

    def __post_init__(self):
        object.__setattr__(self, "z", complex(self.z))
        object.__setattr__(self, "t", float(self.t))
        if not (self.t > 0 and math.isfinite(self.t) and np.isfinite(self.z)):
            raise ValueError("an interior point needs finite z and t > 0")


@dataclass(frozen=True)
class H2Point:
    """Point ``(x, h)`` of the vertical half-plane over the real line."""

    x: float
    h: float


ORIGIN = H3Point(0j, 1.0)
PLUS_I = ProjPoint(1j, 1.0)
MINUS_I = ProjPoint(-1j, 1.0)

AXIS_CHART = Mobius(np.array([[1, 1j], [1j, 1]]) / math.sqrt(2))
_AXIS_CHART_INV = AXIS_CHART.inverse()


def poincare_extend(g, x):
    """Isometric extension of ``g`` to H^3; ideal points move by ``g`` itself."""
    if isinstance(x, ProjPoint):
        return mobius_apply(g, x)
    a, b, c, d = g.m.ravel()
    z, t = x.z, x.t
    w = c * z + d
    denom = abs(w) ** 2 + abs(c) ** 2 * t**2
    z_new = ((a * z + b) * w.conjugate() + a * c.conjugate() * t**2) / denom
    return H3Point(z_new, t / denom)


def h3_distance(x, y):
    num = abs(x.z - y.z) ** 2 + (x.t - y.t) ** 2
    arg = num / (2 * x.t * y.t)
    # acosh(1 + u) written to stay accurate for tiny u
    return math.log1p(arg + math.sqrt(arg * (arg + 2)))


def eta(x, tol=None):
    """Signed axis coordinate of a point on the closed axis (0 at ``ORIGIN``)."""
    tol = get_tol(tol)
    if isinstance(x, ProjPoint):
        if x.equals(PLUS_I, tol):
            return math.inf
        if x.equals(MINUS_I, tol):
            return -math.inf
        raise NotOnAxis(f"{x!r} is not an endpoint of the axis")
    y = poincare_extend(AXIS_CHART, x)
    # the chart loses about exp(|eta|) ulps near the endpoints of the axis
    allowed = max(10 * tol, 1e-14 * math.exp(min(abs(math.log(y.t)), 700)))
    if abs(y.z) > allowed * y.t:
        raise NotOnAxis(f"{x!r} is off the axis by {abs(y.z) / y.t:.2e}")
    return math.log(y.t)


def eta_inv(s):
    if s == math.inf:
        return PLUS_I
    if s == -math.inf:
        return MINUS_I
    return poincare_extend(_AXIS_CHART_INV, H3Point(0j, math.exp(s)))


def height(zpt):
    """Axis coordinate of the foot of the plane orthogonal to the axis through ``zpt``."""
    a, b = zpt.unit
    top = abs(a + 1j * b)
    bottom = abs(1j * a + b)
    if top == 0:
        return -math.inf
    if bottom == 0:
        return math.inf
    return math.log(top / bottom)


def project_to_P(x, tol=None):
    """Nearest-point projection to the plane bounded by the real line."""
    tol = get_tol(tol)
    if isinstance(x, ProjPoint):
        if x.b == 0 or abs(x.to_complex().imag) < tol * max(1.0, abs(x.to_complex())):
            raise UndefinedProjection("ideal points of the real line have no projection")
        z = x.to_complex()
        return H2Point(z.real, abs(z.imag))
    return H2Point(x.z.real, math.hypot(x.z.imag, x.t))


def axis_translate(length, sign=+1):
    """Translation along the axis by ``length``, towards ``+i`` if ``sign > 0``."""
    if sign < 0:
        length = -length
    # conjugate of diag(e^{L/2}, e^{-L/2}) by the axis chart, in closed form
    c, s = math.cosh(length / 2), math.sinh(length / 2)
    return Mobius.from_sl2([[c, 1j * s], [-1j * s, c]])


def axis_rotation(angle):
    """Elliptic rotation about the axis by ``angle``."""
    spin = Mobius([[np.exp(0.5j * angle), 0], [0, np.exp(-0.5j * angle)]])
    return _AXIS_CHART_INV @ spin @ AXIS_CHART


def reflect_iota(x):
    """Reflection in the plane over the real line (complex conjugation)."""
    if isinstance(x, ProjPoint):
        return x.conj()
    if isinstance(x, H3Point):
        return H3Point(x.z.conjugate(), x.t)
    return x.reflect()


def model_tetra_axis_distance():
    """Distance from the barycenter of ``{1, -1, +-(2-sqrt3)i}`` to the geodesic from -1 to 1.

    Computed directly from the coordinates: the tetrahedron is symmetric
    about the vertical axis, so its barycenter is the point ``(0, t)`` whose
    distance to the faces is equal; the geodesic from -1 to 1 is the unit
    semicircle, closest to ``(0, t)`` at ``(0, 1)``.
    """
    # imported lazily: the tetrahedron module depends on this one
    from .tetra import IdealTetra, barycenter

    k = 2 - math.sqrt(3)
    b = barycenter(
        IdealTetra([ProjPoint(1, 1), ProjPoint(-1, 1), ProjPoint(k * 1j, 1), ProjPoint(-k * 1j, 1)])
    )
    return h3_distance(b, H3Point(0j, 1.0)), b


# |ln((sqrt6 - sqrt2)/2)|; the point A_O lies on the lower half of the axis
ETA_A_O = -abs(math.log((math.sqrt(6) - math.sqrt(2)) / 2))
ETA_B_O = ETA_A_O - 1.0
