"""The fiber over the origin of the hyperbolic plane and the flow along the axis.

Tetrahedra with barycenter on the axis split into "up" ones and "down"
ones; a down tetrahedron has exactly one vertex below the level
``eta(c) + ETA_B_O``.  Down tetrahedra carry coordinates ``(v, theta)``:
the bottom vertex and the rotation angle of the other three vertices.

Working frame for a down tetrahedron with barycenter ``c`` and bottom
vertex ``v``: a Moebius map sending ``v`` to infinity, its antipode through
``c`` to 0 and ``c`` to ``(0, 1)``.  The remaining vertices then sit on the
circle of radius ``1/sqrt2`` at angles ``phi_0 + theta + 2 pi k / 3``, with
``phi_0`` the angle of the lower of the two points where that circle meets
the vertical plane through ``v`` and the axis.
"""

import enum
import math
from itertools import combinations
from dataclasses import dataclass

import numpy as np

from .errors import AmbiguousBoundary, DomainError, GeometryError, NotInOmega
from .hyperbolic import (
    AXIS_CHART,
    ETA_B_O,
    MINUS_I,
    PLUS_I,
    axis_translate,
    eta,
    eta_inv,
    height,
    project_to_P,
)
from .forms import form_product, linear_form
from .lagrangian import in_Omega, plucker_distance, plucker_of
from .projective import Mobius, ProjPoint, chordal, mobius_apply
from .tetra import DecoratedTetra, DegenTetra, g_inverse, g_map, project_Q
from .tolerance import get_tol

__all__ = [
    "FiberPoint",
    "DownCoord",
    "UpDown",
    "UpDownClass",
    "THETA_PERIOD",
    "BOUNDARY_BAND",
    "project_q",
    "in_fiber_O",
    "updown_classify",
    "f_shift",
    "f_inverse",
    "rho_s",
    "uplift",
    "make_down_tetra",
    "rotation_tetra",
    "M_shift",
    "phi",
    "phi_fiber",
    "scene",
]

THETA_PERIOD = 2 * math.pi / 3
BOUNDARY_BAND = 1e-9
_INV_SQRT2 = 1 / math.sqrt(2)


@dataclass(frozen=True)
class FiberPoint:
    """A point of the closed fiber: a tetrahedron or a degenerate pair at ``+i``/``-i``."""

    kind: str  # "tetra", "plus" or "minus"
    tetra: DecoratedTetra | None = None
    second: ProjPoint | None = None

    @classmethod
    def of(cls, tetra):
        return cls("tetra", tetra=tetra)

    @classmethod
    def plus(cls, second):
        return cls("plus", second=second)

    @classmethod
    def minus(cls, second):
        return cls("minus", second=second)

    def as_degenerate(self):
        first = PLUS_I if self.kind == "plus" else MINUS_I
        return DegenTetra(first, self.second)

    def lagrangian(self):
        if self.kind != "tetra":
            return g_map(self.as_degenerate())
        # all vertex pairs span the same plane; near the ends of the axis
        # three vertices merge, so use the best-conditioned pair
        forms = [form_product([linear_form(v), linear_form(v), linear_form(d)]) for v, d in self.tetra.pairing]
        forms = [f / np.linalg.norm(f) for f in forms]
        i, j = max(combinations(range(4), 2), key=lambda ij: np.linalg.norm(plucker_of(forms[ij[0]], forms[ij[1]])))
        return g_map(self.tetra, pair_indices=(i, j))

    def reflect(self):
        if self.kind == "tetra":
            return FiberPoint.of(self.tetra.reflect())
        other = "minus" if self.kind == "plus" else "plus"
        return FiberPoint(other, second=self.second.conj())

    def distance(self, other):
        """Chordal distance of the corresponding Lagrangians in Pluecker space."""
        return plucker_distance(self.lagrangian().plucker, other.lagrangian().plucker)


@dataclass(frozen=True)
class DownCoord:
    """Bottom vertex and rotation angle, ``theta`` reduced to ``[0, 2 pi / 3)``."""

    v: ProjPoint
    theta: float

    def __post_init__(self):
        object.__setattr__(self, "theta", float(self.theta) % THETA_PERIOD)


class UpDown(enum.Enum):
    UP = "Up"
    DOWN = "Down"
    DOWN_THREE = "DownThree"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class UpDownClass:
    kind: UpDown
    coord: DownCoord | None = None


def project_q(W):
    if not in_Omega(W):
        raise NotInOmega("the plane lies in K_R")
    return project_to_P(project_Q(W))


def in_fiber_O(W, tol=None):
    """The fiber point of ``W`` over the origin, or None."""
    tol = get_tol(tol)
    try:
        if not in_Omega(W):
            return None
        x = g_inverse(W)
    except GeometryError:
        return None
    if isinstance(x, DecoratedTetra):
        p = project_to_P(x.barycenter)
        if abs(p.x) < tol * 10 and abs(p.h - 1) < tol * 10:
            return FiberPoint.of(x)
        return None
    if chordal(x.first, PLUS_I) < tol * 10:
        return FiberPoint.plus(x.second)
    if chordal(x.first, MINUS_I) < tol * 10:
        return FiberPoint.minus(x.second)
    return None


def _frame(c, v):
    """Moebius map sending ``v`` to infinity and ``eta_inv(c)`` to ``(0, 1)``."""
    k = _axis_normal(c)
    a, b = mobius_apply(k, v).unit
    # unitary, so it fixes (0, 1); its first row kills the image of v
    spin = Mobius([[np.conj(a), np.conj(b)], [-b, a]])
    return spin @ k


def _axis_normal(c):
    """Chart in which the axis is vertical and ``eta_inv(c)`` is ``(0, 1)``."""
    half = math.exp(-c / 2)
    return Mobius([[half, 0], [0, 1 / half]]) @ AXIS_CHART


def _zero_angle(frame):
    """Angle of the theta origin on the circle of radius 1/sqrt2 in the frame."""
    u = mobius_apply(frame, MINUS_I).to_complex()
    if not np.isfinite(u) or abs(u) == 0:
        raise DomainError("bottom vertex lies on the axis")
    u = u / abs(u)
    inv = frame.inverse()
    candidates = [u * _INV_SQRT2, -u * _INV_SQRT2]
    lower = min(candidates, key=lambda p: height(mobius_apply(inv, ProjPoint(p, 1))))
    return math.atan2(lower.imag, lower.real)


def _threshold(c):
    return c + ETA_B_O


def updown_classify(T, tol=None):
    """Up, Down with coordinates, or DownThree (bottom vertex at ``-i``)."""
    tol = get_tol(tol)
    c = eta(T.barycenter)
    level = _threshold(c)
    for v in T.vertices:
        if chordal(v, MINUS_I) < tol:
            return UpDownClass(UpDown.DOWN_THREE)
    heights = [height(v) for v in T.vertices]
    for h in heights:
        if abs(h - level) < BOUNDARY_BAND:
            raise AmbiguousBoundary(f"vertex height {h:.12g} is on the level {level:.12g}")
    below = [k for k, h in enumerate(heights) if h < level]
    if not below:
        return UpDownClass(UpDown.UP)
    if len(below) > 1:
        raise GeometryError(f"{len(below)} vertices below the level; expected at most one")
    v = T.vertices[below[0]]
    frame = _frame(c, v)
    phi0 = _zero_angle(frame)
    others = [mobius_apply(frame, w).to_complex() for k, w in enumerate(T.vertices) if k != below[0]]
    theta = (math.atan2(others[0].imag, others[0].real) - phi0) % THETA_PERIOD
    return UpDownClass(UpDown.DOWN, DownCoord(v, theta))


def make_down_tetra(c, coord):
    """The down tetrahedron with barycenter at axis coordinate ``c`` and coordinates ``coord``."""
    v = coord.v
    if not height(v) < _threshold(c):
        raise DomainError(f"height {height(v):.6g} is not below the level {_threshold(c):.6g}")
    if chordal(v, MINUS_I) < get_tol():
        raise DomainError("a bottom vertex at -i has no angle coordinate; use rotation_tetra")
    frame = _frame(c, v)
    inv = frame.inverse()
    phi0 = _zero_angle(frame)
    vertices, duals = [v], [mobius_apply(inv, ProjPoint(0, 1))]
    for k in range(3):
        w = _INV_SQRT2 * np.exp(1j * (phi0 + coord.theta + k * THETA_PERIOD))
        vertices.append(mobius_apply(inv, ProjPoint(w, 1)))
        # central symmetry at (0, 1) is z -> -1/conj(z)
        duals.append(mobius_apply(inv, ProjPoint(-1, np.conj(w))))
    return DecoratedTetra(tuple(vertices), tuple(duals), eta_inv(c))


def rotation_tetra(c, angle):
    """Tetrahedron with vertex ``-i`` and barycenter ``eta_inv(c)``, rotated by ``angle``."""
    inv = _axis_normal(c).inverse()
    vertices, duals = [MINUS_I], [PLUS_I]
    for k in range(3):
        w = math.sqrt(2) * np.exp(1j * (angle + k * THETA_PERIOD))
        vertices.append(mobius_apply(inv, ProjPoint(w, 1)))
        duals.append(mobius_apply(inv, ProjPoint(-1, np.conj(w))))
    return DecoratedTetra(tuple(vertices), tuple(duals), eta_inv(c))


def f_shift(v):
    """``v + 1/(eta(B_O) - v)`` on ``v < eta(B_O)``."""
    if v == -math.inf:
        return -math.inf
    if not v < ETA_B_O:
        raise DomainError(f"f is defined below {ETA_B_O:.6g}, got {v}")
    return v + 1 / (ETA_B_O - v)


def f_inverse(y):
    if y == -math.inf:
        return -math.inf
    if y == math.inf:
        return ETA_B_O
    gap = ETA_B_O - y
    root = math.sqrt(gap * gap + 4)
    u = (gap + root) / 2 if gap >= 0 else 2 / (root - gap)
    return ETA_B_O - u


def rho_s(v, s):
    if s < 0:
        raise DomainError("rho_s needs s >= 0")
    return min(v + s, f_shift(v))


def uplift(z):
    """Translate ``z`` up the axis by ``f(h_z) - h_z``; ``-i`` stays put."""
    if chordal(z, MINUS_I) < get_tol():
        return MINUS_I
    h = height(z)
    return mobius_apply(axis_translate(f_shift(h) - h), z)


def M_shift(lam, T):
    """Move the barycenter up by ``lam`` keeping the bottom vertex and angle."""
    if lam < 0:
        raise DomainError("M_shift needs a nonnegative length")
    if lam == 0:
        return T
    cls = updown_classify(T)
    if cls.kind is UpDown.DOWN_THREE:
        return T.transform(axis_translate(lam))
    if cls.kind is UpDown.UP:
        raise DomainError("M_shift is defined on down tetrahedra")
    return make_down_tetra(eta(T.barycenter) + lam, cls.coord)


def _as_tetra(T):
    if isinstance(T, FiberPoint):
        if T.kind != "tetra":
            raise DomainError("phi starts from a tetrahedron with barycenter at the origin")
        T = T.tetra
    if abs(eta(T.barycenter)) > 1e-8:
        raise DomainError("the tetrahedron's barycenter is not the origin")
    return T


def _phi_plus(T, s):
    cls = updown_classify(T)
    if s == math.inf:
        if cls.kind is UpDown.UP:
            return FiberPoint.plus(PLUS_I)
        if cls.kind is UpDown.DOWN_THREE:
            return FiberPoint.plus(MINUS_I)
        return FiberPoint.plus(uplift(cls.coord.v))
    if cls.kind is not UpDown.DOWN:
        return FiberPoint.of(T.transform(axis_translate(s)))
    h = height(cls.coord.v)
    gap = f_shift(h) - h
    if s <= gap:
        return FiberPoint.of(T.transform(axis_translate(s)))
    lifted = T.transform(axis_translate(gap))
    return FiberPoint.of(M_shift(s - gap, lifted))


def phi(T, s):
    """Flow a tetrahedron with barycenter at the origin to axis coordinate ``s``."""
    T = _as_tetra(T)
    if s == 0:
        return FiberPoint.of(T)
    if s > 0:
        return _phi_plus(T, s)
    return _phi_plus(T.reflect(), -s).reflect()


def phi_fiber(z, n):
    """``n`` tetrahedra at the origin whose image at ``+inf`` is ``(+i, z)``."""
    if n < 1:
        raise DomainError("need at least one sample")
    if chordal(z, PLUS_I) < get_tol():
        raise DomainError("the fiber over (+i, +i) is the whole up stratum")
    angles = [THETA_PERIOD * k / n for k in range(n)]
    if chordal(z, MINUS_I) < get_tol():
        return [rotation_tetra(0.0, a) for a in angles]
    hz = height(z)
    h = f_inverse(hz)
    v = mobius_apply(axis_translate(h - hz), z)
    return [make_down_tetra(0.0, DownCoord(v, a)) for a in angles]


def scene(T, s_values):
    """Frames of the flow from ``T`` (barycenter at the origin) over ``s_values``."""
    frames = []
    for s in s_values:
        frames.append((s, phi(T, s)))
    return frames

