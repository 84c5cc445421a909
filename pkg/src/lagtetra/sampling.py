"""Seeded random generators for Moebius maps, tetrahedra and Lagrangians.

Random Moebius maps are ``k1 diag(e^{r/2}, e^{-r/2}) k2`` with ``k1, k2``
Haar-random in SU(2) and translation length ``r`` uniform in
``[0, max_length]``.  Bounding ``r`` keeps the images inside the range where
the resultant test of ``classify_orbit`` is decisive at the default
tolerance (the resultant of a translated open-orbit plane decays roughly
like ``exp(-6 r)``).
"""

import math

import numpy as np

from .forms import CubicForm
from .hyperbolic import AXIS_CHART, ETA_B_O, MINUS_I
from .lagrangian import Lagrangian
from .projective import Mobius, ProjPoint, mobius_apply
from .tetra import STANDARD_TETRA, dual_tetra

DEFAULT_MAX_LENGTH = 2.0

CANONICAL = {
    "Closed": ((1, 0, 0, 0), (0, 1, 0, 0)),
    "Intermediate": ((1, 0, 0, 0), (0, 0, 1, 0)),
    "Open": ((0, 1, 0, 0), (1, 0, 0, 1)),
}


def random_su2(rng):
    q = rng.normal(size=4)
    q /= np.linalg.norm(q)
    a, b = complex(q[0], q[1]), complex(q[2], q[3])
    return np.array([[a, b], [-b.conjugate(), a.conjugate()]])


def random_mobius(rng, max_length=DEFAULT_MAX_LENGTH):
    r = rng.uniform(0, max_length)
    boost = np.diag([math.exp(r / 2), math.exp(-r / 2)])
    return Mobius(random_su2(rng) @ boost @ random_su2(rng))


def random_real_mobius(rng, max_length=DEFAULT_MAX_LENGTH):
    """Random element of SL(2, R) with bounded translation length."""

    def rot():
        t = rng.uniform(0, 2 * math.pi)
        return np.array([[math.cos(t), -math.sin(t)], [math.sin(t), math.cos(t)]])

    r = rng.uniform(0, max_length)
    return Mobius(rot() @ np.diag([math.exp(r / 2), math.exp(-r / 2)]) @ rot())


def random_point(rng):
    """Point of CP^1 uniform on the sphere."""
    v = rng.normal(size=3)
    v /= np.linalg.norm(v)
    if v[2] > 0.999999:
        return ProjPoint(1, 0)
    return ProjPoint(complex(v[0], v[1]), 1 - v[2])


def random_lagrangian(rng, orbit, max_length=DEFAULT_MAX_LENGTH, mix_basis=True):
    """A random translate of the canonical plane of ``orbit``, in a random basis."""
    p1, p2 = (CubicForm(c) for c in CANONICAL[orbit])
    W = Lagrangian(p1, p2).transform(random_mobius(rng, max_length))
    if not mix_basis:
        return W
    a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    while abs(np.linalg.det(a)) < 0.1:
        a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    b1, b2 = (b.coeffs for b in W.basis)
    return Lagrangian(a[0, 0] * b1 + a[0, 1] * b2, a[1, 0] * b1 + a[1, 1] * b2)


def random_tetra(rng, max_length=DEFAULT_MAX_LENGTH):
    """Decorated Moebius image of the standard tetrahedron."""
    return dual_tetra(STANDARD_TETRA.transform(random_mobius(rng, max_length)))


def random_tetra_at_origin(rng):
    """Uniformly rotated regular tetrahedron with barycenter ``(0, 1)``."""
    to_origin = Mobius(np.diag([2**-0.25, 2**0.25]))  # (0, sqrt2) -> (0, 1)
    g = Mobius(random_su2(rng)) @ to_origin
    return dual_tetra(STANDARD_TETRA.transform(g))


def random_bottom_vertex(rng, c, spread=1.0):
    """A point strictly below the level ``c + ETA_B_O``."""
    h = c + ETA_B_O - 1e-3 - rng.exponential(spread)
    angle = rng.uniform(0, 2 * math.pi)
    w = math.exp(h) * complex(math.cos(angle), math.sin(angle))
    p = mobius_apply(AXIS_CHART.inverse(), ProjPoint(w, 1))
    return MINUS_I if p == MINUS_I else p
