import cmath
import math

import numpy as np
import pytest

from lagtetra.errors import NotRegular
from lagtetra.forms import X2Y, X3, XY2, Y3
from lagtetra.hyperbolic import H3Point, h3_distance, poincare_extend
from lagtetra.lagrangian import Lagrangian, plucker_distance
from lagtetra.projective import INF, REGULAR_SHAPE, ZERO, ProjPoint, chordal, cross_ratio, mobius_fixing_triple
from lagtetra.sampling import random_lagrangian, random_mobius, random_tetra
from lagtetra.tetra import (
    STANDARD_TETRA,
    DecoratedTetra,
    DegenTetra,
    IdealTetra,
    barycenter,
    dual_tetra,
    face_distances,
    g_inverse,
    g_map,
    project_Q,
)

CBRT2 = 2 ** (1 / 3)
CBRT4 = 4 ** (1 / 3)
S3 = math.sqrt(3)
OPEN_TETRA = IdealTetra([ZERO, ProjPoint(CBRT2, 1), ProjPoint((-1 - 1j * S3) / CBRT4, 1), ProjPoint((-1 + 1j * S3) / CBRT4, 1)])
OPEN_DUAL = [INF, ProjPoint(-1 / CBRT4, 1), ProjPoint((1 + 1j * S3) / (2 * CBRT4), 1), ProjPoint((1 - 1j * S3) / (2 * CBRT4), 1)]


def _same_set(xs, ys, tol=1e-9):
    return all(min(chordal(x, y) for y in ys) < tol for x in xs)


def test_non_regular_rejected():
    with pytest.raises(NotRegular):
        IdealTetra([INF, ZERO, ProjPoint(1, 1), ProjPoint(2, 1)])


def test_orientation_fixed_on_construction():
    assert abs(OPEN_TETRA.shape - REGULAR_SHAPE) < 1e-12


def test_standard_barycenter():
    b = barycenter(STANDARD_TETRA)
    assert abs(b.z) < 1e-10 and abs(b.t - math.sqrt(2)) < 1e-10


def test_open_example_barycenter():
    b = barycenter(OPEN_TETRA)
    assert abs(b.z) < 1e-12 and abs(b.t - 2 ** (-1 / 6)) < 1e-12


def test_standard_dual_follows_central_symmetry():
    D = dual_tetra(STANDARD_TETRA)
    expected = [ZERO, ProjPoint(2, 1), ProjPoint(-1 - 1j * S3, 1), ProjPoint(-1 + 1j * S3, 1)]
    assert _same_set(D.duals, expected)
    assert chordal(D.dual_of(INF), ZERO) < 1e-12
    assert chordal(D.dual_of(ProjPoint(-1, 1)), ProjPoint(2, 1)) < 1e-12


def test_open_example_dual():
    D = dual_tetra(OPEN_TETRA)
    for v, d in zip([ZERO, ProjPoint(CBRT2, 1), *OPEN_TETRA.vertices[2:]], [INF, OPEN_DUAL[1], None, None]):
        if d is not None:
            assert chordal(D.dual_of(v), d) < 1e-12
    assert _same_set(D.duals, OPEN_DUAL)


def test_pairing_geodesics_pass_through_barycenter():
    rng = np.random.default_rng(31)
    for _ in range(200):
        T = random_tetra(rng)
        for v, d in T.pairing:
            g = mobius_fixing_triple(v, d, T.vertices[0] if v != T.vertices[0] else T.vertices[1], INF, ZERO, ProjPoint(1, 1))
            x = poincare_extend(g, T.barycenter)
            assert abs(x.z) / x.t < 1e-9


def test_face_distance_is_log_sqrt2():
    rng = np.random.default_rng(32)
    for _ in range(200):
        for d in face_distances(random_tetra(rng).tetra):
            assert abs(d - math.log(math.sqrt(2))) < 1e-9


def test_barycenter_is_equivariant():
    rng = np.random.default_rng(33)
    for _ in range(100):
        g = random_mobius(rng)
        T = STANDARD_TETRA.transform(g)
        assert h3_distance(barycenter(T), poincare_extend(g, barycenter(STANDARD_TETRA))) < 1e-9


def test_g_map_examples():
    assert g_map(dual_tetra(OPEN_TETRA)).same_plane(Lagrangian(X2Y, X3 + Y3))
    assert g_map(DegenTetra(ZERO, INF)).same_plane(Lagrangian(X3, XY2))
    assert g_map(DegenTetra(ZERO, ZERO)).same_plane(Lagrangian(X3, X2Y))


def test_g_inverse_examples():
    T = g_inverse(Lagrangian(X2Y, X3 + Y3))
    assert isinstance(T, DecoratedTetra)
    assert _same_set(T.vertices, OPEN_TETRA.vertices)
    assert _same_set(T.duals, OPEN_DUAL)
    assert abs(cross_ratio(*T.vertices) - REGULAR_SHAPE) < 1e-9
    u = g_inverse(Lagrangian(X3, XY2))
    assert chordal(u.first, ZERO) < 1e-12 and chordal(u.second, INF) < 1e-12
    z = g_inverse(Lagrangian(X3, X2Y))
    assert chordal(z.first, ZERO) < 1e-12 and chordal(z.second, ZERO) < 1e-12


def test_project_Q_examples():
    b = project_Q(Lagrangian(X2Y, X3 + Y3))
    assert h3_distance(b, H3Point(0, 2 ** (-1 / 6))) < 1e-12
    assert chordal(project_Q(Lagrangian(X3, X2Y)), ZERO) < 1e-12


def test_round_trips():
    rng = np.random.default_rng(34)
    for _ in range(200):
        T = random_tetra(rng)
        back = g_inverse(g_map(T))
        assert back.same_as(T)
        assert h3_distance(back.barycenter, T.barycenter) < 1e-8
    for orbit in ("Closed", "Intermediate", "Open"):
        for _ in range(50):
            W = random_lagrangian(rng, orbit)
            assert plucker_distance(W.plucker, g_map(g_inverse(W)).plucker) < 1e-8


def test_dual_involution():
    rng = np.random.default_rng(35)
    T = random_tetra(rng)
    D = dual_tetra(T.dual)
    assert _same_set(D.duals, T.vertices, 1e-9)
