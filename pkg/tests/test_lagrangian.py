import math

import numpy as np
import pytest

from lagtetra.errors import DegenerateInput, NotLagrangian, NotOnQuadric
from lagtetra.forms import X2Y, X3, XY2, Y3, CubicForm
from lagtetra.lagrangian import (
    Lagrangian,
    OrbitTag,
    classify_orbit,
    in_KR,
    lagrangian_from_plucker,
    pencil_double_roots,
    plucker_distance,
    second_point,
    veronese1,
    veronese2,
)
from lagtetra.projective import INF, ONE, ZERO, Mobius, ProjPoint, chordal, cross_ratio, mobius_apply, mobius_fixing_triple
from lagtetra.sampling import random_lagrangian, random_mobius

CBRT2 = 2 ** (1 / 3)
CBRT4 = 4 ** (1 / 3)
OPEN = Lagrangian(X2Y, X3 + Y3)
CLOSED = Lagrangian(X3, X2Y)
INTERMEDIATE = Lagrangian(X3, XY2)


def _matches(points, expected, tol=1e-9):
    left = list(points)
    for e in expected:
        k = min(range(len(left)), key=lambda i: chordal(left[i], e))
        if chordal(left[k], e) > tol:
            return False
        left.pop(k)
    return True


def test_rejects_dependent_and_non_lagrangian_bases():
    with pytest.raises(DegenerateInput):
        Lagrangian(X3, 2 * X3)
    with pytest.raises(NotLagrangian):
        Lagrangian(X3, Y3)


def test_plucker_relations_hold():
    w = OPEN.plucker
    w12, w13, w14, w23, w24, w34 = w
    assert abs(w12 * w34 - w13 * w24 + w14 * w23) < 1e-14
    assert abs(w14 - w23 / 3) < 1e-14


def test_pencil_points_of_open_example():
    # pencil points [a:b] name the member a (X^3 + Y^3) + b X^2 Y
    entries = pencil_double_roots(Lagrangian(X3 + Y3, X2Y))
    assert len(entries) == 4
    expected = [
        ProjPoint(0, 1),
        ProjPoint(-CBRT4 / 3, 1),
        ProjPoint(1 / (3 * CBRT2) - 1j / (CBRT2 * math.sqrt(3)), 1),
        ProjPoint(1 / (3 * CBRT2) + 1j / (CBRT2 * math.sqrt(3)), 1),
    ]
    assert _matches([e.pencil_point for e in entries], expected)


def test_double_and_single_roots_of_open_example():
    entries = pencil_double_roots(OPEN)
    s3 = math.sqrt(3)
    doubles = [ZERO, ProjPoint(CBRT2, 1), ProjPoint((-1 - 1j * s3) / CBRT4, 1), ProjPoint((-1 + 1j * s3) / CBRT4, 1)]
    singles = [INF, ProjPoint(-1 / CBRT4, 1), ProjPoint((1 + 1j * s3) / (2 * CBRT4), 1), ProjPoint((1 - 1j * s3) / (2 * CBRT4), 1)]
    for d, s in zip(doubles, singles):
        e = min(entries, key=lambda e: chordal(e.double_root, d))
        assert chordal(e.double_root, d) < 1e-9
        assert chordal(e.single_root, s) < 1e-9


def test_canonical_orbits():
    assert classify_orbit(OPEN).tag is OrbitTag.OPEN
    c = classify_orbit(CLOSED)
    assert c.tag is OrbitTag.CLOSED and chordal(c.witness, ZERO) < 1e-12
    i = classify_orbit(INTERMEDIATE)
    assert i.tag is OrbitTag.INTERMEDIATE and chordal(i.witness, ZERO) < 1e-12
    assert chordal(second_point(INTERMEDIATE, i.witness), INF) < 1e-12


def test_random_translates_keep_their_orbit():
    rng = np.random.default_rng(11)
    for orbit in ("Closed", "Intermediate", "Open"):
        for _ in range(100):
            assert classify_orbit(random_lagrangian(rng, orbit)).tag.value == orbit


def test_regular_cross_ratio_of_double_roots():
    rng = np.random.default_rng(12)
    z0 = complex(0.5, -math.sqrt(3) / 2)
    for _ in range(100):
        roots = [e.double_root for e in pencil_double_roots(random_lagrangian(rng, "Open"))]
        cr = cross_ratio(*roots)
        assert min(abs(cr - z0), abs(cr - z0.conjugate())) < 1e-8


def test_in_KR_examples():
    assert in_KR(CLOSED)
    assert not in_KR(OPEN)
    g = mobius_fixing_triple(ZERO, INF, ONE, ProjPoint(1j, 1), INF, ProjPoint(1 + 1j, 1))
    assert not in_KR(CLOSED.transform(g))


def test_veronese_examples():
    assert np.allclose(veronese1(ZERO).coeffs, X3.coeffs)
    assert CLOSED.same_plane(veronese2(ZERO, INF))
    assert CLOSED.same_plane(veronese2(ZERO, ONE))


def test_from_plucker_round_trip_and_errors():
    w = CLOSED.plucker
    assert CLOSED.same_plane(lagrangian_from_plucker(w))
    assert OPEN.same_plane(lagrangian_from_plucker(3.5j * OPEN.plucker))
    bad = np.array(OPEN.plucker, dtype=complex)
    bad[5] += 1e-3 * np.linalg.norm(bad)  # W34 pairs with the nonzero W12
    with pytest.raises(NotOnQuadric):
        lagrangian_from_plucker(bad)


def test_plucker_distance_is_projective():
    w = OPEN.plucker
    assert plucker_distance(w, (2 - 1j) * w) < 1e-15
    assert plucker_distance(w, CLOSED.plucker) > 0.1
