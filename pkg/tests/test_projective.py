import cmath
import math

import numpy as np
import pytest

from lagtetra.errors import DegenerateInput
from lagtetra.projective import (
    INF,
    OMEGA_GRAM,
    ONE,
    REGULAR_SHAPE,
    ZERO,
    Mobius,
    ProjPoint,
    chordal,
    cross_ratio,
    mobius_apply,
    mobius_fixing_triple,
    sym3,
)
from lagtetra.sampling import random_mobius, random_point
from lagtetra.tolerance import tolerance

CBRT2 = 2 ** (1 / 3)


def test_normalization_makes_larger_coordinate_one():
    p = ProjPoint(2j, 1)
    assert p.a == 1 and abs(p.b - (-0.5j)) < 1e-15
    q = ProjPoint(0.5, 4 - 4j)
    assert q.b == 1


def test_equality_is_projective():
    p = ProjPoint(1 + 2j, 3 - 1j)
    lam = 0.3 - 7j
    assert p == ProjPoint(lam * (1 + 2j), lam * (3 - 1j))
    assert p != ProjPoint(1, 3)


def test_zero_vector_rejected():
    with pytest.raises(DegenerateInput):
        ProjPoint(0, 0)


def test_identity_fixes_infinity():
    assert mobius_apply(Mobius.identity(), INF) == INF


def test_rotation_swaps_zero_and_infinity():
    assert mobius_apply(Mobius([[0, -1], [1, 0]]), INF) == ZERO


def test_diagonal_scales_by_exp_lambda():
    lam, z = 0.7, 0.3 + 0.4j
    g = Mobius([[math.exp(lam / 2), 0], [0, math.exp(-lam / 2)]])
    assert abs(mobius_apply(g, ProjPoint(z, 1)).to_complex() - math.exp(lam) * z) < 1e-14


def test_determinant_normalized_to_one():
    g = Mobius([[2, 1], [3, 4j]])
    assert abs(g.det - 1) < 1e-14


def test_cross_ratio_normalization_triple():
    z = 0.2 - 1.3j
    assert abs(cross_ratio(INF, ZERO, ONE, ProjPoint(z, 1)) - z) < 1e-14


def test_cross_ratio_of_open_orbit_double_roots():
    w = cmath.exp(2j * math.pi / 3)
    pts = [ProjPoint(0, 1), ProjPoint(CBRT2, 1), ProjPoint(CBRT2 / w, 1), ProjPoint(CBRT2 * w, 1)]
    # with A(z1, z2, z3) = (inf, 0, 1) this ordering is negatively oriented
    assert abs(cross_ratio(*pts) - REGULAR_SHAPE.conjugate()) < 1e-12
    pts[2], pts[3] = pts[3], pts[2]
    assert abs(cross_ratio(*pts) - REGULAR_SHAPE) < 1e-12


def test_regular_shape_is_fixed_by_three_cycles():
    z = REGULAR_SHAPE
    assert abs(1 - 1 / z - z) < 1e-15 and abs(1 / (1 - z) - z) < 1e-15


def test_three_cycle_of_last_entries_stays_in_orbit():
    rng = np.random.default_rng(0)
    for _ in range(50):
        p = [random_point(rng) for _ in range(4)]
        z = cross_ratio(*p)
        w = cross_ratio(p[0], p[2], p[3], p[1])
        assert min(abs(w - v) for v in (z, 1 - 1 / z, 1 / (1 - z))) < 1e-9


def test_cross_ratio_invariant_under_mobius():
    rng = np.random.default_rng(1)
    for _ in range(200):
        g = random_mobius(rng)
        p = [random_point(rng) for _ in range(4)]
        a, b = cross_ratio(*p), cross_ratio(*(mobius_apply(g, x) for x in p))
        assert abs(a - b) <= 1e-9 * abs(a)


def test_cross_ratio_rejects_coincident_points():
    with pytest.raises(DegenerateInput):
        cross_ratio(ZERO, ZERO, ONE, INF)


def test_sym3_identity():
    assert np.allclose(sym3(Mobius.identity()), np.eye(4))


def test_sym3_diagonal_moves_roots_forward():
    # p -> p o g^{-1}: X^3 picks up t^{-3}, Y^3 picks up t^3
    t = 1.7
    assert np.allclose(sym3(Mobius.diag(t)), np.diag([t**-3, t**-1, t, t**3]))


def test_sym3_transports_roots():
    rng = np.random.default_rng(2)
    g = random_mobius(rng)
    r = random_point(rng)
    lin = np.array([r.b, -r.a])
    cube = np.convolve(np.convolve(lin, lin), lin)
    moved = sym3(g) @ cube
    s = mobius_apply(g, r)
    vals = [moved[k] * s.a ** (3 - k) * s.b**k for k in range(4)]
    assert abs(sum(vals)) < 1e-9 * np.linalg.norm(moved)


def test_sym3_is_symplectic_and_homomorphic():
    rng = np.random.default_rng(3)
    for _ in range(100):
        g, h = random_mobius(rng), random_mobius(rng)
        m = sym3(g)
        assert np.abs(m.T @ OMEGA_GRAM @ m - OMEGA_GRAM).max() < 1e-10 * max(1, np.abs(m).max() ** 2)
        lhs, rhs = sym3(g @ h), m @ sym3(h)
        assert min(np.abs(lhs - rhs).max(), np.abs(lhs + rhs).max()) < 1e-9 * np.abs(lhs).max()


def test_fixing_triple_identity_and_inversion():
    g = mobius_fixing_triple(INF, ZERO, ONE, INF, ZERO, ONE)
    assert g.close_to(Mobius.identity())
    h = mobius_fixing_triple(INF, ZERO, ONE, ZERO, INF, ONE)
    assert h.close_to(Mobius([[0, 1], [1, 0]]))


def test_fixing_triple_cayley_type():
    src = [ProjPoint(1, 1), ProjPoint(1j, 1), ProjPoint(-1, 1)]
    g = mobius_fixing_triple(*src, INF, ZERO, ONE)
    for p, q in zip(src, (INF, ZERO, ONE)):
        assert chordal(mobius_apply(g, p), q) < 1e-12


def test_tolerance_context_is_scoped():
    p, q = ProjPoint(1, 1), ProjPoint(1 + 1e-7, 1)
    assert p != q
    with tolerance(tol=1e-6):
        assert p == q
    assert p != q
