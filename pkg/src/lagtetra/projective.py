"""Points of CP^1, Moebius transformations and the Sym^3 representation.

A point ``[a:b]`` is the complex number ``a/b`` (``[1:0]`` is infinity).
Moebius maps act on column vectors ``(a, b)``.  Cubic forms are stored by
their coefficients in the monomial basis ``(X^3, X^2 Y, X Y^2, Y^3)`` and
``[a:b]`` is a root of ``p`` when ``p(a, b) = 0``; with this convention
``sym3(g)`` sends ``p`` to ``p o g^{-1}``, which moves roots by ``g``.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateInput
from .tolerance import get_tol

__all__ = [
    "ProjPoint",
    "Mobius",
    "INF",
    "ZERO",
    "ONE",
    "OMEGA_GRAM",
    "chordal",
    "mobius_apply",
    "cross_ratio",
    "sym3",
    "mobius_fixing_triple",
    "REGULAR_SHAPE",
]

# shape of a positively ordered regular ideal tetrahedron
REGULAR_SHAPE = complex(0.5, -math.sqrt(3) / 2)

# Gram matrix of the symplectic form on cubic forms: omega(p, q) = p^T J q
OMEGA_GRAM = np.array(
    [
        [0, 0, 0, 1],
        [0, 0, -1 / 3, 0],
        [0, 1 / 3, 0, 0],
        [-1, 0, 0, 0],
    ],
    dtype=complex,
)


@dataclass(frozen=True, eq=False)
class ProjPoint:
    """A point ``[a:b]`` of CP^1, stored in canonical normalized form.

    The larger-modulus coordinate is made real positive and equal to 1.
    Equality is projective up to the current tolerance.
    """

    a: complex
    b: complex

    def __post_init__(self):
        a, b = complex(self.a), complex(self.b)
        if not (cmath.isfinite(a) and cmath.isfinite(b)):
            raise DegenerateInput("homogeneous coordinates must be finite")
        if abs(a) >= abs(b):
            if a == 0:
                raise DegenerateInput("[0:0] is not a point of CP^1")
            a, b = 1.0 + 0j, b / a
        else:
            a, b = a / b, 1.0 + 0j
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def from_complex(cls, z):
        if z is None or (isinstance(z, float) and math.isinf(z)):
            return INF
        return cls(complex(z), 1.0)

    @property
    def vec(self):
        return np.array([self.a, self.b], dtype=complex)

    @property
    def unit(self):
        v = self.vec
        return v / np.linalg.norm(v)

    def is_infinity(self, tol=None):
        return chordal(self, INF) < get_tol(tol)

    def to_complex(self):
        """Affine coordinate ``a/b``; ``complex('inf')`` at infinity."""
        if self.b == 0:
            return complex(math.inf, 0.0)
        return self.a / self.b

    def conj(self):
        return ProjPoint(self.a.conjugate(), self.b.conjugate())

    def equals(self, other, tol=None):
        return chordal(self, other) < get_tol(tol)

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.equals(other)

    def __hash__(self):
        return hash(self.key())

    def key(self, digits=8):
        return (
            round(self.a.real, digits),
            round(self.a.imag, digits),
            round(self.b.real, digits),
            round(self.b.imag, digits),
        )

    def __repr__(self):
        if abs(self.b) < 1e-12:
            return "ProjPoint(inf)"
        return f"ProjPoint({self.to_complex():.12g})"


INF = ProjPoint(1.0, 0.0)
ZERO = ProjPoint(0.0, 1.0)
ONE = ProjPoint(1.0, 1.0)


def chordal(p, q):
    """Chordal distance on CP^1 (sine of the angle between the lines)."""
    u, v = p.vec, q.vec
    return abs(u[0] * v[1] - u[1] * v[0]) / (np.linalg.norm(u) * np.linalg.norm(v))


def _as_point(p):
    return p if isinstance(p, ProjPoint) else ProjPoint.from_complex(p)


class Mobius:
    """An element of SL(2, C), normalized to determinant one."""

    __slots__ = ("m",)

    def __init__(self, m):
        m = np.array(m, dtype=complex).reshape(2, 2)
        det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        if abs(det) == 0 or not np.all(np.isfinite(m)):
            raise DegenerateInput("singular matrix is not a Moebius map")
        root = cmath.sqrt(det)  # principal branch: argument in (-pi/2, pi/2]
        m = m / root
        m.setflags(write=False)
        object.__setattr__(self, "m", m)

    def __setattr__(self, name, value):
        raise AttributeError("Mobius is immutable")

    @classmethod
    def from_sl2(cls, m):
        """Wrap a matrix already known to have determinant one.

        Skips renormalization, which would divide by a determinant that
        cancels catastrophically for long translations.
        """
        g = object.__new__(cls)
        m = np.array(m, dtype=complex).reshape(2, 2)
        m.setflags(write=False)
        object.__setattr__(g, "m", m)
        return g

    @classmethod
    def identity(cls):
        return cls(np.eye(2))

    @classmethod
    def diag(cls, t):
        return cls([[t, 0], [0, 1 / t]])

    @property
    def det(self):
        m = self.m
        return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]

    def is_real(self, tol=None):
        tol = get_tol(tol)
        m = self.m
        # PSL ambiguity: a real map may come out multiplied by i
        return bool(np.all(np.abs(m.imag) < tol) or np.all(np.abs(m.real) < tol))

    def inverse(self):
        a, b, c, d = self.m.ravel()
        return Mobius.from_sl2([[d, -b], [-c, a]])

    def __matmul__(self, other):
        if isinstance(other, Mobius):
            return Mobius.from_sl2(self.m @ other.m)
        if isinstance(other, ProjPoint):
            return mobius_apply(self, other)
        return NotImplemented

    def __call__(self, p):
        return mobius_apply(self, _as_point(p))

    def close_to(self, other, tol=None):
        """Equality in PSL(2, C)."""
        tol = get_tol(tol)
        d1 = np.max(np.abs(self.m - other.m))
        d2 = np.max(np.abs(self.m + other.m))
        return min(d1, d2) < tol * max(1.0, np.max(np.abs(self.m)))

    def __repr__(self):
        return f"Mobius({self.m.tolist()})"


def mobius_apply(g, p):
    v = g.m @ _as_point(p).vec
    return ProjPoint(v[0], v[1])


def _bracket(p, q):
    # a_p b_q - a_q b_p
    return p.a * q.b - q.a * p.b


def cross_ratio(z1, z2, z3, z4, tol=None):
    """``(z3-z1)(z4-z2) / ((z3-z2)(z4-z1))`` on homogeneous coordinates.

    The map ``z1, z2, z3 -> inf, 0, 1`` sends ``z4`` to this value.
    """
    pts = [_as_point(z) for z in (z1, z2, z3, z4)]
    tol = get_tol(tol)
    for i in range(4):
        for j in range(i + 1, 4):
            if chordal(pts[i], pts[j]) < tol:
                raise DegenerateInput(f"points {i} and {j} coincide")
    z1, z2, z3, z4 = pts
    return (_bracket(z3, z1) * _bracket(z4, z2)) / (_bracket(z3, z2) * _bracket(z4, z1))


def sym3(g):
    """4x4 matrix of ``p -> p o g^{-1}`` on cubic coefficient vectors."""
    h = g.inverse().m
    x_image = h[0]  # X -> alpha X + beta Y
    y_image = h[1]  # Y -> gamma X + delta Y
    cols = []
    for k in range(4):
        poly = np.array([1.0 + 0j])
        for _ in range(3 - k):
            poly = np.convolve(poly, x_image)
        for _ in range(k):
            poly = np.convolve(poly, y_image)
        cols.append(poly)
    return np.array(cols, dtype=complex).T


def _to_standard(p1, p2, p3):
    """Matrix sending p1, p2, p3 to inf, 0, 1 (not normalized)."""
    f1_p3 = _bracket(p3, p1)
    f2_p3 = _bracket(p3, p2)
    # v -> (f2(v) f1(p3) : f1(v) f2(p3)), f_i(v) = det[v; p_i]
    return np.array(
        [
            [f1_p3 * p2.b, -f1_p3 * p2.a],
            [f2_p3 * p1.b, -f2_p3 * p1.a],
        ]
    )


def mobius_fixing_triple(p1, p2, p3, q1, q2, q3, tol=None):
    """The unique Moebius map with ``g(p_i) = q_i``."""
    ps = [_as_point(p) for p in (p1, p2, p3)]
    qs = [_as_point(q) for q in (q1, q2, q3)]
    tol = get_tol(tol)
    for tri in (ps, qs):
        for i in range(3):
            for j in range(i + 1, 3):
                if chordal(tri[i], tri[j]) < tol:
                    raise DegenerateInput("triple is not pairwise distinct")
    a = _to_standard(*ps)
    b = _to_standard(*qs)
    return Mobius(np.linalg.solve(b, a))
