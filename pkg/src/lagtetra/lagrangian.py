"""Lagrangian planes in the space of binary cubics.

Covers Pluecker coordinates, the discriminant pencil, the classification
into the three SL(2, C)-orbits and the Veronese curves.
"""

import enum
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import Polynomial

from .errors import DegenerateInput, NotLagrangian, NotOnQuadric, NumericalDegeneracy
from .forms import (
    CubicForm,
    deflate,
    discriminant,
    evaluate,
    form_product,
    homogeneous_roots,
    linear_form,
    omega,
)
from .projective import ProjPoint, chordal, sym3
from .tolerance import get_cluster_tol, get_tol

__all__ = [
    "Lagrangian",
    "OrbitTag",
    "OrbitClass",
    "PencilRoot",
    "plucker_of",
    "plucker_distance",
    "lagrangian_from_plucker",
    "pencil_double_roots",
    "jacobian_quartic",
    "sylvester",
    "classify_orbit",
    "in_KR",
    "in_Omega",
    "veronese1",
    "veronese2",
    "orthogonal_point",
    "second_point",
    "discriminant_vanishes",
]

PLUCKER_PAIRS = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def plucker_of(p1, p2):
    """Minors ``(W12, W13, W14, W23, W24, W34)`` of the 4x2 matrix ``[p1 p2]``."""
    return np.array([p1[i] * p2[j] - p1[j] * p2[i] for i, j in PLUCKER_PAIRS], dtype=complex)


def plucker_distance(w1, w2):
    """Projective (chordal) distance between two Pluecker vectors."""
    u = np.asarray(w1, dtype=complex)
    v = np.asarray(w2, dtype=complex)
    u = u / np.linalg.norm(u)
    v = v / np.linalg.norm(v)
    # norm of the component of u orthogonal to v; avoids 1 - cos^2 cancellation
    return float(np.linalg.norm(u - np.vdot(v, u) * v))


class Lagrangian:
    """A 2-plane of cubic forms on which omega vanishes."""

    __slots__ = ("basis", "plucker")

    def __init__(self, p1, p2, tol=None):
        tol = get_tol(tol)
        c1 = p1.coeffs if isinstance(p1, CubicForm) else np.asarray(p1, dtype=complex)
        c2 = p2.coeffs if isinstance(p2, CubicForm) else np.asarray(p2, dtype=complex)
        n1, n2 = np.linalg.norm(c1), np.linalg.norm(c2)
        if n1 == 0 or n2 == 0 or not (np.isfinite(n1) and np.isfinite(n2)):
            raise DegenerateInput("basis vectors must be nonzero and finite")
        w = plucker_of(c1, c2)
        if np.linalg.norm(w) < tol * n1 * n2:
            raise DegenerateInput("basis vectors are linearly dependent")
        if abs(omega(c1, c2)) > tol * n1 * n2:
            raise NotLagrangian(f"omega(p1, p2) = {omega(c1, c2):.3g}")
        object.__setattr__(self, "basis", (CubicForm(c1), CubicForm(c2)))
        w.setflags(write=False)
        object.__setattr__(self, "plucker", w)

    def __setattr__(self, name, value):
        raise AttributeError("Lagrangian is immutable")

    @property
    def matrix(self):
        """4x2 matrix with the basis as columns."""
        return np.column_stack([self.basis[0].coeffs, self.basis[1].coeffs])

    def orthonormal_basis(self):
        q, _ = np.linalg.qr(self.matrix)
        return q[:, 0], q[:, 1]

    def transform(self, g):
        m = sym3(g)
        return Lagrangian(m @ self.basis[0].coeffs, m @ self.basis[1].coeffs)

    def same_plane(self, other, tol=1e-8):
        return plucker_distance(self.plucker, other.plucker) < tol

    def contains(self, p, tol=None):
        tol = get_tol(tol)
        c = p.coeffs if isinstance(p, CubicForm) else np.asarray(p, dtype=complex)
        q1, q2 = self.orthonormal_basis()
        residual = c - np.vdot(q1, c) * q1 - np.vdot(q2, c) * q2
        return np.linalg.norm(residual) < tol * max(1.0, np.linalg.norm(c))

    def __repr__(self):
        return f"Lagrangian({self.basis[0]!r}, {self.basis[1]!r})"


def lagrangian_from_plucker(w, tol=None):
    """Rebuild a basis of the plane encoded by a Pluecker vector."""
    tol = get_tol(tol)
    w = np.asarray(w, dtype=complex).reshape(6)
    scale = np.linalg.norm(w)
    if scale == 0:
        raise DegenerateInput("zero Pluecker vector")
    w = w / scale
    w12, w13, w14, w23, w24, w34 = w
    if abs(w12 * w34 - w13 * w24 + w14 * w23) > tol:
        raise NotOnQuadric("Pluecker relation fails")
    if abs(w14 - w23 / 3) > tol:
        raise NotLagrangian("W14 - W23/3 does not vanish")
    # the plane is the image of the antisymmetric matrix W acting on C^4
    big = np.zeros((4, 4), dtype=complex)
    for value, (i, j) in zip(w, PLUCKER_PAIRS):
        big[i, j] = value
        big[j, i] = -value
    u, _, _ = np.linalg.svd(big)
    p1, p2 = u[:, 0], u[:, 1]
    # fix the scale so that plucker(result) is the input up to a positive real
    got = plucker_of(p1, p2)
    k = int(np.argmax(np.abs(w)))
    p2 = p2 * (w[k] / got[k]) * scale
    return Lagrangian(p1, p2)


@dataclass(frozen=True)
class PencilRoot:
    """A member of the pencil with a double root."""

    pencil_point: ProjPoint
    double_root: ProjPoint
    single_root: ProjPoint

    def __iter__(self):
        return iter((self.pencil_point, self.double_root, self.single_root))


def _pencil_quartic(p1, p2):
    """Coefficients of ``disc(alpha p1 + beta p2)`` from ``alpha^4`` down to ``beta^4``."""
    polys = [Polynomial([b, a]) for a, b in zip(p1, p2)]
    al, be, ga, de = polys
    disc = (
        be**2 * ga**2
        - 4 * al * ga**3
        - 4 * de * be**3
        - 27 * al**2 * de**2
        + 18 * al * be * ga * de
    )
    coef = np.zeros(5, dtype=complex)
    coef[: len(disc.coef)] = disc.coef
    return coef[::-1]


def _derivatives(q):
    a, b, c, d = q
    q_x = np.array([3 * a, 2 * b, c])
    q_y = np.array([b, 2 * c, 3 * d])
    return q_x, q_y


def _unit_centroid(p, q):
    u, v = p.unit, q.unit
    phase = np.vdot(u, v)
    if abs(phase) > 0:
        v = v * (abs(phase) / phase)
    m = u + v
    return ProjPoint(m[0], m[1])


def pencil_double_roots(W, cluster_tol=None):
    """Members of the pencil of ``W`` having a double (not triple) root.

    Returns ``PencilRoot`` entries ``(pencil point [alpha:beta], double root,
    single root)`` where the member is ``alpha p1 + beta p2`` for the stored
    basis.  For the open orbit there are exactly four.

    The discriminant quartic locates the members; each member's root
    cluster is then matched to a simple root of the Jacobian quartic, which
    carries the double root to full precision, and the pencil point is
    recomputed from it.
    """
    cluster_tol = get_cluster_tol(cluster_tol)
    scale = max(b.norm() for b in W.basis)
    p1, p2 = (b.coeffs / scale for b in W.basis)
    quartic = _pencil_quartic(p1, p2)
    if np.linalg.norm(quartic) < 1e-12:
        raise NumericalDegeneracy("every member of the pencil has a repeated root")
    jac = jacobian_quartic(p1, p2)
    jac_roots = homogeneous_roots(jac)
    out = []
    used = set()
    for pt in homogeneous_roots(quartic):
        al, be = pt.unit
        q = al * p1 + be * p2
        q = q / np.linalg.norm(q)
        roots = homogeneous_roots(q)
        pairs = [(chordal(roots[i], roots[j]), i, j) for i, j in ((0, 1), (0, 2), (1, 2))]
        gap, i, j = min(pairs)
        k = 3 - i - j
        if chordal(roots[k], roots[i]) < cluster_tol and chordal(roots[k], roots[j]) < cluster_tol:
            continue  # triple root
        guess = _unit_centroid(roots[i], roots[j])
        dists = sorted((chordal(guess, r), n) for n, r in enumerate(jac_roots))
        if dists[0][0] > max(gap, cluster_tol) or dists[1][0] < 10 * dists[0][0]:
            raise NumericalDegeneracy("double root of a pencil member is not isolated")
        if dists[0][1] in used:
            raise NumericalDegeneracy("two pencil members share a double root")
        used.add(dists[0][1])
        double = jac_roots[dists[0][1]]
        v1, v2 = evaluate(p1, double), evaluate(p2, double)
        if max(abs(v1), abs(v2)) < cluster_tol**2:
            raise NumericalDegeneracy("double root is a common root of the pencil")
        pencil = ProjPoint(v2, -v1)
        al, be = pencil.unit
        q = al * p1 + be * p2
        lin = deflate(q, form_product([linear_form(double)] * 2))
        single = ProjPoint(-lin[1], lin[0])
        out.append(PencilRoot(pencil, double, single))
    return out


def jacobian_quartic(p1, p2):
    """``dp1/dX dp2/dY - dp1/dY dp2/dX``; its roots are the double roots of the pencil."""
    p1x, p1y = _derivatives(p1)
    p2x, p2y = _derivatives(p2)
    return np.convolve(p1x, p2y) - np.convolve(p1y, p2x)


def sylvester(p1, p2):
    """6x6 Sylvester matrix; rows are ``X^2 p, XY p, Y^2 p`` for both cubics."""
    s = np.zeros((6, 6), dtype=complex)
    for r, p in enumerate((p1, p2)):
        for shift in range(3):
            s[3 * r + shift, shift : shift + 4] = p
    return s


class OrbitTag(enum.Enum):
    CLOSED = "Closed"
    INTERMEDIATE = "Intermediate"
    OPEN = "Open"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class OrbitClass:
    """Orbit tag plus, in K_C, the common root and its multiplicity in the gcd."""

    tag: OrbitTag
    witness: ProjPoint | None = None
    multiplicity: int = 0
    resultant: float = 0.0


def _veronese_ratio(vectors):
    """The point ``[a:b]`` with ``vectors`` spanning the osculating space at it.

    Each null vector of the Sylvester matrix is a combination of
    ``(a^5, a^4 b, ..., b^5)`` and its derivatives, so shifting by one slot
    multiplies by ``b/a`` up to a nilpotent part; the mean eigenvalue of
    the shift operator is therefore the ratio itself.
    """
    best = None
    for flip in (False, True):
        n = vectors[::-1] if flip else vectors
        lower, upper = n[:-1], n[1:]
        cond = np.linalg.svd(lower, compute_uv=False)[-1]
        if best is None or cond > best[0]:
            shift, *_ = np.linalg.lstsq(lower, upper, rcond=None)
            best = (cond, flip, np.trace(shift) / shift.shape[0])
    _, flip, ratio = best
    return ProjPoint(1.0, ratio) if not flip else ProjPoint(ratio, 1.0)


def classify_orbit(W, tol=None, cluster_tol=None):
    """Place ``W`` in one of the three SL(2, C)-orbits.

    The resultant of an orthonormal basis separates the open orbit from
    K_C.  Inside K_C the next singular value of the Sylvester matrix,
    which scales like the squared distance between the common root and
    the remaining double root, separates the closed orbit.
    """
    tol = get_tol(tol)
    cluster_tol = get_cluster_tol(cluster_tol)
    q1, q2 = W.orthonormal_basis()
    syl = sylvester(q1, q2)
    res = abs(np.linalg.det(syl))
    if res > 10 * tol:
        return OrbitClass(OrbitTag.OPEN, resultant=res)
    if res >= tol:
        raise NumericalDegeneracy(f"resultant {res:.3e} lies in the ambiguity band")
    _, sing, vh = np.linalg.svd(syl)
    second = sing[-2]
    if second < cluster_tol**2:
        tag, k = OrbitTag.CLOSED, 2
    elif second > 10 * cluster_tol**2:
        tag, k = OrbitTag.INTERMEDIATE, 1
    else:
        raise NumericalDegeneracy("common root and second point are too close to separate")
    null = vh[-k:].conj().T
    witness = _veronese_ratio(null)
    return OrbitClass(tag, witness, k, res)


def second_point(W, witness):
    """The remaining root of the Jacobian quartic after removing the witness cubed."""
    q1, q2 = W.orthonormal_basis()
    jac = jacobian_quartic(q1, q2)
    lin = deflate(jac, form_product([linear_form(witness)] * 3))
    return ProjPoint(-lin[1], lin[0])


def in_KR(W, tol=None):
    """K_C with a real degenerate barycenter."""
    tol = get_tol(tol)
    cls = classify_orbit(W)
    if cls.tag is OrbitTag.OPEN:
        return False
    return bool(chordal(cls.witness, cls.witness.conj()) < max(tol, 1e-9))


def in_Omega(W, tol=None):
    return not in_KR(W, tol)


def orthogonal_point(t):
    """The antipode of ``t`` on the Riemann sphere, ``[-conj b : conj a]``."""
    return ProjPoint(-np.conj(t.b), np.conj(t.a))


def veronese1(t):
    return CubicForm(form_product([linear_form(t)] * 3))


def veronese2(t, aux=None, tol=None):
    aux = orthogonal_point(t) if aux is None else aux
    if chordal(t, aux) < get_tol(tol):
        raise DegenerateInput("auxiliary point must differ from t")
    lt = linear_form(t)
    return Lagrangian(
        form_product([lt, lt, lt]),
        form_product([linear_form(aux), lt, lt]),
    )


def discriminant_vanishes(p, tol=None):
    """Scale-invariant test for a repeated root."""
    tol = get_tol(tol)
    c = p.coeffs if isinstance(p, CubicForm) else np.asarray(p, dtype=complex)
    return abs(discriminant(c / np.linalg.norm(c))) < tol
