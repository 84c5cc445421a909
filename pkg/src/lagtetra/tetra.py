"""Regular ideal tetrahedra and their correspondence with Lagrangian planes.

Every regular tetrahedron is a Moebius image of the standard one
``{inf, -1, (1 + sqrt3 i)/2, (1 - sqrt3 i)/2}`` whose barycenter is
``(0, sqrt2)`` and whose central symmetry acts on the boundary by
``z -> -2/conj(z)``.  All constructions go through that standard position.
"""

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateInput, NotRegular
from .forms import form_product, linear_form
from .hyperbolic import H3Point, poincare_extend, reflect_iota
from .lagrangian import (
    Lagrangian,
    OrbitTag,
    classify_orbit,
    orthogonal_point,
    pencil_double_roots,
    second_point,
)
from .projective import (
    INF,
    REGULAR_SHAPE,
    ProjPoint,
    chordal,
    cross_ratio,
    mobius_apply,
    mobius_fixing_triple,
)
from .tolerance import get_tol

__all__ = [
    "IdealTetra",
    "DecoratedTetra",
    "DegenTetra",
    "STANDARD_TETRA",
    "REGULARITY_TOL",
    "barycenter",
    "dual_tetra",
    "decorate",
    "face_distances",
    "g_map",
    "g_inverse",
    "project_Q",
    "to_standard",
]

REGULARITY_TOL = 1e-8

_OMEGA_PLUS = complex(0.5, math.sqrt(3) / 2)
_STANDARD = (INF, ProjPoint(-1, 1), ProjPoint(_OMEGA_PLUS, 1), ProjPoint(_OMEGA_PLUS.conjugate(), 1))
_STANDARD_BARYCENTER = H3Point(0j, math.sqrt(2))


def _standard_antipode(p):
    """Boundary action of the central symmetry at ``(0, sqrt2)``: ``z -> -2/conj(z)``."""
    return ProjPoint(-2 * np.conj(p.b), np.conj(p.a))


class IdealTetra:
    """Four distinct ideal points with regular shape.

    Vertices are kept in an order whose cross-ratio is the positive shape
    ``(1 - sqrt3 i)/2``; the reversed orientation is fixed by swapping the
    last two vertices.
    """

    __slots__ = ("vertices", "_swapped")

    def __init__(self, vertices, tol=None, regular_tol=REGULARITY_TOL):
        vs = tuple(v if isinstance(v, ProjPoint) else ProjPoint.from_complex(v) for v in vertices)
        if len(vs) != 4:
            raise DegenerateInput("a tetrahedron has four vertices")
        cr = cross_ratio(*vs, tol=get_tol(tol))
        swapped = False
        if abs(cr - REGULAR_SHAPE) < regular_tol:
            pass
        elif abs(cr - REGULAR_SHAPE.conjugate()) < regular_tol:
            vs = (vs[0], vs[1], vs[3], vs[2])
            swapped = True
        else:
            raise NotRegular(f"cross-ratio {cr:.6g} is not regular")
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "_swapped", swapped)

    def __setattr__(self, name, value):
        raise AttributeError("IdealTetra is immutable")

    @property
    def shape(self):
        return cross_ratio(*self.vertices)

    def transform(self, g):
        return IdealTetra([mobius_apply(g, v) for v in self.vertices])

    def reflect(self):
        return IdealTetra([v.conj() for v in self.vertices])

    def same_as(self, other, tol=1e-8):
        """Equality as unordered vertex sets."""
        return _same_set(self.vertices, other.vertices, tol)

    def __iter__(self):
        return iter(self.vertices)

    def __repr__(self):
        return f"IdealTetra({list(self.vertices)!r})"


def _same_set(xs, ys, tol):
    remaining = list(ys)
    for x in xs:
        k = min(range(len(remaining)), key=lambda n: chordal(x, remaining[n]))
        if chordal(x, remaining[k]) >= tol:
            return False
        remaining.pop(k)
    return True


STANDARD_TETRA = IdealTetra(_STANDARD)


def to_standard(tetra, tol=None):
    """Moebius map sending the tetrahedron onto the standard one, vertex by vertex.

    Returns ``(g, order)`` where ``g(tetra.vertices[order[k]])`` is the k-th
    standard vertex.
    """
    tol = get_tol(tol)
    vs = tetra.vertices
    for order in itertools.permutations(range(4)):
        g = mobius_fixing_triple(vs[order[0]], vs[order[1]], vs[order[2]], *_STANDARD[:3])
        if chordal(mobius_apply(g, vs[order[3]]), _STANDARD[3]) < max(tol, REGULARITY_TOL):
            return g, order
    raise NotRegular("no vertex ordering matches the standard tetrahedron")


def barycenter(tetra):
    g, _ = to_standard(tetra)
    return poincare_extend(g.inverse(), _STANDARD_BARYCENTER)


@dataclass(frozen=True)
class DecoratedTetra:
    """A regular tetrahedron with its dual; ``duals[k]`` is antipodal to ``vertices[k]``."""

    vertices: tuple
    duals: tuple
    barycenter: H3Point

    @property
    def tetra(self):
        return IdealTetra(self.vertices)

    @property
    def dual(self):
        return IdealTetra(self.duals)

    @property
    def pairing(self):
        return tuple(zip(self.vertices, self.duals))

    def transform(self, g):
        return DecoratedTetra(
            tuple(mobius_apply(g, v) for v in self.vertices),
            tuple(mobius_apply(g, d) for d in self.duals),
            poincare_extend(g, self.barycenter),
        )

    def reflect(self):
        return DecoratedTetra(
            tuple(v.conj() for v in self.vertices),
            tuple(d.conj() for d in self.duals),
            reflect_iota(self.barycenter),
        )

    def same_as(self, other, tol=1e-8):
        return _same_set(self.pairs_flat(), other.pairs_flat(), tol) and _same_set(
            self.vertices, other.vertices, tol
        )

    def pairs_flat(self):
        return self.vertices + self.duals

    def dual_of(self, vertex, tol=1e-8):
        for v, d in self.pairing:
            if chordal(v, vertex) < tol:
                return d
        raise KeyError(vertex)


def dual_tetra(tetra):
    """Decorate a tetrahedron with its barycenter and antipodal (dual) vertices."""
    if not isinstance(tetra, IdealTetra):
        tetra = IdealTetra(tetra)
    g, order = to_standard(tetra)
    ginv = g.inverse()
    duals = [None] * 4
    for k, idx in enumerate(order):
        duals[idx] = mobius_apply(ginv, _standard_antipode(_STANDARD[k]))
    return DecoratedTetra(tetra.vertices, tuple(duals), poincare_extend(ginv, _STANDARD_BARYCENTER))


decorate = dual_tetra


def face_distances(tetra, center=None):
    """Hyperbolic distance from the barycenter to each of the four face planes."""
    if not isinstance(tetra, IdealTetra):
        tetra = IdealTetra(tetra)
    center = barycenter(tetra) if center is None else center
    out = []
    vs = tetra.vertices
    for skip in range(4):
        u = [vs[k] for k in range(4) if k != skip]
        g = mobius_fixing_triple(u[0], u[1], u[2], ProjPoint(0, 1), ProjPoint(1, 1), INF)
        x = poincare_extend(g, center)
        out.append(math.asinh(abs(x.z.imag) / x.t))
    return out


@dataclass(frozen=True)
class DegenTetra:
    """A point of CP^1 x CP^1; ``first`` is the degenerate barycenter."""

    first: ProjPoint
    second: ProjPoint

    @property
    def diagonal(self):
        return chordal(self.first, self.second) < 1e-8

    def transform(self, g):
        return DegenTetra(mobius_apply(g, self.first), mobius_apply(g, self.second))

    def reflect(self):
        return DegenTetra(self.first.conj(), self.second.conj())

    def same_as(self, other, tol=1e-8):
        return chordal(self.first, other.first) < tol and chordal(self.second, other.second) < tol


def _lf(p):
    return linear_form(p)


def g_map(x, pair_indices=(0, 1), aux=None):
    """The Lagrangian of a decorated or degenerate tetrahedron."""
    if isinstance(x, DecoratedTetra):
        i, j = pair_indices
        if i == j:
            raise DegenerateInput("two distinct vertex pairs are needed")
        (v1, d1), (v2, d2) = x.pairing[i], x.pairing[j]
        return Lagrangian(
            form_product([_lf(v1), _lf(v1), _lf(d1)]),
            form_product([_lf(v2), _lf(v2), _lf(d2)]),
        )
    if isinstance(x, DegenTetra):
        a = _lf(x.first)
        if not x.diagonal:
            return Lagrangian(form_product([a, a, a]), form_product([a, _lf(x.second), _lf(x.second)]))
        aux = orthogonal_point(x.first) if aux is None else aux
        if chordal(aux, x.first) < 1e-8:
            raise DegenerateInput("auxiliary point coincides with the barycenter")
        return Lagrangian(form_product([a, a, a]), form_product([a, a, _lf(aux)]))
    raise TypeError(f"cannot map {type(x).__name__} to a Lagrangian")


def g_inverse(W):
    """Recover the (possibly degenerate) tetrahedron of a Lagrangian."""
    cls = classify_orbit(W)
    if cls.tag is OrbitTag.OPEN:
        entries = pencil_double_roots(W)
        if len(entries) != 4:
            raise NotRegular(f"expected four double roots, found {len(entries)}")
        vertices = [e.double_root for e in entries]
        duals = [e.single_root for e in entries]
        cr = cross_ratio(*vertices)
        if abs(cr - REGULAR_SHAPE) >= abs(cr - REGULAR_SHAPE.conjugate()):
            vertices[2], vertices[3] = vertices[3], vertices[2]
            duals[2], duals[3] = duals[3], duals[2]
        tetra = IdealTetra(vertices)
        return DecoratedTetra(tetra.vertices, tuple(duals), barycenter(tetra))
    if cls.tag is OrbitTag.CLOSED:
        return DegenTetra(cls.witness, cls.witness)
    return DegenTetra(cls.witness, second_point(W, cls.witness))


def project_Q(W):
    """Barycenter, or degenerate barycenter on the sphere at infinity."""
    x = g_inverse(W)
    if isinstance(x, DecoratedTetra):
        return x.barycenter
    return x.first

