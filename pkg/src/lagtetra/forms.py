"""Binary forms: cubic coefficient vectors, roots, discriminant and omega.

A binary form of degree ``n`` is stored as coefficients ``c[k]`` of
``X^(n-k) Y^k``.  The linear form vanishing at ``[a:b]`` is ``bX - aY``.
"""

import numpy as np

from .errors import ZeroForm
from .projective import OMEGA_GRAM, INF, ZERO, ProjPoint, chordal, sym3
from .tolerance import get_cluster_tol

__all__ = [
    "CubicForm",
    "omega",
    "linear_form",
    "form_product",
    "homogeneous_roots",
    "cubic_roots",
    "discriminant",
    "deflate",
    "evaluate",
    "distinct_roots",
]

# coefficients this small relative to the form norm are treated as exact zeros
UNDERFLOW = 1e-14


class CubicForm:
    """``a X^3 + b X^2 Y + c X Y^2 + d Y^3``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = np.array(coeffs, dtype=complex).reshape(4)
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("CubicForm is immutable")

    @classmethod
    def monomial(cls, k):
        """``X^(3-k) Y^k``."""
        c = np.zeros(4, dtype=complex)
        c[k] = 1
        return cls(c)

    @classmethod
    def from_roots(cls, roots):
        return cls(form_product([linear_form(r) for r in roots]))

    def norm(self):
        return float(np.linalg.norm(self.coeffs))

    def __add__(self, other):
        return CubicForm(self.coeffs + other.coeffs)

    def __sub__(self, other):
        return CubicForm(self.coeffs - other.coeffs)

    def __mul__(self, scalar):
        return CubicForm(self.coeffs * scalar)

    __rmul__ = __mul__

    def __neg__(self):
        return CubicForm(-self.coeffs)

    def transform(self, g):
        """Image under ``sym3(g)``: roots move by ``g``."""
        return CubicForm(sym3(g) @ self.coeffs)

    def roots(self):
        return cubic_roots(self)

    def __call__(self, point):
        return evaluate(self.coeffs, point)

    def __repr__(self):
        return "CubicForm(" + ", ".join(f"{c:.6g}" for c in self.coeffs) + ")"


X3 = CubicForm.monomial(0)
X2Y = CubicForm.monomial(1)
XY2 = CubicForm.monomial(2)
Y3 = CubicForm.monomial(3)


def omega(p, q):
    """The symplectic pairing with ``omega(X^3, Y^3) = 1``, ``omega(X^2Y, XY^2) = -1/3``."""
    pc = p.coeffs if isinstance(p, CubicForm) else np.asarray(p, dtype=complex)
    qc = q.coeffs if isinstance(q, CubicForm) else np.asarray(q, dtype=complex)
    return complex(pc @ OMEGA_GRAM @ qc)


def linear_form(point):
    """``bX - aY`` for ``[a:b]``."""
    return np.array([point.b, -point.a], dtype=complex)


def form_product(factors):
    out = np.array([1.0 + 0j])
    for f in factors:
        out = np.convolve(out, np.asarray(f, dtype=complex))
    return out


def evaluate(coeffs, point):
    coeffs = np.asarray(coeffs, dtype=complex)
    n = len(coeffs) - 1
    a, b = point.unit
    return complex(sum(c * a ** (n - k) * b**k for k, c in enumerate(coeffs)))


def homogeneous_roots(coeffs):
    """All ``n`` roots of a degree-``n`` binary form, with multiplicity.

    Underflowing extreme coefficients become roots at infinity (leading)
    or zero (trailing); the rest is solved by companion-matrix eigenvalues
    in whichever affine chart keeps the larger extreme coefficient.
    """
    c = np.asarray(coeffs, dtype=complex)
    scale = np.linalg.norm(c)
    if scale == 0 or not np.isfinite(scale):
        raise ZeroForm("the zero form has no roots")
    c = c / scale
    lead = 0
    while abs(c[lead]) <= UNDERFLOW:
        lead += 1
    trail = 0
    while abs(c[len(c) - 1 - trail]) <= UNDERFLOW:
        trail += 1
    core = c[lead : len(c) - trail]
    roots = [INF] * lead + [ZERO] * trail
    if len(core) > 1:
        if abs(core[0]) >= abs(core[-1]):
            roots += [ProjPoint(x, 1.0) for x in np.roots(core)]
        else:
            roots += [ProjPoint(1.0, y) for y in np.roots(core[::-1])]
    return roots


def cubic_roots(p):
    p = p if isinstance(p, CubicForm) else CubicForm(p)
    return homogeneous_roots(p.coeffs)


def discriminant(p):
    al, be, ga, de = (p.coeffs if isinstance(p, CubicForm) else np.asarray(p, dtype=complex))
    return complex(
        be**2 * ga**2
        - 4 * al * ga**3
        - 4 * de * be**3
        - 27 * al**2 * de**2
        + 18 * al * be * ga * de
    )


def deflate(coeffs, factor):
    """Least-squares quotient ``q`` with ``coeffs ~ factor * q``."""
    coeffs = np.asarray(coeffs, dtype=complex)
    factor = np.asarray(factor, dtype=complex)
    m = len(coeffs) - len(factor) + 1
    conv = np.zeros((len(coeffs), m), dtype=complex)
    for j in range(m):
        conv[j : j + len(factor), j] = factor
    quotient, *_ = np.linalg.lstsq(conv, coeffs, rcond=None)
    return quotient


def distinct_roots(roots, cluster_tol=None):
    """Group roots closer than ``cluster_tol`` (chordal); returns (point, multiplicity)."""
    cluster_tol = get_cluster_tol(cluster_tol)
    groups = []
    for r in roots:
        for g in groups:
            if chordal(g[0], r) < cluster_tol:
                g[1] += 1
                break
        else:
            groups.append([r, 1])
    return [(g[0], g[1]) for g in groups]
