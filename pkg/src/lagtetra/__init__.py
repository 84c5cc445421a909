"""Lagrangian planes of binary cubics and regular ideal tetrahedra in H^3."""

from .errors import (
    AmbiguousBoundary,
    DegenerateInput,
    DomainError,
    GeometryError,
    InconsistentSequence,
    NotInOmega,
    NotLagrangian,
    NotOnAxis,
    NotOnQuadric,
    NotRegular,
    NotUnimodular,
    NumericalDegeneracy,
    UndefinedProjection,
    ZeroForm,
)
from .fibration import (
    DownCoord,
    FiberPoint,
    UpDown,
    f_shift,
    in_fiber_O,
    make_down_tetra,
    phi,
    phi_fiber,
    project_q,
    rho_s,
    updown_classify,
)
from .forms import CubicForm, cubic_roots, discriminant
from .hyperbolic import H2Point, H3Point, eta, h3_distance, height, poincare_extend, project_to_P
from .lagrangian import Lagrangian, OrbitTag, classify_orbit, in_KR, in_Omega, pencil_double_roots
from .projective import Mobius, ProjPoint, cross_ratio, mobius_apply, sym3
from .tetra import DecoratedTetra, DegenTetra, IdealTetra, dual_tetra, g_inverse, g_map, project_Q
from .tolerance import tolerance

__version__ = "0.1.0"
