"""JSON encoding of the library's values.

Complex numbers are ``[re, im]``; points of CP^1 are ``{"a": c, "b": c}``;
extended reals are numbers or ``{"inf": "+"}`` / ``{"inf": "-"}``.
"""

import math
import numbers

import numpy as np

from .fibration import FiberPoint
from .hyperbolic import H2Point, H3Point
from .lagrangian import Lagrangian
from .projective import ProjPoint
from .tetra import DecoratedTetra, DegenTetra, IdealTetra, dual_tetra


class ParseError(ValueError):
    """Input JSON does not describe the expected value."""


def _finite(x):
    if isinstance(x, bool) or not isinstance(x, numbers.Real):
        raise ParseError(f"expected a number, got {x!r}")
    x = float(x)
    if not math.isfinite(x):
        raise ParseError("numbers must be finite")
    return x


def _clean(x):
    # avoid "-0.0" so output is stable across equivalent computations
    x = float(x)
    return 0.0 if x == 0 else x


def complex_to_json(z):
    z = complex(z)
    return [_clean(z.real), _clean(z.imag)]


def complex_from_json(obj):
    if isinstance(obj, list) and len(obj) == 2:
        return complex(_finite(obj[0]), _finite(obj[1]))
    if isinstance(obj, numbers.Real) and not isinstance(obj, bool):
        return complex(_finite(obj), 0.0)
    raise ParseError(f"expected [re, im], got {obj!r}")


def point_to_json(p):
    return {"a": complex_to_json(p.a), "b": complex_to_json(p.b)}


def point_from_json(obj):
    if not isinstance(obj, dict) or set(obj) != {"a", "b"}:
        raise ParseError(f"expected {{'a', 'b'}}, got {obj!r}")
    a, b = complex_from_json(obj["a"]), complex_from_json(obj["b"])
    if a == 0 and b == 0:
        raise ParseError("[0:0] is not a point")
    return ProjPoint(a, b)


def h3_to_json(x):
    if isinstance(x, ProjPoint):
        return {"boundary": point_to_json(x)}
    return {"z": complex_to_json(x.z), "t": _clean(x.t)}


def h3_from_json(obj):
    if isinstance(obj, dict) and set(obj) == {"boundary"}:
        return point_from_json(obj["boundary"])
    if isinstance(obj, dict) and set(obj) == {"z", "t"}:
        t = _finite(obj["t"])
        if t <= 0:
            raise ParseError("height must be positive")
        return H3Point(complex_from_json(obj["z"]), t)
    raise ParseError(f"expected an H3 point, got {obj!r}")


def h2_to_json(p):
    return {"x": _clean(p.x), "h": _clean(p.h)}


def ext_real_to_json(s):
    if s == math.inf:
        return {"inf": "+"}
    if s == -math.inf:
        return {"inf": "-"}
    return _clean(s)


def ext_real_from_json(obj):
    if isinstance(obj, dict) and set(obj) == {"inf"}:
        sign = obj["inf"]
        if sign == "+":
            return math.inf
        if sign in ("-", "−"):
            return -math.inf
        raise ParseError(f"bad infinity sign {sign!r}")
    return _finite(obj)


def lagrangian_to_json(W):
    return {
        "basis": [[complex_to_json(c) for c in b.coeffs] for b in W.basis],
        "plucker": [complex_to_json(w) for w in W.plucker],
    }


def lagrangian_from_json(obj):
    if not isinstance(obj, dict) or "basis" not in obj:
        raise ParseError("expected {'basis': [[4 complex], [4 complex]]}")
    basis = obj["basis"]
    if not (isinstance(basis, list) and len(basis) == 2):
        raise ParseError("basis must hold two cubic forms")
    forms = []
    for b in basis:
        if not (isinstance(b, list) and len(b) == 4):
            raise ParseError("a cubic form has four coefficients")
        forms.append(np.array([complex_from_json(c) for c in b]))
    return Lagrangian(*forms)


def tetra_to_json(T):
    if isinstance(T, DecoratedTetra):
        return {
            "tetra": [point_to_json(v) for v in T.vertices],
            "dual": [point_to_json(d) for d in T.duals],
            "barycenter": h3_to_json(T.barycenter),
        }
    if isinstance(T, DegenTetra):
        return {"degenerate": [point_to_json(T.first), point_to_json(T.second)]}
    if isinstance(T, IdealTetra):
        return [point_to_json(v) for v in T.vertices]
    raise TypeError(type(T).__name__)


def tetra_from_json(obj):
    """A decorated tetrahedron; the dual and barycenter are recomputed from the vertices."""
    if isinstance(obj, dict) and "tetra" in obj:
        obj = obj["tetra"]
    if not (isinstance(obj, list) and len(obj) == 4):
        raise ParseError("a tetrahedron is a list of four points")
    return dual_tetra(IdealTetra([point_from_json(p) for p in obj]))


def fiber_point_to_json(fp):
    if fp.kind == "tetra":
        return tetra_to_json(fp.tetra)
    return {fp.kind: point_to_json(fp.second)}


def fiber_point_from_json(obj):
    if isinstance(obj, dict) and set(obj) in ({"plus"}, {"minus"}):
        kind = next(iter(obj))
        return FiberPoint(kind, second=point_from_json(obj[kind]))
    return FiberPoint.of(tetra_from_json(obj))


def to_json(x):
    """Dispatch on type."""
    if isinstance(x, ProjPoint):
        return point_to_json(x)
    if isinstance(x, H3Point):
        return h3_to_json(x)
    if isinstance(x, H2Point):
        return h2_to_json(x)
    if isinstance(x, Lagrangian):
        return lagrangian_to_json(x)
    if isinstance(x, FiberPoint):
        return fiber_point_to_json(x)
    if isinstance(x, (DecoratedTetra, DegenTetra, IdealTetra)):
        return tetra_to_json(x)
    if isinstance(x, complex):
        return complex_to_json(x)
    raise TypeError(type(x).__name__)
