"""Process-wide numerical tolerances, overridable per call via a context.

Usage::

    with tolerance(tol=1e-12):
        classify_orbit(W)
"""

from contextlib import contextmanager
from contextvars import ContextVar

DEFAULT_TOL = 1e-9
DEFAULT_CLUSTER_TOL = 1e-6

_tol = ContextVar("lagtetra_tol", default=DEFAULT_TOL)
_cluster_tol = ContextVar("lagtetra_cluster_tol", default=DEFAULT_CLUSTER_TOL)


def get_tol(tol=None):
    return _tol.get() if tol is None else tol


def get_cluster_tol(cluster_tol=None):
    return _cluster_tol.get() if cluster_tol is None else cluster_tol


@contextmanager
def tolerance(tol=None, cluster_tol=None):
    tokens = []
    if tol is not None:
        tokens.append((_tol, _tol.set(tol)))
    if cluster_tol is not None:
        tokens.append((_cluster_tol, _cluster_tol.set(cluster_tol)))
    try:
        yield
    finally:
        for var, token in reversed(tokens):
            var.reset(token)
