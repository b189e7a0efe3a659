"""Dense complex linear algebra used by every other module.

Products, tensor products, Hermitian eigenvalues (cyclic Jacobi), partial
transpose and trace norm. The eigensolver hot loop lives in a compiled
extension (``entmon._jacobi_cy``); a pure-Python twin is selected at import
when the extension is unavailable or ``ENTMON_NO_EXT`` is set.
"""

import os
from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence, NonHermitian, ShapeMismatch
from . import _jacobi_py

if os.environ.get("ENTMON_NO_EXT"):
    _kernel = _jacobi_py
else:
    try:
        from . import _jacobi_cy as _kernel
    except ImportError:
        _kernel = _jacobi_py

#: True when the compiled Jacobi kernel is in use.
USING_COMPILED_KERNEL = bool(getattr(_kernel, "COMPILED", False))


@dataclass(frozen=True)
class Tolerances:
    """Central record of every numerical tolerance used by the package."""

    hermiticity: float = 1e-10
    psd_cutoff: float = -1e-9
    normalization: float = 1e-9
    jacobi_offdiag: float = 1e-12
    jacobi_max_sweeps: int = 100
    unbiasedness: float = 1e-9
    orthonormality: float = 1e-10
    renorm_warn: float = 1e-6


TOLS = Tolerances()


@dataclass(frozen=True)
class BipartiteShape:
    """Dimensions of the two tensor factors of a bipartite space."""

    dim_a: int
    dim_b: int

    def __post_init__(self):
        if self.dim_a < 2 or self.dim_b < 2:
            raise ShapeMismatch("both subsystem dimensions must be >= 2")

    @property
    def side(self):
        return self.dim_a * self.dim_b


def as_matrix(m):
    """Coerce input to a 2-D complex128 array."""
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2:
        raise ShapeMismatch(f"expected a 2-D array, got ndim={a.ndim}")
    return a


def adjoint(m):
    return as_matrix(m).conj().T


def trace(m):
    a = as_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise ShapeMismatch("trace requires a square matrix")
    return complex(np.trace(a))


def matmul(a, b):
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ShapeMismatch(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def kron(a, b):
    return np.kron(as_matrix(a), as_matrix(b))


def is_hermitian(m, tol=TOLS.hermiticity):
    a = as_matrix(m)
    return a.shape[0] == a.shape[1] and np.max(np.abs(a - a.conj().T)) <= tol


def is_unit_trace(m, tol=TOLS.normalization):
    return abs(trace(m) - 1.0) <= tol


def hermitian_eigenvalues(m, tol=TOLS.hermiticity):
    """Eigenvalues of a Hermitian matrix, sorted descending.

    Cyclic Jacobi with off-diagonal Frobenius-norm threshold
    ``TOLS.jacobi_offdiag`` and at most ``TOLS.jacobi_max_sweeps`` sweeps.
    """
    a = as_matrix(m)
    if not is_hermitian(a, tol):
        raise NonHermitian("matrix is not Hermitian within tolerance")
    eigs, _, converged = _kernel.jacobi_eigenvalues(
        a, TOLS.jacobi_offdiag, TOLS.jacobi_max_sweeps)
    if not converged:
        raise NoConvergence(
            f"Jacobi sweep limit {TOLS.jacobi_max_sweeps} reached")
    return np.sort(eigs)[::-1]


def is_psd(m, tol=TOLS.psd_cutoff):
    return float(hermitian_eigenvalues(m)[-1]) >= tol


def partial_transpose(m, shape, subsystem="B"):
    """Transpose the chosen tensor factor of a bipartite operator."""
    a = as_matrix(m)
    da, db = shape.dim_a, shape.dim_b
    if a.shape != (da * db, da * db):
        raise ShapeMismatch(
            f"matrix side {a.shape[0]} != dim_a*dim_b = {da * db}")
    if subsystem not in ("A", "B"):
        raise ShapeMismatch("subsystem must be 'A' or 'B'")
    t = a.reshape(da, db, da, db)
    if subsystem == "A":
        t = t.transpose(2, 1, 0, 3)
    else:
        t = t.transpose(0, 3, 2, 1)
    return t.reshape(da * db, da * db).copy()


def partial_trace(m, shape, keep="A"):
    """Trace out one tensor factor of a bipartite operator."""
    a = as_matrix(m)
    da, db = shape.dim_a, shape.dim_b
    if a.shape != (da * db, da * db):
        raise ShapeMismatch(
            f"matrix side {a.shape[0]} != dim_a*dim_b = {da * db}")
    t = a.reshape(da, db, da, db)
    if keep == "A":
        return np.einsum("ikjk->ij", t)
    if keep == "B":
        return np.einsum("kikj->ij", t)
    raise ShapeMismatch("keep must be 'A' or 'B'")


def trace_norm(m):
    """Sum of absolute eigenvalues; valid for Hermitian input."""
    return float(np.sum(np.abs(hermitian_eigenvalues(m))))
