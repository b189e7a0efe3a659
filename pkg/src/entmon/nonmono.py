"""Percentage-deviation comparison of negativity and entanglement of
formation over the qutrit Schmidt simplex: metrics, analytic gradients,
and the grid scan locating maximal deviation and non-monotone state pairs."""

import math
from dataclasses import dataclass

import numpy as np

from .errors import BoundaryPoint, WrongDimension
from .monotones import eof_pure, negativity_pure
from .states import make_schmidt_state

LOG2_3 = math.log2(3.0)
_BOUNDARY_MARGIN = 1e-4


@dataclass(frozen=True)
class DeviationRecord:
    """Monotone values and their percent deviations for one qutrit state."""

    c0: float
    c1: float
    e: float
    n: float
    q_e: float
    q_n: float
    dq: float


@dataclass(frozen=True)
class GradientRecord:
    """Closed-form partial derivatives of E and N on the simplex interior."""

    de_dc0: float
    de_dc1: float
    dn_dc0: float
    dn_dc1: float


@dataclass(frozen=True)
class ScanResult:
    grid: np.ndarray  # columns: c0, c1, E, N, Q_E, Q_N, dQ
    max_dq: float  # maximum of the signed excess Q_E - Q_N
    argmax_c0: float
    argmax_c1: float
    nonmonotone_pairs: list  # [((c0, c1), (c0', c1')), ...] with E1>E2, N1<N2


def deviation_metrics(state):
    """DeviationRecord of a d=3 Schmidt state."""
    if state.dim != 3:
        raise WrongDimension("deviation metrics are defined for d = 3")
    c0, c1 = state.coefficients[0], state.coefficients[1]
    e = eof_pure(state)
    n = negativity_pure(state)
    q_e = 100.0 * (LOG2_3 - e) / LOG2_3
    q_n = 100.0 * (1.0 - n)
    return DeviationRecord(c0=c0, c1=c1, e=e, n=n,
                           q_e=q_e, q_n=q_n, dq=abs(q_e - q_n))


def gradients(c0, c1):
    """Closed-form rates of change of E and N w.r.t. c0 and c1.

    Defined on the open simplex interior; the forms are singular where
    c2 -> 0 (square root and logarithm blow up).
    """
    c2_sq = 1.0 - c0 * c0 - c1 * c1
    if c0 <= 0.0 or c1 <= 0.0 or c2_sq <= _BOUNDARY_MARGIN ** 2:
        raise BoundaryPoint(
            f"(c0, c1) = ({c0}, {c1}) is outside the simplex interior")
    c2 = math.sqrt(c2_sq)
    de_dc0 = 2.0 * c0 * math.log2(c2_sq / (c0 * c0))
    de_dc1 = 2.0 * c1 * math.log2(c2_sq / (c1 * c1))
    dn_dc0 = c1 + (1.0 - c0 * c1 - c1 * c1 - 2.0 * c0 * c0) / c2
    dn_dc1 = c0 + (1.0 - c0 * c1 - c0 * c0 - 2.0 * c1 * c1) / c2
    return GradientRecord(de_dc0=de_dc0, de_dc1=de_dc1,
                          dn_dc0=dn_dc0, dn_dc1=dn_dc1)


def _metrics_arrays(c0, c1):
    """Vectorized E, N, Q_E, Q_N, dQ for valid (c0, c1) arrays."""
    c2_sq = 1.0 - c0 * c0 - c1 * c1
    c2 = np.sqrt(c2_sq)
    lam_sq = np.stack([c0 * c0, c1 * c1, c2_sq])
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(lam_sq > 0.0, lam_sq * np.log2(lam_sq), 0.0)
    e = -terms.sum(axis=0)
    n = c0 * c1 + c1 * c2 + c0 * c2
    q_e = 100.0 * (LOG2_3 - e) / LOG2_3
    q_n = 100.0 * (1.0 - n)
    return e, n, q_e, q_n, np.abs(q_e - q_n)


def _signed_dq_at(c0, c1):
    # the reported maximum is of the signed excess Q_E - Q_N; the absolute
    # deviation peaks separately at boundary Bell-like states where N
    # deviates faster than E
    if c0 <= 0 or c1 <= 0 or c0 * c0 + c1 * c1 >= 1.0:
        return -np.inf
    _, _, q_e, q_n, _ = _metrics_arrays(np.asarray([c0]), np.asarray([c1]))
    return float(q_e[0] - q_n[0])


def _golden_polish(c0, c1, step, xtol=1e-5, rounds=4):
    """Coordinate-wise golden-section maximization of Q_E - Q_N near a
    grid argmax."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    for _ in range(rounds):
        for axis in (0, 1):
            lo = (c0 - step) if axis == 0 else (c1 - step)
            hi = (c0 + step) if axis == 0 else (c1 + step)

            def f(x):
                return (_signed_dq_at(x, c1) if axis == 0
                        else _signed_dq_at(c0, x))

            a, b = lo, hi
            x1 = b - invphi * (b - a)
            x2 = a + invphi * (b - a)
            f1, f2 = f(x1), f(x2)
            while b - a > xtol * 0.1:
                if f1 < f2:
                    a, x1, f1 = x1, x2, f2
                    x2 = a + invphi * (b - a)
                    f2 = f(x2)
                else:
                    b, x2, f2 = x2, x1, f1
                    x1 = b - invphi * (b - a)
                    f1 = f(x1)
            best = (a + b) / 2.0
            if axis == 0:
                c0 = best
            else:
                c1 = best
        step = max(step * 0.25, xtol)
    return c0, c1, _signed_dq_at(c0, c1)


def _find_nonmonotone_pairs(c0, c1, e, n, limit=100):
    """Pairs with a strict (E, N) order inversion, via an E-sorted sweep."""
    order = np.argsort(e)
    e_s, n_s = e[order], n[order]
    c0_s, c1_s = c0[order], c1[order]
    pairs = []
    # adjacent inversions in the E-sorted order witness non-monotonicity
    inv = np.nonzero((np.diff(e_s) > 1e-12) & (np.diff(n_s) < -1e-12))[0]
    for i in inv[:limit]:
        lo, hi = i, i + 1
        pairs.append(((float(c0_s[hi]), float(c1_s[hi])),
                      (float(c0_s[lo]), float(c1_s[lo]))))
    return pairs


def count_order_inversions(e, n):
    """Number of adjacent (E, N) order inversions over an E-sorted sweep."""
    order = np.argsort(e)
    n_s = n[order]
    e_s = e[order]
    return int(np.count_nonzero(
        (np.diff(e_s) > 1e-12) & (np.diff(n_s) < -1e-12)))


def scan_simplex(resolution, dim=3):
    """Uniform grid scan of the deviation metrics over the Schmidt simplex.

    For dim=3 the grid covers valid (c0, c1) with step 1/resolution and a
    boundary margin; the dQ argmax is refined by golden-section polish.
    For dim=2 the scan runs over c0 alone with c1 = sqrt(1 - c0**2).
    """
    if resolution < 50:
        raise WrongDimension("resolution must be >= 50")
    if dim not in (2, 3):
        raise WrongDimension("scan supports dim 2 or 3 only")
    step = 1.0 / resolution
    axis = np.arange(_BOUNDARY_MARGIN, 1.0, step)

    if dim == 2:
        c0 = axis[axis * axis < 1.0 - _BOUNDARY_MARGIN ** 2]
        c1 = np.sqrt(1.0 - c0 * c0)
        lam_sq = np.stack([c0 * c0, c1 * c1])
        e = -(lam_sq * np.log2(lam_sq)).sum(axis=0)
        n = c0 * c1
        q_e = 100.0 * (1.0 - e)  # max EOF is log2(2) = 1 bit at d = 2
        q_n = 100.0 * (1.0 - 2.0 * n)  # max N is 1/2 at d = 2
        dq = np.abs(q_e - q_n)
        grid = np.column_stack([c0, c1, e, n, q_e, q_n, dq])
        k = int(np.argmax(q_e - q_n))
        pairs = _find_nonmonotone_pairs(c0, c1, e, n)
        return ScanResult(grid=grid, max_dq=float(q_e[k] - q_n[k]),
                          argmax_c0=float(c0[k]), argmax_c1=float(c1[k]),
                          nonmonotone_pairs=pairs)

    g0, g1 = np.meshgrid(axis, axis, indexing="ij")
    mask = g0 * g0 + g1 * g1 < 1.0 - _BOUNDARY_MARGIN ** 2
    c0 = g0[mask]
    c1 = g1[mask]
    e, n, q_e, q_n, dq = _metrics_arrays(c0, c1)
    grid = np.column_stack([c0, c1, e, n, q_e, q_n, dq])
    k = int(np.argmax(q_e - q_n))
    b0, b1, best = _golden_polish(float(c0[k]), float(c1[k]), step)
    pairs = _find_nonmonotone_pairs(c0, c1, e, n)
    return ScanResult(grid=grid, max_dq=best, argmax_c0=b0, argmax_c1=b1,
                      nonmonotone_pairs=pairs)


def is_nonmonotone_pair(coeffs_1, coeffs_2):
    """True when state 1 has strictly larger EOF but strictly smaller N."""
    s1 = make_schmidt_state(coeffs_1)
    s2 = make_schmidt_state(coeffs_2)
    return (eof_pure(s1) > eof_pure(s2)
            and negativity_pure(s1) < negativity_pure(s2))


def write_scan_csv(result, path):
    """Scan grid as comma-separated c0, c1, E, N, Q_E, Q_N, dQ."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("c0,c1,E,N,Q_E,Q_N,dQ\n")
        for row in result.grid:
            fh.write(",".join(f"{x:.17g}" for x in row) + "\n")
