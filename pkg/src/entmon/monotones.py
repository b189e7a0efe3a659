"""Negativity and entanglement of formation, plus the inverse relations
turning measured correlators into monotone values."""

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidDensity, OutOfRangeInput
from .numerics import BipartiteShape, partial_transpose, trace_norm
from .states import validate_density
from . import correlators
from .bases import conjugate_basis, fourier_basis

#: Inversion modes accepted by invert_relation.
MODES = ("from_mp_pure", "from_pcc", "from_pcc_sum", "from_mp_isotropic",
         "alpha", "from_mi")


@dataclass(frozen=True)
class MonotoneEstimate:
    """Value +/- uncertainty for one monotone and the relation that made it.

    ``kind`` is "negativity", "eof" or "alpha" (the isotropic mixedness
    parameter, carried through the same reporting path). ``clamped`` marks
    results pulled back into the physical range.
    """

    kind: str
    value: float
    method: str
    sigma: float = None
    clamped: bool = False


def negativity_pure(state):
    """Closed-form negativity of a pure Schmidt state."""
    total = math.fsum(state.coefficients)
    return (total * total - 1.0) / 2.0


def eof_pure(state):
    """Entanglement of formation of a pure state, in bits."""
    total = 0.0
    for lam in state.coefficients:
        p = lam * lam
        if p > 0.0:
            total += p * math.log2(p)
    return -total


def negativity_ppt(rho, shape):
    """Negativity via the partial-transpose trace norm (independent oracle)."""
    if not validate_density(rho, shape):
        raise InvalidDensity("input is not a valid density matrix")
    tn = trace_norm(partial_transpose(rho, shape, subsystem="B"))
    return max((tn - 1.0) / 2.0, 0.0)


def _clamp(value, lo, hi):
    clamped = value < lo or value > hi
    return min(max(value, lo), hi), clamped


def invert_relation(measure, mode, dim, m=None, sigma=None):
    """Map a measured correlator to a monotone estimate.

    Modes: from_mp_pure N = (d*MP - 1)/2; from_pcc N = C(d-1)/2;
    from_pcc_sum N = (C_ZZ + C_XX - 1)(d-1)/2; from_mp_isotropic
    N = sum(MP)(d+1)/(2m) - 1; alpha = (d*MP - 1)/(d-1); from_mi EOF = MI.
    Linear error propagation on sigma; out-of-range results are clamped
    with a flag.
    """
    if dim < 2:
        raise OutOfRangeInput("dim must be >= 2")
    x = float(measure)
    n_max = (dim - 1) / 2.0

    if mode == "from_mp_pure":
        if not 0.0 <= x <= 1.0:
            raise OutOfRangeInput(f"MP = {x} outside [0, 1]")
        slope = dim / 2.0
        value, kind = (dim * x - 1.0) / 2.0, "negativity"
        lo, hi = 0.0, n_max
    elif mode == "from_pcc":
        if not -1.0 <= x <= 1.0:
            raise OutOfRangeInput(f"PCC = {x} outside [-1, 1]")
        slope = (dim - 1) / 2.0
        value, kind = x * (dim - 1) / 2.0, "negativity"
        lo, hi = 0.0, n_max
    elif mode == "from_pcc_sum":
        if not -2.0 <= x <= 2.0:
            raise OutOfRangeInput(f"PCC sum = {x} outside [-2, 2]")
        slope = (dim - 1) / 2.0
        value, kind = (x - 1.0) * (dim - 1) / 2.0, "negativity"
        lo, hi = 0.0, n_max
    elif mode == "from_mp_isotropic":
        if m is None or m < 1:
            raise OutOfRangeInput("isotropic mode requires m >= 1")
        if not 0.0 <= x <= m:
            raise OutOfRangeInput(f"summed MP = {x} outside [0, {m}]")
        slope = (dim + 1) / (2.0 * m)
        value, kind = x * (dim + 1) / (2.0 * m) - 1.0, "negativity"
        lo, hi = 0.0, n_max
    elif mode == "alpha":
        if not 0.0 <= x <= 1.0:
            raise OutOfRangeInput(f"MP = {x} outside [0, 1]")
        slope = dim / (dim - 1.0)
        value, kind = (dim * x - 1.0) / (dim - 1.0), "alpha"
        lo, hi = 0.0, 1.0
    elif mode == "from_mi":
        if x < 0.0:
            raise OutOfRangeInput(f"MI = {x} is negative")
        slope = 1.0
        value, kind = x, "eof"
        lo, hi = 0.0, math.log2(dim)
    else:
        raise OutOfRangeInput(f"unknown mode '{mode}'")

    value, clamped = _clamp(value, lo, hi)
    method = f"from_mp_isotropic(m={m})" if mode == "from_mp_isotropic" \
        else mode
    return MonotoneEstimate(
        kind=kind, value=value, method=method,
        sigma=None if sigma is None else abs(slope) * float(sigma),
        clamped=clamped)


def mp_relation_forward(state):
    """Forward MP values of a pure state in the two canonical bases.

    Returns (mp_fourier, mp_schmidt, mp_sum) where mp_fourier is taken with
    the Fourier basis on A and its conjugate on B, mp_schmidt in the Schmidt
    basis on both sides, and mp_sum is their total.
    """
    d = state.dim
    fb = fourier_basis(d)
    joint = correlators.joint_probability_matrix(state, fb,
                                                 conjugate_basis(fb))
    mp_fourier = correlators.mutual_predictability(joint)
    # Schmidt basis on both sides is the computational diagonal: MP = 1
    lam = np.asarray(state.coefficients)
    mp_schmidt = float(np.sum(lam * lam))
    return mp_fourier, mp_schmidt, mp_schmidt + mp_fourier
