"""Joint outcome distributions and the three statistical correlators
(mutual predictability, mutual information, Pearson correlation)."""

import math
from dataclasses import dataclass

import numpy as np

from .bases import OutcomeValues, default_outcome_values
from .errors import DimMismatch, InvalidDensity, ZeroVariance
from .numerics import TOLS, as_matrix
from .states import SchmidtState, to_density, validate_density

_VAR_FLOOR = 1e-15


@dataclass(frozen=True)
class JointProbabilityMatrix:
    """d x d joint outcome distribution with basis labels and pairing.

    ``probs[i][j]`` is P(A-outcome i, B-outcome j). ``pairing`` is the
    permutation mapping each A-outcome to its correlated B-outcome; it is
    the identity for analytic distributions (the conjugate basis is stored
    with its literal vectors) and carries the measured-layout convention
    for empirical matrices.
    """

    dim: int
    probs: np.ndarray
    basis_a: str
    basis_b: str
    pairing: tuple

    def __post_init__(self):
        p = np.asarray(self.probs, dtype=np.float64)
        if p.shape != (self.dim, self.dim):
            raise DimMismatch("probability grid is not d x d")
        if np.any(p < 0):
            raise InvalidDensity("negative joint probability")
        total = p.sum()
        if total <= 0:
            raise InvalidDensity("joint probabilities sum to zero")
        if abs(total - 1.0) > TOLS.normalization:
            p = p / total
        object.__setattr__(self, "probs", p)
        if sorted(self.pairing) != list(range(self.dim)):
            raise DimMismatch(f"pairing {self.pairing} is not a permutation")


@dataclass(frozen=True)
class CorrelatorReport:
    """MP, MI (bits) and PCC, each with an optional standard deviation."""

    mp: float
    mi: float
    pcc: float
    mp_sigma: float = None
    mi_sigma: float = None
    pcc_sigma: float = None


def joint_probability_matrix(state, basis_a, basis_b, pairing=None):
    """Joint distribution probs[i][j] = <a_i, b_j| rho |a_i, b_j>.

    Accepts a SchmidtState or a density matrix on the d*d bipartite space.
    The literal vectors of both bases are used; pairing defaults to the
    identity.
    """
    if basis_a.dim != basis_b.dim:
        raise DimMismatch("basis dimensions differ")
    d = basis_a.dim
    if isinstance(state, SchmidtState):
        if state.dim != d:
            raise DimMismatch("state dimension does not match bases")
        lam = np.asarray(state.coefficients)
        # amplitude(i, j) = sum_k lam_k conj(a_i[k]) conj(b_j[k])
        amps = basis_a.vectors.conj().T @ np.diag(lam) @ basis_b.vectors.conj()
        probs = np.abs(amps) ** 2
    else:
        rho = as_matrix(state)
        if rho.shape != (d * d, d * d):
            raise DimMismatch("density side does not match basis dimensions")
        if not validate_density(rho):
            raise InvalidDensity("input is not a valid density matrix")
        t = rho.reshape(d, d, d, d)
        probs = np.real(np.einsum(
            "ki,lj,klmn,mi,nj->ij",
            basis_a.vectors.conj(), basis_b.vectors.conj(),
            t, basis_a.vectors, basis_b.vectors, optimize=True))
        probs = np.clip(probs, 0.0, None)
    if pairing is None:
        pairing = tuple(range(d))
    return JointProbabilityMatrix(
        dim=d, probs=probs, basis_a=basis_a.label, basis_b=basis_b.label,
        pairing=tuple(pairing))


def mutual_predictability(joint):
    """Sum of joint probabilities over the stored outcome pairing."""
    idx = np.arange(joint.dim)
    return float(joint.probs[idx, np.asarray(joint.pairing)].sum())


def mutual_information(joint):
    """Shannon mutual information of the joint distribution, in bits."""
    p = joint.probs
    pa = p.sum(axis=1)
    pb = p.sum(axis=0)
    total = 0.0
    for i in range(joint.dim):
        for j in range(joint.dim):
            if p[i, j] > 0.0:
                total += p[i, j] * math.log2(p[i, j] / (pa[i] * pb[j]))
    return max(total, 0.0)


def _paired_values_b(joint, values_b):
    # B outcome pairing[i] carries the value assigned to A outcome i
    out = np.empty(joint.dim)
    vb = np.asarray(values_b.values, dtype=np.float64)
    for i, j in enumerate(joint.pairing):
        out[j] = vb[i]
    return out


def pcc_from_joint(joint, values_a=None, values_b=None):
    """Pearson correlation of the outcome-value assignments.

    The stored pairing relabels the B-side values so that correlated
    outcome pairs carry equal values (identity pairing leaves them as
    given).
    """
    if values_a is None:
        values_a = default_outcome_values(joint.dim)
    if values_b is None:
        values_b = default_outcome_values(joint.dim)
    va = np.asarray(values_a.values, dtype=np.float64)
    vb = _paired_values_b(joint, values_b)
    p = joint.probs
    pa = p.sum(axis=1)
    pb = p.sum(axis=0)
    ea = float(va @ pa)
    eb = float(vb @ pb)
    var_a = float(va ** 2 @ pa) - ea * ea
    var_b = float(vb ** 2 @ pb) - eb * eb
    if var_a <= _VAR_FLOOR or var_b <= _VAR_FLOOR:
        raise ZeroVariance("a marginal is deterministic under these values")
    eab = float(va @ p @ vb)
    return (eab - ea * eb) / math.sqrt(var_a * var_b)


def _expectation(rho, op):
    return float(np.real(np.trace(rho @ op)))


def pcc_operator(state, op_a, op_b):
    """Pearson correlation of a joint observable, from expectation values."""
    op_a = as_matrix(op_a)
    op_b = as_matrix(op_b)
    if isinstance(state, SchmidtState):
        rho = to_density(state)
    else:
        rho = as_matrix(state)
    d_a = op_a.shape[0]
    d_b = op_b.shape[0]
    if rho.shape != (d_a * d_b, d_a * d_b):
        raise DimMismatch("operator dimensions do not match the state")
    id_a = np.eye(d_a)
    id_b = np.eye(d_b)
    e_ab = _expectation(rho, np.kron(op_a, op_b))
    e_a = _expectation(rho, np.kron(op_a, id_b))
    e_b = _expectation(rho, np.kron(id_a, op_b))
    e_a2 = _expectation(rho, np.kron(op_a @ op_a, id_b))
    e_b2 = _expectation(rho, np.kron(id_a, op_b @ op_b))
    var_a = e_a2 - e_a * e_a
    var_b = e_b2 - e_b * e_b
    if var_a <= _VAR_FLOOR or var_b <= _VAR_FLOOR:
        raise ZeroVariance("a marginal observable has zero variance")
    return (e_ab - e_a * e_b) / math.sqrt(var_a * var_b)


def correlator_report(joint, values_a=None, values_b=None):
    """MP, MI and PCC of one joint distribution."""
    return CorrelatorReport(
        mp=mutual_predictability(joint),
        mi=mutual_information(joint),
        pcc=pcc_from_joint(joint, values_a, values_b),
    )
