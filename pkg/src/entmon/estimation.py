"""Empirical pipeline: ingest measured coincidence matrices, compute
correlators per set, aggregate mean +/- sample std, and derive monotone
estimates."""

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .bases import OutcomeValues, default_outcome_values
from .correlators import (CorrelatorReport, JointProbabilityMatrix,
                          correlator_report)
from .errors import (DimInconsistent, ModelMismatch, NegativeEntry,
                     OutOfRangeInput, ParseError)
from .monotones import invert_relation

_PLANES = ("image", "focal")

#: basis labels implied by the detection plane (A side, B side)
_PLANE_BASES = {
    "image": ("computational", "computational"),
    "focal": ("fourier", "fourier"),
}


def conjugate_permutation(dim):
    """The outcome permutation j -> (d - j) mod d induced by conjugating
    the Fourier basis."""
    return tuple((dim - j) % dim for j in range(dim))


def default_pairing(plane, dim):
    """Identity for the image plane; the conjugate permutation for the
    focal plane (measured matrices there are Fourier-labeled on both
    sides while the intended B basis is the conjugate)."""
    if plane == "focal":
        return conjugate_permutation(dim)
    return tuple(range(dim))


@dataclass
class MatrixSet:
    """One or more raw d x d coincidence grids with their conventions.

    ``matrices`` hold raw nonnegative entries in A-major order
    (``m[i][j]`` = counts for A-outcome i, B-outcome j); ``normalizations``
    records the total divided out of each grid.
    """

    plane: str
    matrices: list
    pairing: tuple
    values_a: OutcomeValues
    values_b: OutcomeValues
    normalizations: list = field(default_factory=list)
    sources: list = field(default_factory=list)

    @property
    def dim(self):
        return self.matrices[0].shape[0]

    def joint(self, index):
        m = self.matrices[index]
        basis_a, basis_b = _PLANE_BASES[self.plane]
        return JointProbabilityMatrix(
            dim=self.dim, probs=m / m.sum(), basis_a=basis_a,
            basis_b=basis_b, pairing=self.pairing)


@dataclass
class EstimationReport:
    """Per-set correlators, their aggregate, and derived monotones."""

    per_set: list  # CorrelatorReport per matrix
    aggregate: dict  # {"mp": (mean, std|None), "mi": ..., "pcc": ...}
    monotones: list  # MonotoneEstimate
    plane: str
    pairing: tuple
    values: tuple
    inputs: list
    model: str
    flags: list = field(default_factory=list)

    def to_dict(self):
        return {
            "inputs": list(self.inputs),
            "plane": self.plane,
            "pairing": list(self.pairing),
            "values": list(self.values),
            "per_set": [
                {"mp": r.mp, "mi": r.mi, "pcc": r.pcc} for r in self.per_set
            ],
            "aggregate": {
                key: {"mean": mean, "std": std}
                for key, (mean, std) in self.aggregate.items()
            },
            "monotones": [
                {"kind": m.kind, "method": m.method,
                 "value": m.value, "sigma": m.sigma}
                for m in self.monotones
            ],
            "flags": list(self.flags),
        }

    def to_text(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def _parse_grid(path):
    rows = []
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                rows.append([float(tok) for tok in line.split(",")])
    except (OSError, ValueError) as exc:
        raise ParseError(f"{path}: {exc}") from exc
    if not rows or any(len(r) != len(rows) for r in rows):
        raise ParseError(f"{path}: grid is not square d x d")
    grid = np.asarray(rows, dtype=np.float64)
    if np.any(grid < 0):
        raise NegativeEntry(f"{path}: negative entry in matrix")
    if grid.sum() <= 0:
        raise ParseError(f"{path}: matrix sums to zero")
    return grid


def load_matrix_set(paths, plane, pairing=None, values_a=None, values_b=None):
    """Read matrix files (rows = B-side outcome y, columns = A-side
    outcome x) into a MatrixSet.

    Each grid is normalized to sum 1 and the factor recorded; files must
    share one dimension.
    """
    if plane not in _PLANES:
        raise OutOfRangeInput(f"plane must be one of {_PLANES}")
    matrices = []
    normalizations = []
    dim = None
    for path in paths:
        grid = _parse_grid(path)
        if dim is None:
            dim = grid.shape[0]
        elif grid.shape[0] != dim:
            raise DimInconsistent(
                f"{path}: dimension {grid.shape[0]} != {dim}")
        normalizations.append(float(grid.sum()))
        # file layout is [y][x]; store A-major
        matrices.append(grid.T / grid.sum())
    if pairing is None:
        pairing = default_pairing(plane, dim)
    if values_a is None:
        values_a = default_outcome_values(dim)
    if values_b is None:
        values_b = default_outcome_values(dim)
    return MatrixSet(plane=plane, matrices=matrices, pairing=tuple(pairing),
                     values_a=values_a, values_b=values_b,
                     normalizations=normalizations,
                     sources=[str(p) for p in paths])


def _aggregate(samples):
    mean = float(np.mean(samples))
    std = float(np.std(samples, ddof=1)) if len(samples) > 1 else None
    return mean, std


def _derive_monotones(mp, mi, pcc, dim, plane, model, m, sigmas):
    mp_sig, mi_sig, pcc_sig = sigmas
    out = []
    if plane == "image":
        # MI equals EOF only for the computational basis
        out.append(invert_relation(mi, "from_mi", dim, sigma=mi_sig))
    elif model == "pure":
        out.append(invert_relation(mp, "from_mp_pure", dim, sigma=mp_sig))
        out.append(invert_relation(pcc, "from_pcc", dim, sigma=pcc_sig))
    else:
        out.append(invert_relation(mp, "from_mp_isotropic", dim, m=m,
                                   sigma=mp_sig))
        out.append(invert_relation(mp, "alpha", dim, sigma=mp_sig))
    return out


def estimate(matrix_set, model="pure", m=None):
    """Correlators per matrix, their mean +/- sample std, and monotones.

    The isotropic model inverts focal-plane MP only; requesting it for an
    image-plane set raises ModelMismatch.
    """
    if model not in ("pure", "isotropic"):
        raise OutOfRangeInput("model must be 'pure' or 'isotropic'")
    if model == "isotropic":
        if matrix_set.plane != "focal":
            raise ModelMismatch("isotropic inversion needs focal-plane MP")
        if m is None or m < 1:
            raise ModelMismatch("isotropic model requires m >= 1")
    reports = [
        correlator_report(matrix_set.joint(i), matrix_set.values_a,
                          matrix_set.values_b)
        for i in range(len(matrix_set.matrices))
    ]
    mp_mean, mp_std = _aggregate([r.mp for r in reports])
    mi_mean, mi_std = _aggregate([r.mi for r in reports])
    pcc_mean, pcc_std = _aggregate([r.pcc for r in reports])
    monotones = _derive_monotones(
        mp_mean, mi_mean, pcc_mean, matrix_set.dim, matrix_set.plane,
        model, m, (mp_std, mi_std, pcc_std))
    flags = [f"clamped:{mono.method}" for mono in monotones if mono.clamped]
    return EstimationReport(
        per_set=reports,
        aggregate={"mp": (mp_mean, mp_std), "mi": (mi_mean, mi_std),
                   "pcc": (pcc_mean, pcc_std)},
        monotones=monotones,
        plane=matrix_set.plane,
        pairing=matrix_set.pairing,
        values=matrix_set.values_a.values,
        inputs=list(matrix_set.sources),
        model=model if matrix_set.plane == "focal" else "pure",
        flags=flags)


def bootstrap_uncertainty(matrix_set, total_counts, resamples, seed,
                          model="pure", m=None):
    """Shot-noise uncertainty by multinomial resampling of each matrix.

    Every matrix is resampled at the given count budget; the reported
    sigma is the standard deviation over resamples. Deterministic for a
    fixed seed.
    """
    if total_counts <= 0:
        raise OutOfRangeInput("total_counts must be positive")
    if resamples < 100:
        raise OutOfRangeInput("resamples must be >= 100")
    rng = np.random.default_rng(seed)
    base = estimate(matrix_set, model=model, m=m)
    mp_s, mi_s, pcc_s = [], [], []
    mono_samples = [[] for _ in base.monotones]
    dim = matrix_set.dim
    for _ in range(resamples):
        mp_vals, mi_vals, pcc_vals = [], [], []
        for probs in matrix_set.matrices:
            p = probs.ravel() / probs.sum()
            counts = rng.multinomial(total_counts, p).reshape(dim, dim)
            resampled = MatrixSet(
                plane=matrix_set.plane,
                matrices=[counts.astype(np.float64)],
                pairing=matrix_set.pairing,
                values_a=matrix_set.values_a,
                values_b=matrix_set.values_b)
            rep = correlator_report(resampled.joint(0),
                                    matrix_set.values_a,
                                    matrix_set.values_b)
            mp_vals.append(rep.mp)
            mi_vals.append(rep.mi)
            pcc_vals.append(rep.pcc)
        mp_i = float(np.mean(mp_vals))
        mi_i = float(np.mean(mi_vals))
        pcc_i = float(np.mean(pcc_vals))
        mp_s.append(mp_i)
        mi_s.append(mi_i)
        pcc_s.append(pcc_i)
        monos = _derive_monotones(mp_i, mi_i, pcc_i, dim, matrix_set.plane,
                                  base.model, m, (None, None, None))
        for slot, mono in zip(mono_samples, monos):
            slot.append(mono.value)
    aggregate = {
        "mp": (base.aggregate["mp"][0], float(np.std(mp_s, ddof=1))),
        "mi": (base.aggregate["mi"][0], float(np.std(mi_s, ddof=1))),
        "pcc": (base.aggregate["pcc"][0], float(np.std(pcc_s, ddof=1))),
    }
    monotones = [
        type(mono)(kind=mono.kind, value=mono.value, method=mono.method,
                   sigma=float(np.std(samples, ddof=1)),
                   clamped=mono.clamped)
        for mono, samples in zip(base.monotones, mono_samples)
    ]
    return EstimationReport(
        per_set=base.per_set, aggregate=aggregate, monotones=monotones,
        plane=base.plane, pairing=base.pairing, values=base.values,
        inputs=base.inputs, model=base.model,
        flags=base.flags + [f"bootstrap:{total_counts}:{resamples}:{seed}"])
