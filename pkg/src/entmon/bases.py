"""Measurement bases (computational, Fourier, conjugates, MUB families)
and the observables used by the correlator relations."""

from dataclasses import dataclass

import numpy as np

from .errors import DimMismatch, NotPrime
from .numerics import TOLS


@dataclass(frozen=True)
class MeasurementBasis:
    """Ordered orthonormal set of d complex vectors (columns) with a label."""

    dim: int
    vectors: np.ndarray  # d x d, column i is basis vector i
    label: str

    def __post_init__(self):
        gram = self.vectors.conj().T @ self.vectors
        if np.max(np.abs(gram - np.eye(self.dim))) > TOLS.orthonormality:
            raise DimMismatch(f"basis '{self.label}' is not orthonormal")

    def vector(self, i):
        return self.vectors[:, i]


@dataclass(frozen=True)
class OutcomeValues:
    """Observable eigenvalue assigned to each measurement outcome."""

    dim: int
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.dim:
            raise DimMismatch("value count does not match dimension")
        if len(set(self.values)) < 2:
            raise DimMismatch(
                "need at least two distinct outcome values for a PCC")


def default_outcome_values(dim):
    """The (0, 1, -1, 2, -2, ...) assignment truncated to dim entries."""
    vals = [0.0]
    k = 1
    while len(vals) < dim:
        vals.append(float(k))
        if len(vals) < dim:
            vals.append(float(-k))
        k += 1
    return OutcomeValues(dim=dim, values=tuple(vals[:dim]))


def computational_basis(dim):
    return MeasurementBasis(
        dim=dim, vectors=np.eye(dim, dtype=np.complex128),
        label="computational")


def fourier_basis(dim):
    """Eigenbasis of the generalized shift operator.

    Vector i has entries omega**(i*j) / sqrt(d) with omega = exp(2 pi i / d);
    for d = 3 this reproduces the standard qutrit superposition triple with
    omega = exp(2i*pi/3).
    """
    omega = np.exp(2j * np.pi / dim)
    j = np.arange(dim)
    vectors = omega ** np.outer(j, j) / np.sqrt(dim)
    return MeasurementBasis(dim=dim, vectors=vectors, label="fourier")


_CONJ_LABELS = {
    "fourier": "conjugate_fourier",
    "conjugate_fourier": "fourier",
    "computational": "computational",
}


def conjugate_basis(basis):
    """Entrywise complex conjugate of a basis; an involution."""
    label = _CONJ_LABELS.get(basis.label)
    if label is None:
        label = (basis.label[10:] if basis.label.startswith("conjugate_")
                 else "conjugate_" + basis.label)
    return MeasurementBasis(
        dim=basis.dim, vectors=basis.vectors.conj(), label=label)


def is_mutually_unbiased(a, b, tol=TOLS.unbiasedness):
    """True iff every cross overlap has magnitude 1/sqrt(d) within tol."""
    if a.dim != b.dim:
        raise DimMismatch(f"dims differ: {a.dim} vs {b.dim}")
    overlaps = np.abs(a.vectors.conj().T @ b.vectors)
    return bool(np.max(np.abs(overlaps - 1.0 / np.sqrt(a.dim))) <= tol)


def _is_prime(n):
    if n < 2:
        return False
    for p in range(2, int(n ** 0.5) + 1):
        if n % p == 0:
            return False
    return True


def mub_family(dim):
    """The full set of dim+1 mutually unbiased bases for prime dim.

    Power-of-phase construction: basis k has vectors with entries
    gamma**(k*j*j) * omega**(m*j) / sqrt(d), gamma = i for d = 2 and
    gamma = omega for odd primes. k = 0 is the Fourier basis; the
    computational basis completes the family.
    """
    if not _is_prime(dim):
        raise NotPrime(f"MUB family construction requires prime d, got {dim}")
    omega = np.exp(2j * np.pi / dim)
    gamma = 1j if dim == 2 else omega
    j = np.arange(dim)
    family = [computational_basis(dim), fourier_basis(dim)]
    for k in range(1, dim):
        phases = gamma ** (k * j * j)
        vectors = (phases[:, None] * omega ** np.outer(j, j)) / np.sqrt(dim)
        family.append(
            MeasurementBasis(dim=dim, vectors=vectors, label=f"mub({k})"))
    return family


def x_operator(dim):
    """Hermitian operator with zero diagonal and 2 in every off-diagonal.

    Scale fixed so that X**2 = 2(d-2) X + 4(d-1) I holds exactly.
    """
    return 2.0 * (np.ones((dim, dim)) - np.eye(dim)).astype(np.complex128)


def z_operator(dim):
    """Diagonal observable with eigenvalue i on computational outcome i."""
    return np.diag(np.arange(dim, dtype=np.float64)).astype(np.complex128)
