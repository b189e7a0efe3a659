"""Pure Schmidt states, isotropic mixtures and random simplex sampling."""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import AllZero, AlphaOutOfRange, NegativeCoefficient
from .numerics import TOLS, BipartiteShape, as_matrix
from .numerics import partial_trace  # noqa: F401  (re-exported per module API)


@dataclass(frozen=True)
class SchmidtState:
    """Pure bipartite qudit given by nonnegative Schmidt coefficients."""

    dim: int
    coefficients: tuple
    renormalized: bool = False

    def __post_init__(self):
        if len(self.coefficients) != self.dim:
            raise NegativeCoefficient(
                "coefficient count does not match dimension")
        norm = math.fsum(c * c for c in self.coefficients)
        if abs(norm - 1.0) > TOLS.normalization:
            raise NegativeCoefficient(
                "coefficients not normalized; use make_schmidt_state")

    @property
    def shape(self):
        return BipartiteShape(self.dim, self.dim)


def make_schmidt_state(coefficients):
    """Normalize a coefficient list into a SchmidtState.

    Divides by sqrt(sum of squares); flags the state when the input drifted
    from unit norm by more than the warn threshold.
    """
    coeffs = [float(c) for c in coefficients]
    if any(c < 0 for c in coeffs):
        raise NegativeCoefficient(f"negative Schmidt coefficient in {coeffs}")
    norm_sq = math.fsum(c * c for c in coeffs)
    if norm_sq == 0.0:
        raise AllZero("all Schmidt coefficients are zero")
    norm = math.sqrt(norm_sq)
    drifted = abs(norm_sq - 1.0) > TOLS.renorm_warn
    return SchmidtState(
        dim=len(coeffs),
        coefficients=tuple(c / norm for c in coeffs),
        renormalized=drifted,
    )


def to_density(state):
    """Rank-1 projector of the Schmidt state on the d*d bipartite space."""
    d = state.dim
    psi = np.zeros(d * d, dtype=np.complex128)
    for i, lam in enumerate(state.coefficients):
        psi[i * d + i] = lam
    return np.outer(psi, psi.conj())


@dataclass(frozen=True)
class IsotropicState:
    """Maximally entangled state mixed with white noise.

    Exactly one of alpha/fidelity is primary; the other is derived via
    F = alpha + (1 - alpha) / d**2.
    """

    dim: int
    alpha: float
    fidelity: float = field(default=None)

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise AlphaOutOfRange(f"alpha = {self.alpha} outside [0, 1]")
        if self.fidelity is None:
            d2 = self.dim * self.dim
            object.__setattr__(
                self, "fidelity", self.alpha + (1.0 - self.alpha) / d2)

    @classmethod
    def from_fidelity(cls, dim, fidelity):
        if not 0.0 <= fidelity <= 1.0:
            raise AlphaOutOfRange(f"fidelity = {fidelity} outside [0, 1]")
        d2 = dim * dim
        alpha = (fidelity - 1.0 / d2) / (1.0 - 1.0 / d2)
        return cls(dim=dim, alpha=alpha, fidelity=fidelity)


def maximally_entangled(dim):
    return make_schmidt_state([1.0] * dim)


def isotropic_density(iso):
    """Density matrix of the isotropic state on the d*d bipartite space."""
    d = iso.dim
    pure = to_density(maximally_entangled(d))
    return iso.alpha * pure + (1.0 - iso.alpha) / (d * d) * np.eye(
        d * d, dtype=np.complex128)


def random_schmidt(dim, seed):
    """Schmidt state with squared coefficients uniform on the simplex.

    Flat Dirichlet over the lambda**2 vector; deterministic for a fixed seed.
    """
    if dim < 2:
        raise NegativeCoefficient("dim must be >= 2")
    rng = np.random.default_rng(seed)
    lam_sq = rng.dirichlet(np.ones(dim))
    return make_schmidt_state(np.sqrt(lam_sq))


def random_schmidt_stream(dim, seed, count):
    """Deterministic sequence of random Schmidt states from one seed."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        lam_sq = rng.dirichlet(np.ones(dim))
        out.append(make_schmidt_state(np.sqrt(lam_sq)))
    return out


def validate_density(m, shape=None):
    """True when m is Hermitian, unit-trace and PSD within tolerances."""
    from .numerics import is_hermitian, is_psd, is_unit_trace

    a = as_matrix(m)
    if shape is not None and a.shape != (shape.side, shape.side):
        return False
    return is_hermitian(a) and is_unit_trace(a) and is_psd(a)
