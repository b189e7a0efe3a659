"""Simulator of the triple-slit spatial-bin qutrit measurement: far-field
phase mapping, sinc-envelope coincidence profiles, eigenstate detector
positions, and synthetic correlation matrices with optional shot noise."""

import math
from dataclasses import dataclass

import numpy as np

from .bases import computational_basis, conjugate_basis, fourier_basis
from .correlators import joint_probability_matrix
from .errors import WrongDimension, WrongPlane
from .estimation import MatrixSet
from .bases import default_outcome_values


@dataclass(frozen=True)
class SlitGeometry:
    """Triple-slit mask and far-field lens parameters, all in meters."""

    slit_width: float
    slit_pitch: float
    wavelength: float
    focal_length: float

    def __post_init__(self):
        if min(self.slit_width, self.slit_pitch, self.wavelength,
               self.focal_length) <= 0:
            raise WrongDimension("geometry lengths must be positive")
        if self.slit_width >= self.slit_pitch:
            raise WrongDimension("slit width must be below the pitch")


def reference_geometry():
    """30 um slits on a 100 um pitch, 810 nm light, 7.5 cm lens."""
    return SlitGeometry(slit_width=30e-6, slit_pitch=100e-6,
                        wavelength=0.810e-6, focal_length=7.5e-2)


@dataclass(frozen=True)
class ScanConfig:
    """Detection-plane scan parameters; lengths in meters."""

    plane: str
    fixed_position: float = 0.0
    scan_range: float = 2e-3
    step: float = 30e-6
    counts_budget: int = None
    seed: int = None
    pixel_window: float = None  # top-hat detector integration width

    def __post_init__(self):
        if self.step <= 0 or self.scan_range <= 0:
            raise WrongDimension("step and range must be positive")


def theta_at(x, geometry):
    """Far-field phase 2 pi x d / (lambda f) at detector position x."""
    return (2.0 * math.pi * x * geometry.slit_pitch
            / (geometry.wavelength * geometry.focal_length))


def eigen_positions(geometry, dim):
    """Detector positions of the Fourier-basis eigenstates.

    x_k = k * lambda * f / (dim * pitch); spacing is 1/dim of the fringe
    period lambda * f / pitch.
    """
    if dim < 2:
        raise WrongDimension("dim must be >= 2")
    unit = (geometry.wavelength * geometry.focal_length
            / (dim * geometry.slit_pitch))
    return [k * unit for k in range(dim)]


def _phi_vector(theta, dim):
    return np.exp(1j * theta * np.arange(dim)) / math.sqrt(dim)


def _envelope_sq(x, geometry):
    k_x = 2.0 * math.pi * x / (geometry.wavelength * geometry.focal_length)
    return np.sinc(k_x * geometry.slit_width / (2.0 * math.pi)) ** 2


def _joint_rate(state, theta_signal, theta_idler):
    # joint amplitude: state projected onto phi(theta_s) (x) conj(phi(theta_i))
    lam = np.asarray(state.coefficients)
    d = state.dim
    phi_s = _phi_vector(theta_signal, d)
    phi_i = _phi_vector(theta_idler, d)
    amp = np.sum(lam * phi_s.conj() * phi_i)
    return float(np.abs(amp) ** 2)


def coincidence_profile(state, geometry, config):
    """Normalized coincidence rate versus scanned idler position.

    Signal arm fixed at ``config.fixed_position``; the rate is the sinc-
    squared single-slit envelope times the two-photon interference factor,
    normalized to its maximum.
    """
    if config.plane != "focal":
        raise WrongPlane("coincidence profile is a focal-plane measurement")
    if state.dim != 3:
        raise WrongDimension("profile simulation targets qutrit states")
    half = config.scan_range / 2.0
    positions = np.arange(-half, half + config.step / 2.0, config.step)
    theta_s = theta_at(config.fixed_position, geometry)

    def rate_at(x):
        return _envelope_sq(x, geometry) * _joint_rate(
            state, theta_s, theta_at(x, geometry))

    if config.pixel_window:
        offsets = np.linspace(-config.pixel_window / 2.0,
                              config.pixel_window / 2.0, 9)
        rates = np.array([
            np.mean([rate_at(x + dx) for dx in offsets]) for x in positions
        ])
    else:
        rates = np.array([rate_at(x) for x in positions])
    peak = rates.max()
    if peak > 0:
        rates = rates / peak
    return list(zip(positions.tolist(), rates.tolist()))


def simulate_correlation_matrix(state, geometry, config):
    """Synthetic d x d coincidence matrix sampled at the peak positions.

    Noiseless entries equal the joint distribution of the state in the
    plane's basis pair (computational for image, Fourier on the signal arm
    and its conjugate on the idler arm for focal; columns are labeled by
    the conjugate-basis outcome, so the stored pairing is the identity).
    With a counts budget, entries are multinomially sampled at that budget.
    """
    if config.plane not in ("image", "focal"):
        raise WrongPlane(f"unknown plane '{config.plane}'")
    if state.dim != 3:
        raise WrongDimension("matrix simulation targets qutrit states")
    d = state.dim
    if config.plane == "image":
        basis = computational_basis(d)
        joint = joint_probability_matrix(state, basis, basis)
    else:
        fb = fourier_basis(d)
        joint = joint_probability_matrix(state, fb, conjugate_basis(fb))
    probs = joint.probs
    if config.counts_budget:
        rng = np.random.default_rng(config.seed)
        counts = rng.multinomial(config.counts_budget, probs.ravel())
        matrix = counts.reshape(d, d).astype(np.float64)
    else:
        matrix = probs.copy()
    return MatrixSet(
        plane=config.plane,
        matrices=[matrix],
        pairing=tuple(range(d)),
        values_a=default_outcome_values(d),
        values_b=default_outcome_values(d),
        normalizations=[float(matrix.sum())],
        sources=["<simulated>"])


def write_profile_csv(profile, path):
    """Profile as comma-separated (position_m, normalized_rate)."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("position_m,normalized_rate\n")
        for x, r in profile:
            fh.write(f"{x:.17g},{r:.17g}\n")


def write_matrix_csv(matrix_set, path):
    """Matrix in the estimation file layout (rows = B outcome y)."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"# plane: {matrix_set.plane}\n")
        fh.write("# pairing: " + ",".join(str(i) for i in matrix_set.pairing)
                 + "\n")
        grid = matrix_set.matrices[0].T  # back to [y][x] file layout
        for row in grid:
            fh.write(",".join(f"{x:.17g}" for x in row) + "\n")
