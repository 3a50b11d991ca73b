"""Two-qubit states: the N=2 Heisenberg Hamiltonian, its Gibbs state, Werner states.

Basis ordering is |00>, |01>, |10>, |11> throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .exceptions import ValidationError
from .linalg import as_hermitian, eigh, mat_fn
from .tolerances import TOL

DIM = 4


@dataclass(frozen=True)
class ModelParams:
    """Antiferromagnetic coupling ``j_h``, field ``b`` along z and Boltzmann constant ``k_b``."""

    j_h: float = 1.0
    b: float = 0.0
    k_b: float = 1.0

    def __post_init__(self):
        for name in ("j_h", "b", "k_b"):
            value = getattr(self, name)
            if not isinstance(value, (int, float, np.floating, np.integer)) or not math.isfinite(value):
                raise ValidationError(f"{name} must be a finite real number, got {value!r}")
        if self.j_h <= 0:
            raise ValidationError(f"j_h must be > 0 (antiferromagnetic), got {self.j_h}")
        if self.b < 0:
            raise ValidationError(f"b must be >= 0, got {self.b}")
        if self.k_b <= 0:
            raise ValidationError(f"k_b must be > 0, got {self.k_b}")

    def reduced(self, t: float) -> tuple[float, float]:
        """Return ``(w, y) = (J_H / k_B T, B / k_B T)``."""
        t = check_temperature(t)
        kt = self.k_b * t
        return self.j_h / kt, self.b / kt

    @property
    def critical_field(self) -> float:
        return 4.0 * self.j_h

    def with_field(self, b: float) -> "ModelParams":
        return ModelParams(self.j_h, b, self.k_b)


def check_temperature(t) -> float:
    try:
        t = float(t)
    except (TypeError, ValueError):
        raise ValidationError(f"temperature must be a real number, got {t!r}") from None
    if not t > 0 or not math.isfinite(t):
        raise ValidationError(f"temperature must be finite and > 0, got {t}")
    return t


class BellChoice(str, Enum):
    PHI_PLUS = "phi+"
    PHI_MINUS = "phi-"
    PSI_PLUS = "psi+"
    PSI_MINUS = "psi-"

    def vector(self) -> np.ndarray:
        s = 1.0 / math.sqrt(2.0)
        return {
            BellChoice.PHI_PLUS: np.array([s, 0, 0, s], dtype=complex),
            BellChoice.PHI_MINUS: np.array([s, 0, 0, -s], dtype=complex),
            BellChoice.PSI_PLUS: np.array([0, s, s, 0], dtype=complex),
            BellChoice.PSI_MINUS: np.array([0, s, -s, 0], dtype=complex),
        }[self]


class DensityMatrix:
    """Immutable validated 4x4 density matrix (Hermitian, unit trace, PSD)."""

    __slots__ = ("_m",)

    def __init__(self, matrix, *, check_psd: bool = True):
        m = as_hermitian(matrix)
        if m.shape != (DIM, DIM):
            raise ValidationError(f"density matrix must be {DIM}x{DIM}, got {m.shape}")
        tr = np.trace(m).real
        if abs(tr - 1.0) > TOL.trace:
            raise ValidationError(f"density matrix trace is {tr!r}, expected 1")
        if check_psd:
            lowest = eigh(m).values[-1]
            if lowest < -TOL.psd:
                raise ValidationError(f"density matrix has negative eigenvalue {lowest:.3e}")
        m.setflags(write=False)
        self._m = m

    @property
    def matrix(self) -> np.ndarray:
        return self._m

    def __array__(self, dtype=None, copy=None):
        return self._m.astype(dtype) if dtype is not None else self._m.copy()

    def spectrum(self) -> np.ndarray:
        """Eigenvalues, descending, with roundoff negatives clamped to zero."""
        values = eigh(self._m).values
        if values[-1] < -TOL.psd:
            raise ValidationError(f"density matrix has negative eigenvalue {values[-1]:.3e}")
        return np.clip(values, 0.0, None)

    def __repr__(self) -> str:
        return f"DensityMatrix(\n{np.array2string(self._m, precision=6)})"


def as_density(rho) -> DensityMatrix:
    return rho if isinstance(rho, DensityMatrix) else DensityMatrix(rho)


def hamiltonian(p: ModelParams) -> np.ndarray:
    """Matrix of the periodic two-site Heisenberg chain in a z field."""
    j, b = p.j_h, p.b
    return np.array(
        [
            [2 * j + 2 * b, 0, 0, 0],
            [0, -2 * j, 4 * j, 0],
            [0, 4 * j, -2 * j, 0],
            [0, 0, 0, 2 * j - 2 * b],
        ],
        dtype=complex,
    )


def boltzmann_weights(p: ModelParams, t: float) -> tuple[float, float, float, float]:
    """Weights of |00>, triplet-0, singlet and |11>, scaled so the largest is 1.

    Returns ``(e_wmy, e_t, e_s, e_wpy)`` up to the common factor
    ``exp(max exponent)``; ``e_wp = e_t + e_s`` and ``e_wm = e_t - e_s``.
    """
    w, y = p.reduced(t)
    exponents = np.array([-2 * w - 2 * y, -2 * w, 6 * w, -2 * w + 2 * y])
    weights = np.exp(exponents - exponents.max())
    return tuple(float(x) for x in weights)


def thermal_state(p: ModelParams, t: float) -> DensityMatrix:
    """Closed-form Gibbs state exp(-H / k_B T) / Z."""
    e_wmy, e_t, e_s, e_wpy = boltzmann_weights(p, t)
    e_wp = e_t + e_s
    e_wm = e_t - e_s
    z = e_wmy + e_wp + e_wpy
    rho = np.array(
        [
            [e_wmy, 0, 0, 0],
            [0, e_wp / 2, e_wm / 2, 0],
            [0, e_wm / 2, e_wp / 2, 0],
            [0, 0, 0, e_wpy],
        ],
        dtype=complex,
    ) / z
    return DensityMatrix(rho, check_psd=False)


def thermal_state_expm(p: ModelParams, t: float) -> DensityMatrix:
    """Gibbs state through the spectral matrix exponential of the Hamiltonian."""
    t = check_temperature(t)
    h = hamiltonian(p)
    e_min = eigh(h).values[-1]
    unnormalized = mat_fn(h, lambda e: np.exp(-(e - e_min) / (p.k_b * t)))
    return DensityMatrix(unnormalized / np.trace(unnormalized).real, check_psd=False)


def werner_state(x: float, bell: BellChoice | str = BellChoice.PHI_PLUS) -> DensityMatrix:
    """x |bell><bell| + (1 - x) I / 4."""
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise ValidationError(f"Werner mixing x must lie in [0, 1], got {x}")
    psi = BellChoice(bell).vector()
    rho = x * np.outer(psi, psi.conj()) + (1.0 - x) / DIM * np.eye(DIM)
    return DensityMatrix(rho, check_psd=False)


def maximally_mixed() -> DensityMatrix:
    return DensityMatrix(np.eye(DIM) / DIM, check_psd=False)


def singlet_projector() -> np.ndarray:
    psi = BellChoice.PSI_MINUS.vector()
    return np.outer(psi, psi.conj())


def ground_state(p: ModelParams) -> DensityMatrix:
    """T=0 limit: singlet below the critical field, |11> above, equal mixture at it."""
    up_up = np.zeros((DIM, DIM), dtype=complex)
    up_up[3, 3] = 1.0
    if abs(p.b - p.critical_field) <= TOL.critical_field * p.j_h:
        return DensityMatrix(0.5 * singlet_projector() + 0.5 * up_up, check_psd=False)
    if p.b < p.critical_field:
        return DensityMatrix(singlet_projector(), check_psd=False)
    return DensityMatrix(up_up, check_psd=False)
