"""Scalar measures on probability vectors and two-qubit density matrices.

Entropies and divergences use natural logarithms.  Entanglement of
formation is in bits, so a Bell state has ``E_f = 1``.
"""

from __future__ import annotations

import math

import numpy as np

from .exceptions import DomainError, ValidationError
from .linalg import eigh, sqrtm_psd
from .states import DIM, DensityMatrix, ModelParams, as_density, maximally_mixed
from .tolerances import TOL

LN_DIM = math.log(DIM)

# sigma_y (x) sigma_y
_YY = np.array(
    [
        [0, 0, 0, -1],
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        [-1, 0, 0, 0],
    ],
    dtype=complex,
)


def as_prob(p) -> np.ndarray:
    """Validate a point of the probability simplex."""
    arr = np.asarray(p, dtype=float)
    if arr.ndim != 1 or arr.size == 0:
        raise ValidationError("probability vector must be 1-D and non-empty")
    if not np.all(np.isfinite(arr)):
        raise ValidationError("probability vector has non-finite entries")
    if np.any(arr < 0.0) or np.any(arr > 1.0):
        raise ValidationError("probabilities must lie in [0, 1]")
    if abs(arr.sum() - 1.0) > TOL.simplex:
        raise ValidationError(f"probabilities sum to {arr.sum()!r}, expected 1")
    return arr


def _pair(p, q) -> tuple[np.ndarray, np.ndarray]:
    p, q = as_prob(p), as_prob(q)
    if p.shape != q.shape:
        raise ValidationError(f"length mismatch: {p.size} vs {q.size}")
    return p, q


def _entropy(p: np.ndarray) -> float:
    nz = p[p > TOL.zero_prob]
    return float(-np.sum(nz * np.log(nz))) + 0.0  # no -0.0


def shannon_entropy(p) -> float:
    """-sum p ln p with 0 ln 0 = 0."""
    return _entropy(as_prob(p))


def kl_divergence(p, q) -> float:
    p, q = _pair(p, q)
    support = p > TOL.zero_prob
    if np.any(q[support] <= 0.0):
        raise DomainError("KL divergence is infinite: q vanishes where p does not")
    return float(np.sum(p[support] * np.log(p[support] / q[support])))


def j0(p, q) -> float:
    """KL divergence of ``p`` from the midpoint of ``p`` and ``q``."""
    p, q = _pair(p, q)
    return kl_divergence(p, 0.5 * (p + q))


def j1(p, q) -> float:
    """Symmetrized divergence 2 S[(p+q)/2] - S[p] - S[q]."""
    p, q = _pair(p, q)
    return 2.0 * _entropy(0.5 * (p + q)) - _entropy(p) - _entropy(q)


def jsd(p, q, pi1: float = 0.5, pi2: float = 0.5) -> float:
    """Weighted Jensen-Shannon divergence S[pi1 p + pi2 q] - pi1 S[p] - pi2 S[q]."""
    p, q = _pair(p, q)
    if not (pi1 > 0 and pi2 > 0) or abs(pi1 + pi2 - 1.0) > TOL.simplex:
        raise ValidationError(f"weights must be positive and sum to 1, got {pi1}, {pi2}")
    value = _entropy(pi1 * p + pi2 * q) - pi1 * _entropy(p) - pi2 * _entropy(q)
    return max(value, 0.0)


def spectral_jsd_to_uniform(spectrum) -> float:
    """JSD between a 4-level spectrum and the uniform distribution."""
    spec = np.asarray(spectrum, dtype=float)
    uniform = np.full(spec.size, 1.0 / spec.size)
    return max(_entropy(0.5 * (spec + uniform)) - 0.5 * _entropy(spec) - 0.5 * _entropy(uniform), 0.0)


def von_neumann_entropy(rho) -> float:
    return _entropy(as_density(rho).spectrum())


def normalized_entropy(rho) -> float:
    return von_neumann_entropy(rho) / LN_DIM


def quantum_jsd(rho1, rho2) -> float:
    """Equal-weight quantum Jensen-Shannon divergence, in nats."""
    r1, r2 = as_density(rho1), as_density(rho2)
    mix = DensityMatrix(0.5 * (r1.matrix + r2.matrix), check_psd=False)
    value = (
        _entropy(mix.spectrum())
        - 0.5 * _entropy(r1.spectrum())
        - 0.5 * _entropy(r2.spectrum())
    )
    return max(value, 0.0)


def entropic_nontriviality(rho) -> float:
    """C_JS = JSD(rho, I/4) * H_vN(rho).

    Both factors depend on the spectrum only, since I/4 commutes with every
    state, so a single eigen-decomposition suffices.
    """
    spec = as_density(rho).spectrum()
    return spectral_jsd_to_uniform(spec) * _entropy(spec) / LN_DIM


def jsd_to_maximally_mixed(rho) -> float:
    return quantum_jsd(rho, maximally_mixed())


def spin_flip(rho) -> np.ndarray:
    m = as_density(rho).matrix
    return _YY @ m.conj() @ _YY


def concurrence_wootters(rho) -> float:
    """Wootters concurrence of a general two-qubit state.

    The decreasing lambdas are the singular values of
    ``A = sqrt(rho) sqrt(rho~)``, i.e. the square roots of the eigenvalues of
    ``sqrt(rho) rho~ sqrt(rho)``.  They are read off as the positive
    eigenvalues of the Hermitian block matrix ``[[0, A], [A^H, 0]]``, which
    keeps lambdas near zero accurate to machine precision instead of
    square-rooting a roundoff-sized eigenvalue.
    """
    rho = as_density(rho)
    root = sqrtm_psd(rho.matrix)
    # sqrt(rho~) = YY conj(sqrt(rho)) YY
    a = root @ _YY @ root.conj() @ _YY
    zero = np.zeros((DIM, DIM), dtype=complex)
    lam = eigh(np.block([[zero, a], [a.conj().T, zero]])).values[:DIM]
    lam = np.clip(lam, 0.0, None)
    return float(min(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]), 1.0))


def is_xstate(rho, tol: float = TOL.xstate) -> bool:
    m = np.asarray(as_density(rho).matrix)
    mask = np.eye(DIM, dtype=bool) | np.fliplr(np.eye(DIM, dtype=bool))
    return bool(np.all(np.abs(m[~mask]) <= tol))


def concurrence_xstate(rho) -> float:
    """Closed-form concurrence of an X-shaped two-qubit state."""
    rho = as_density(rho)
    if not is_xstate(rho):
        raise ValidationError("state is not X-shaped")
    m = rho.matrix
    d = m.diagonal().real
    a = abs(m[1, 2]) - math.sqrt(max(d[0] * d[3], 0.0))
    b = abs(m[0, 3]) - math.sqrt(max(d[1] * d[2], 0.0))
    return float(min(2.0 * max(0.0, a, b), 1.0))


def _stable_ratio(p: ModelParams, t: float) -> float:
    """(e^{8w} - 3) / (1 + e^{-2y} + e^{2y} + e^{8w}), unclamped and overflow-free."""
    w, y = p.reduced(t)
    m = max(8.0 * w, 2.0 * y)
    numerator = math.exp(8.0 * w - m) - 3.0 * math.exp(-m)
    denominator = math.exp(-m) + math.exp(-2.0 * y - m) + math.exp(2.0 * y - m) + math.exp(8.0 * w - m)
    return numerator / denominator


def _entangled(p: ModelParams, t: float) -> bool:
    w, _ = p.reduced(t)
    # sign of the raw numerator e^{8w} - 3
    return 8.0 * w > 2.0 or math.expm1(8.0 * w) - 2.0 > 0.0


def concurrence_thermal(p: ModelParams, t: float) -> float:
    """Analytic concurrence of the Gibbs state; zero at and above T_c."""
    if not _entangled(p, t):
        return 0.0
    return max(0.0, _stable_ratio(p, t))


def binary_entropy_bits(u: float) -> float:
    if u <= 0.0 or u >= 1.0:
        return 0.0
    return -u * math.log2(u) - (1.0 - u) * math.log2(1.0 - u)


def entanglement_of_formation(c: float) -> float:
    """Wootters entanglement of formation, in bits, from the concurrence."""
    c = float(c)
    if not 0.0 <= c <= 1.0:
        raise ValidationError(f"concurrence must lie in [0, 1], got {c}")
    root = math.sqrt(1.0 - c * c)
    # (1 - root) / 2 without cancellation for small c
    small = 0.5 * c * c / (1.0 + root)
    if small <= 0.0:
        return 0.0
    big = 1.0 - small
    return -big * math.log2(big) - small * math.log2(small)


def degree_of_mixture(rho) -> float:
    """Inverse purity 1 / Tr[rho^2]."""
    m = as_density(rho).matrix
    purity = float(np.sum(np.abs(m) ** 2))
    return 1.0 / purity
