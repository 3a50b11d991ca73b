"""Central tolerance constants."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    hermitian: float = 1e-12  # |M - M^H| and imag(diag) limit
    trace: float = 1e-12  # |Tr rho - 1|
    psd: float = 1e-10  # eigenvalues in [-psd, 0) are clamped to 0
    simplex: float = 1e-12  # |sum p - 1|
    zero_prob: float = 1e-15  # probabilities below this count as exact zeros in entropy sums
    jacobi: float = 1e-14  # relative off-diagonal Frobenius mass at convergence
    jacobi_max_sweeps: int = 50
    xstate: float = 1e-12  # magnitude of entries allowed off the X pattern
    critical_field: float = 1e-12  # relative band |B - 4 J_H| <= tol * J_H


TOL = Tolerances()
