"""Small dense Hermitian linear algebra.

The eigensolver is a cyclic complex Jacobi method.  It is meant for the 4x4
density matrices and Hamiltonians of a two-qubit system but works for any
small ``n``.
"""

from __future__ import annotations

import math
from typing import Callable, NamedTuple

import numpy as np

from .exceptions import DomainError, ValidationError
from .tolerances import TOL


class EigenDecomposition(NamedTuple):
    """Eigenvalues sorted descending with matching orthonormal eigenvector columns."""

    values: np.ndarray
    vectors: np.ndarray


def as_hermitian(m, tol: float = TOL.hermitian) -> np.ndarray:
    """Validate ``m`` as a square Hermitian matrix and return a complex copy."""
    a = np.array(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise ValidationError(f"expected a non-empty square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValidationError("matrix has non-finite entries")
    scale = max(1.0, float(np.max(np.abs(a))))
    if np.max(np.abs(a - a.conj().T)) > tol * scale:
        raise ValidationError("matrix is not Hermitian")
    if np.max(np.abs(a.diagonal().imag)) > tol * scale:
        raise ValidationError("Hermitian matrix has complex diagonal entries")
    # symmetrize away the admitted roundoff
    a = 0.5 * (a + a.conj().T)
    return a


def _jacobi(a: list[list[complex]], n: int) -> tuple[list[float], list[list[complex]]]:
    """Cyclic Jacobi on a Hermitian matrix held as nested lists (modified in place).

    Scalar Python arithmetic is used on purpose: for n <= 16 it beats the
    per-call overhead of numpy slicing by a wide margin.
    """
    v = [[1.0 + 0j if i == j else 0j for j in range(n)] for i in range(n)]
    d = [a[i][i].real for i in range(n)]
    pairs = [(p, q) for p in range(n - 1) for q in range(p + 1, n)]
    total_sq = sum(x.real * x.real + x.imag * x.imag for row in a for x in row)
    threshold_sq = TOL.jacobi * TOL.jacobi * total_sq
    for _ in range(TOL.jacobi_max_sweeps):
        off_sq = 2.0 * sum(a[p][q].real ** 2 + a[p][q].imag ** 2 for p, q in pairs)
        if off_sq <= threshold_sq:
            break
        for p, q in pairs:
            apq = a[p][q]
            r = abs(apq)
            if r == 0.0:
                continue
            app, aqq = d[p], d[q]
            # negligible next to both diagonal entries: drop it
            if r * 1e17 < min(abs(app), abs(aqq)) or r < 1e-300:
                a[p][q] = a[q][p] = 0j
                continue
            phase = (apq / r).conjugate()
            theta = (aqq - app) / (2.0 * r)
            if abs(theta) > 1e150:
                t = 0.5 / theta
            else:
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
            c = 1.0 / math.sqrt(t * t + 1.0)
            s = t * c
            # G = diag phase (making a_pq real) times a real plane rotation:
            # G_pp = c, G_pq = s, G_qp = -s*phase, G_qq = c*phase
            gqp = -s * phase
            gqq = c * phase
            for k in range(n):
                akp, akq = a[k][p], a[k][q]
                a[k][p] = akp * c + akq * gqp
                a[k][q] = akp * s + akq * gqq
            cgqp, cgqq = gqp.conjugate(), gqq.conjugate()
            for k in range(n):
                apk, aqk = a[p][k], a[q][k]
                a[p][k] = c * apk + cgqp * aqk
                a[q][k] = s * apk + cgqq * aqk
            # exact updates keep small eigenvalues accurate
            d[p] = app - t * r
            d[q] = aqq + t * r
            a[p][p] = complex(d[p])
            a[q][q] = complex(d[q])
            a[p][q] = a[q][p] = 0j
            for k in range(n):
                vkp, vkq = v[k][p], v[k][q]
                v[k][p] = vkp * c + vkq * gqp
                v[k][q] = vkp * s + vkq * gqq
    return d, v


def eigh(m) -> EigenDecomposition:
    """Eigen-decomposition of a Hermitian matrix by cyclic Jacobi sweeps.

    Sweeps until the off-diagonal Frobenius mass drops below
    ``TOL.jacobi * ||M||_F`` or ``TOL.jacobi_max_sweeps`` sweeps have run.
    Eigenvalues are returned in descending order.
    """
    a = as_hermitian(m)
    n = a.shape[0]
    values, vectors = _jacobi(a.tolist(), n)
    values = np.array(values)
    vectors = np.array(vectors, dtype=complex)
    order = np.argsort(-values, kind="stable")
    return EigenDecomposition(values[order], vectors[:, order])


def eigvalsh(m) -> np.ndarray:
    return eigh(m).values


def mat_fn(m, f: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
    """Apply a real scalar function to a Hermitian matrix through its spectrum."""
    values, vectors = eigh(m)
    with np.errstate(all="ignore"):
        fv = np.asarray(f(values), dtype=float)
    if fv.shape != values.shape or not np.all(np.isfinite(fv)):
        raise DomainError("function is undefined on the spectrum")
    out = (vectors * fv) @ vectors.conj().T
    return 0.5 * (out + out.conj().T)


def sqrtm_psd(m, tol: float = TOL.psd) -> np.ndarray:
    """Square root of a positive semidefinite matrix; eigenvalues in [-tol, 0) clamp to 0."""

    def _sqrt(values):
        if np.any(values < -tol):
            raise DomainError(f"matrix has a negative eigenvalue {values.min():.3e}")
        return np.sqrt(np.clip(values, 0.0, None))

    return mat_fn(m, _sqrt)


def _conformable(a: np.ndarray, b: np.ndarray) -> None:
    if a.ndim != 2 or b.ndim != 2:
        raise ValidationError("expected 2-D matrices")


def matmul(a, b) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    _conformable(a, b)
    if a.shape[1] != b.shape[0]:
        raise ValidationError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def trace(a) -> complex:
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValidationError(f"trace needs a square matrix, got shape {a.shape}")
    return complex(np.trace(a))


def frobenius_dist(a, b) -> float:
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    _conformable(a, b)
    if a.shape != b.shape:
        raise ValidationError(f"shape mismatch {a.shape} vs {b.shape}")
    return float(np.linalg.norm(a - b))
