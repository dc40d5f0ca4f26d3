"""Dense complex operator algebra for finite-dimensional quantum systems.

All operators are plain ``numpy.ndarray`` matrices (complex128, row-major).
Hermiticity and density-matrix structure are contracts enforced by the
``check_*`` validators at module boundaries, not by wrapper classes.
"""

from __future__ import annotations

import numpy as np

# Construction-time hermiticity defect; evolved states are allowed to drift
# further (integration error), which separates algebra bugs from integrator
# error.
HERMITICITY_TOL = 1e-12
EVOLVED_HERMITICITY_TOL = 1e-9
DENSITY_TRACE_TOL = 1e-10
DENSITY_EIG_TOL = 1e-10

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)


def identity(dim):
    return np.eye(dim, dtype=complex)


def as_matrix(a, name="matrix"):
    """Coerce to a square complex matrix with finite entries."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"{name} must be square, got shape {m.shape}")
    if not np.isfinite(m).all():
        raise ValueError(f"{name} contains non-finite entries")
    return m


def dagger(a):
    return np.conj(np.swapaxes(a, -1, -2))


def hermiticity_defect(a):
    """max |M - M^dagger| over entries."""
    return float(np.max(np.abs(a - dagger(a)))) if np.asarray(a).size else 0.0


def check_hermitian(a, tol=HERMITICITY_TOL, name="operator"):
    """Validate hermiticity within ``tol`` and return the matrix."""
    m = as_matrix(a, name)
    defect = hermiticity_defect(m)
    if defect > tol:
        raise ValueError(f"{name} is not Hermitian: defect {defect:.3e} > {tol:.1e}")
    return m


def check_density(a, trace_tol=DENSITY_TRACE_TOL, eig_tol=DENSITY_EIG_TOL, name="rho"):
    """Validate a density operator: Hermitian, unit trace, positive spectrum."""
    m = check_hermitian(a, tol=HERMITICITY_TOL, name=name)
    tr = np.trace(m)
    if abs(tr - 1.0) > trace_tol:
        raise ValueError(f"{name} trace deviates from 1 by {abs(tr - 1.0):.3e} > {trace_tol:.1e}")
    w_min = min_eigenvalue(m)
    if w_min < -eig_tol:
        raise ValueError(f"{name} has negative eigenvalue {w_min:.3e} < -{eig_tol:.1e}")
    return m


def _check_same_dim(a, b):
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")


def commutator(a, b):
    """AB - BA."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    _check_same_dim(a, b)
    return a @ b - b @ a


def anticommutator(a, b):
    """AB + BA."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    _check_same_dim(a, b)
    return a @ b + b @ a


def min_eigenvalue(a):
    """Smallest eigenvalue of the symmetrized (A + A^dagger)/2."""
    m = np.asarray(a, dtype=complex)
    w = np.linalg.eigvalsh(0.5 * (m + dagger(m)))
    return float(w[0])


def max_eigenvalue(a):
    m = np.asarray(a, dtype=complex)
    w = np.linalg.eigvalsh(0.5 * (m + dagger(m)))
    return float(w[-1])


def tensor(a, b):
    """Kronecker product, subsystem 1 on the left."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def partial_trace(m, d1, d2, keep):
    """Trace out one factor of a (d1*d2)-dimensional operator.

    keep=1 returns the d1 x d1 reduction, keep=2 the d2 x d2 one. Trace is
    preserved exactly.
    """
    m = as_matrix(m, "operator")
    if m.shape[0] != d1 * d2:
        raise ValueError(f"dim {m.shape[0]} does not factor as {d1}*{d2}")
    r = m.reshape(d1, d2, d1, d2)
    if keep == 1:
        return np.einsum("abcb->ac", r)
    if keep == 2:
        return np.einsum("abac->bc", r)
    raise ValueError("keep must be 1 or 2")


def expectation(rho, a):
    """Re tr(A rho); intended for Hermitian observables."""
    return float(np.real(np.trace(np.asarray(a) @ np.asarray(rho))))


def purity(rho):
    return float(np.real(np.trace(rho @ rho)))


def trace_distance(a, b):
    """(1/2) * trace norm of A - B for Hermitian A, B."""
    w = np.linalg.eigvalsh(np.asarray(a) - np.asarray(b))
    return float(0.5 * np.sum(np.abs(w)))
