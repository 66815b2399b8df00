"""Dense complex linear algebra for small (dim <= 16) Hermitian problems.

Matrices are plain ``numpy`` complex arrays. The eigensolver is a cyclic
complex Jacobi iteration so results are deterministic and independent of
the LAPACK build.
"""
from __future__ import annotations

import math
from typing import Callable, Iterable, NamedTuple

import numpy as np

from .errors import BadSubset, NegativeEigenvalue, NoConvergence, NotHermitian

HERMITIAN_TOL = 1e-12
OFFDIAG_TOL = 1e-13
MAX_SWEEPS = 100
PHASE_FIX_TOL = 1e-10
PSD_CLAMP = 1e-12
# eigenvalues within this multiple of eps * ||M||_F are rounding noise around 0
ROUNDING_FLOOR = 64 * np.finfo(float).eps


class EigenDecomposition(NamedTuple):
    values: np.ndarray  # ascending, real
    vectors: np.ndarray  # orthonormal columns


def as_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return a


def dagger(m: np.ndarray) -> np.ndarray:
    return m.conj().T


def hermiticity_error(m: np.ndarray) -> float:
    return float(np.max(np.abs(m - dagger(m)))) if m.size else 0.0


def tensor_product(a, b) -> np.ndarray:
    """Kronecker product with ``a`` carrying the most significant index."""
    a, b = as_matrix(a), as_matrix(b)
    da, db = a.shape[0], b.shape[0]
    out = np.empty((da * db, da * db), dtype=complex)
    for i in range(da):
        for j in range(da):
            out[i * db:(i + 1) * db, j * db:(j + 1) * db] = a[i, j] * b
    return out


def kron_all(mats: Iterable) -> np.ndarray:
    out = np.ones((1, 1), dtype=complex)
    for m in mats:
        out = tensor_product(out, m)
    return out


def _offdiag_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(np.abs(off) ** 2)))


def _rotate(a: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
    """Annihilate a[p, q] in place with a complex Jacobi rotation."""
    g = a[p, q]
    r = abs(g)
    if r == 0.0:
        return
    e = g / r
    tau = (a[q, q].real - a[p, p].real) / (2.0 * r)
    t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
    c = 1.0 / math.sqrt(1.0 + t * t)
    s = t * c
    ec = e.conjugate()
    # J = [[c, s], [-s*conj(e), c*conj(e)]] on columns (p, q); A <- J^H A J
    jqp = -s * ec
    jqq = c * ec
    col_p = a[:, p].copy()
    col_q = a[:, q].copy()
    a[:, p] = c * col_p + jqp * col_q
    a[:, q] = s * col_p + jqq * col_q
    row_p = a[p, :].copy()
    row_q = a[q, :].copy()
    a[p, :] = c * row_p + jqp.conjugate() * row_q
    a[q, :] = s * row_p + jqq.conjugate() * row_q
    a[p, q] = 0.0
    a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real
    vp = v[:, p].copy()
    vq = v[:, q].copy()
    v[:, p] = c * vp + jqp * vq
    v[:, q] = s * vp + jqq * vq


def _fix_phases(vectors: np.ndarray) -> np.ndarray:
    out = vectors.copy()
    for k in range(out.shape[1]):
        col = out[:, k]
        idx = np.flatnonzero(np.abs(col) > PHASE_FIX_TOL)
        if idx.size:
            z = col[idx[0]]
            out[:, k] = col * (abs(z) / z)
    return out


def hermitian_eigen(m, *, tol: float = OFFDIAG_TOL, max_sweeps: int = MAX_SWEEPS) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi sweeps.

    Pairs are visited in row-major order (p < q). Eigenvalues are returned in
    ascending order (stable sort, so ties keep the sweep order) and every
    eigenvector has its first component above 1e-10 in modulus made real and
    positive.

    Raises:
        NotHermitian: if ``max|M - M^H| > 1e-12``.
        NoConvergence: if the off-diagonal Frobenius norm is still above
            ``tol * ||M||_F`` after ``max_sweeps`` sweeps.
    """
    a = as_matrix(m).copy()
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    if hermiticity_error(a) > HERMITIAN_TOL:
        raise NotHermitian(f"matrix is not Hermitian (max deviation {hermiticity_error(a):.3e})")
    n = a.shape[0]
    a = 0.5 * (a + dagger(a))
    v = np.eye(n, dtype=complex)
    # relative threshold: tiny-norm inputs (e.g. products of small density blocks) still get rotated
    threshold = tol * float(np.linalg.norm(a))
    for _ in range(max_sweeps + 1):
        if _offdiag_norm(a) <= threshold:
            break
        upper = np.triu(np.abs(a), 1)
        for p, q in zip(*np.nonzero(upper)):
            _rotate(a, v, int(p), int(q))
    else:
        raise NoConvergence(f"Jacobi did not converge in {max_sweeps} sweeps")
    values = np.real(np.diag(a)).copy()
    order = np.argsort(values, kind="stable")
    return EigenDecomposition(values[order], _fix_phases(v[:, order]))


def reconstruct(eig: EigenDecomposition) -> np.ndarray:
    return (eig.vectors * eig.values) @ dagger(eig.vectors)


def apply_function(eig: EigenDecomposition, f: Callable) -> np.ndarray:
    fv = np.array([f(x) for x in eig.values], dtype=complex)
    return (eig.vectors * fv) @ dagger(eig.vectors)


def function_of_hermitian(m, f: Callable) -> np.ndarray:
    """Return V diag(f(lambda)) V^H for Hermitian ``m``."""
    return apply_function(hermitian_eigen(m), f)


def clamp_psd(values: np.ndarray, window: float = PSD_CLAMP, floor: float = 0.0) -> np.ndarray:
    """Zero eigenvalues in [-window, floor]; raise on anything below -window."""
    values = np.asarray(values, dtype=float)
    if values.size and values.min() < -window:
        raise NegativeEigenvalue(f"eigenvalue {values.min():.3e} below -{window:g}")
    return np.where(values <= floor, 0.0, values)


def psd_spectrum(m) -> tuple[np.ndarray, np.ndarray]:
    """Clamped eigenvalues and eigenvectors of a PSD matrix.

    Values at or below the rounding floor (relative to the Frobenius norm) are
    set to exactly zero so their square roots do not leak ~1e-8 noise.
    """
    m = as_matrix(m)
    eig = hermitian_eigen(m)
    floor = ROUNDING_FLOOR * float(np.linalg.norm(m))
    return clamp_psd(eig.values, floor=floor), eig.vectors


def sqrt_psd(m) -> np.ndarray:
    values, vectors = psd_spectrum(m)
    return (vectors * np.sqrt(values)) @ dagger(vectors)


def expm_hermitian(m, t: float) -> np.ndarray:
    """exp(-i m t) for Hermitian ``m``."""
    return function_of_hermitian(m, lambda x: np.exp(-1j * x * t))


def partial_trace(rho, keep, n_qubits: int) -> np.ndarray:
    """Reduced density matrix on the 1-based qubit positions in ``keep``.

    Qubit 1 is the most significant bit; kept qubits retain their relative order.
    """
    rho = as_matrix(rho)
    if rho.shape[0] != 2 ** n_qubits:
        raise ValueError(f"dimension {rho.shape[0]} does not match {n_qubits} qubits")
    keep = sorted(set(keep))
    if not keep or len(keep) >= n_qubits or keep[0] < 1 or keep[-1] > n_qubits:
        raise BadSubset(f"keep={keep} must be a nonempty strict subset of 1..{n_qubits}")
    traced = [k for k in range(1, n_qubits + 1) if k not in keep]
    t = rho.reshape([2] * (2 * n_qubits))
    # contract traced qubits, highest position first so axis numbers stay valid
    n_live = n_qubits
    for k in sorted(traced, reverse=True):
        t = np.trace(t, axis1=k - 1, axis2=n_live + k - 1)
        n_live -= 1
    d = 2 ** len(keep)
    return t.reshape(d, d)
