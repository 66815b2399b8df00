"""Fidelity, trace distance, l1-coherence, concurrence and entanglement of formation."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import DimensionMismatch, DomainError, InvalidState
from .linalg import (
    PSD_CLAMP,
    as_matrix,
    dagger,
    hermitian_eigen,
    hermiticity_error,
    psd_spectrum,
    sqrt_psd,
)

FidelityConvention = Literal["sqrt", "squared"]

STATE_TOL = 1e-9
ENTROPY_WINDOW = 1e-12
CONCURRENCE_WINDOW = 1e-9
FVDG_TOL = 1e-10

_YY = np.array(
    [[0, 0, 0, -1],
     [0, 0, 1, 0],
     [0, 1, 0, 0],
     [-1, 0, 0, 0]], dtype=complex)


def _same_dim(rho, sigma):
    rho, sigma = as_matrix(rho), as_matrix(sigma)
    if rho.shape != sigma.shape:
        raise DimensionMismatch(f"{rho.shape} vs {sigma.shape}")
    return rho, sigma


def uhlmann_fidelity(rho, sigma, conv: FidelityConvention = "sqrt") -> float:
    """Tr sqrt(sqrt(rho) sigma sqrt(rho)), squared when ``conv == "squared"``."""
    rho, sigma = _same_dim(rho, sigma)
    root = sqrt_psd(rho)
    inner = root @ sigma @ root
    values, _ = psd_spectrum(0.5 * (inner + dagger(inner)))
    f = min(float(np.sum(np.sqrt(values))), 1.0)
    if conv == "sqrt":
        return f
    if conv == "squared":
        return f * f
    raise ValueError(f"unknown fidelity convention {conv!r}")


def pure_overlap_fidelity(psi, phi_state) -> float:
    psi = np.asarray(psi, dtype=complex)
    phi_state = np.asarray(phi_state, dtype=complex)
    if psi.shape != phi_state.shape:
        raise DimensionMismatch(f"{psi.shape} vs {phi_state.shape}")
    return float(abs(np.vdot(psi, phi_state)))


def trace_distance(rho, sigma) -> float:
    rho, sigma = _same_dim(rho, sigma)
    diff = rho - sigma
    return 0.5 * float(np.sum(np.abs(hermitian_eigen(0.5 * (diff + dagger(diff))).values)))


@dataclass(frozen=True)
class FvdGReport:
    lower: float
    trace_distance: float
    upper: float
    satisfied: bool


def fvdg_check(rho, sigma, tol: float = FVDG_TOL) -> FvdGReport:
    """1 - sqrt(F) <= T <= sqrt(1 - F) with F the squared-convention fidelity."""
    f_sq = uhlmann_fidelity(rho, sigma, "squared")
    t = trace_distance(rho, sigma)
    lower = 1.0 - math.sqrt(f_sq)
    upper = math.sqrt(max(1.0 - f_sq, 0.0))
    return FvdGReport(lower, t, upper, lower - tol <= t <= upper + tol)


def coherence_l1(rho) -> float:
    rho = as_matrix(rho)
    mags = np.abs(rho)
    return float(np.sum(mags) - np.sum(np.diag(mags)))


def pure_state_coherence(psi) -> float:
    return float(np.sum(np.abs(np.asarray(psi))) ** 2 - 1.0)


def _check_two_qubit_state(rho: np.ndarray) -> None:
    if rho.shape != (4, 4):
        raise DimensionMismatch(f"expected a 4x4 two-qubit matrix, got {rho.shape}")
    if hermiticity_error(rho) > 1e-12:
        raise InvalidState("matrix is not Hermitian")
    if abs(np.trace(rho) - 1.0) > STATE_TOL:
        raise InvalidState(f"trace {np.trace(rho).real:.12g} != 1")
    if hermitian_eigen(rho).values.min() < -PSD_CLAMP:
        raise InvalidState("matrix is not positive semidefinite")


def spin_flip(rho) -> np.ndarray:
    """(sigma_y x sigma_y) rho* (sigma_y x sigma_y)."""
    return _YY @ as_matrix(rho).conj() @ _YY


def wootters_concurrence(rho) -> float:
    """Two-qubit concurrence max(0, l1 - l2 - l3 - l4).

    The l_i are square roots of the spectrum of rho * rho_tilde, taken from
    the Hermitian similar matrix sqrt(rho) rho_tilde sqrt(rho).
    """
    rho = as_matrix(rho)
    _check_two_qubit_state(rho)
    root = sqrt_psd(rho)
    m = root @ spin_flip(rho) @ root
    values, _ = psd_spectrum(0.5 * (m + dagger(m)))
    lam = np.sort(np.sqrt(values))[::-1]
    c = lam[0] - lam[1] - lam[2] - lam[3]
    return float(min(max(c, 0.0), 1.0))


@dataclass(frozen=True)
class XStateParams:
    """Two-qubit matrix with diagonal (a, b, b, d) and inner off-diagonal c."""

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        if abs(self.a + 2 * self.b + self.d - 1.0) > 1e-12:
            raise InvalidState("a + 2b + d must equal 1")
        if min(self.a, self.b, self.d) < -1e-12 or abs(self.c) > self.b + 1e-12:
            raise InvalidState("parameters do not describe a PSD matrix")

    def matrix(self) -> np.ndarray:
        m = np.zeros((4, 4), dtype=complex)
        m[0, 0], m[3, 3] = self.a, self.d
        m[1, 1] = m[2, 2] = self.b
        m[1, 2] = m[2, 1] = self.c
        return m

    @classmethod
    def from_matrix(cls, rho) -> "XStateParams":
        rho = as_matrix(rho)
        return cls(rho[0, 0].real, 0.5 * (rho[1, 1] + rho[2, 2]).real, rho[1, 2].real, rho[3, 3].real)


def x_state_concurrence(p: XStateParams) -> float:
    return 2.0 * max(0.0, abs(p.c) - math.sqrt(max(p.a * p.d, 0.0)))


def _clamp_unit(x: float, window: float, name: str) -> float:
    if not -window <= x <= 1.0 + window:
        raise DomainError(f"{name}={x!r} outside [0, 1]")
    return min(max(x, 0.0), 1.0)


def binary_entropy(x: float) -> float:
    """h(x) in bits, with h(0) = h(1) = 0."""
    x = _clamp_unit(float(x), ENTROPY_WINDOW, "x")
    return sum(-p * math.log2(p) for p in (x, 1.0 - x) if p > 0.0)


def eof_from_concurrence(c: float) -> float:
    c = _clamp_unit(float(c), CONCURRENCE_WINDOW, "concurrence")
    return binary_entropy(0.5 * (1.0 + math.sqrt(1.0 - c * c)))
