"""Evolved state of the chain from the Bell-type initial state.

Two independent routes are provided: closed-form amplitudes and density
matrices, and a numerical route that diagonalises the full 16 x 16
Hamiltonian with the Jacobi kernel and applies exp(-iHt).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .linalg import EigenDecomposition, dagger, hermitian_eigen
from .spin import Boundary, ChainParams, build_hamiltonian

SQRT2 = np.sqrt(2.0)

# 0-based indices of |0001>, |0010>, |0100>, |1000>
I0001, I0010, I0100, I1000 = 1, 2, 4, 8
SECTOR = (I0001, I0010, I0100, I1000)


@dataclass(frozen=True)
class PhasePoint:
    alpha: float
    t: float

    @property
    def phi(self) -> float:
        return (self.alpha + 1.0) * self.t


class Amplitudes(NamedTuple):
    beta: complex
    gamma: complex


def initial_state() -> np.ndarray:
    psi = np.zeros(16, dtype=complex)
    psi[I0100] = psi[I1000] = 1.0 / SQRT2
    return psi


def initial_density() -> np.ndarray:
    psi = initial_state()
    return np.outer(psi, psi.conj())


def amplitudes(p: PhasePoint) -> Amplitudes:
    a, t = p.alpha, p.t
    x, y = a * t / 2.0, (a + 2.0) * t / 2.0
    beta = -(1j * np.sin(x) + 1j * np.sin(y) + np.cos(x) - np.cos(y)) / (2.0 * SQRT2)
    gamma = (1j * np.sin(x) - 1j * np.sin(y) + np.cos(x) + np.cos(y)) / (2.0 * SQRT2)
    return Amplitudes(complex(beta), complex(gamma))


def analytic_state(p: PhasePoint) -> np.ndarray:
    beta, gamma = amplitudes(p)
    psi = np.zeros(16, dtype=complex)
    psi[I0001] = psi[I0010] = beta
    psi[I0100] = psi[I1000] = gamma
    return psi


def analytic_density(p: PhasePoint) -> np.ndarray:
    """Density matrix filled entry by entry from the closed-form expressions."""
    a, t = p.alpha, p.t
    half = 0.5 * (a + 1.0) * t
    low = 0.5 * np.sin(half) ** 2
    high = 0.5 * np.cos(half) ** 2
    cross = 0.25j * np.sin(a * t + t)
    rho = np.zeros((16, 16), dtype=complex)
    for i in (I0001, I0010):
        for j in (I0001, I0010):
            rho[i, j] = low
        for j in (I0100, I1000):
            rho[i, j] = -cross
            rho[j, i] = cross
    for i in (I0100, I1000):
        for j in (I0100, I1000):
            rho[i, j] = high
    return rho


@lru_cache(maxsize=512)
def _eigen_cached(alpha: float, boundary: Boundary) -> EigenDecomposition:
    eig = hermitian_eigen(build_hamiltonian(ChainParams(alpha=alpha, boundary=boundary)))
    eig.values.setflags(write=False)
    eig.vectors.setflags(write=False)
    return eig


def hamiltonian_eigen(alpha: float, boundary: Boundary = "periodic") -> EigenDecomposition:
    return _eigen_cached(float(alpha), boundary)


def propagator(p: PhasePoint, boundary: Boundary = "periodic") -> np.ndarray:
    eig = hamiltonian_eigen(p.alpha, boundary)
    return (eig.vectors * np.exp(-1j * eig.values * p.t)) @ dagger(eig.vectors)


def numeric_evolve(p: PhasePoint, boundary: Boundary = "periodic") -> np.ndarray:
    """exp(-iHt)|psi(0)> from the full-space eigendecomposition."""
    eig = hamiltonian_eigen(p.alpha, boundary)
    coeffs = dagger(eig.vectors) @ initial_state()
    return eig.vectors @ (np.exp(-1j * eig.values * p.t) * coeffs)


def numeric_density(p: PhasePoint, boundary: Boundary = "periodic") -> np.ndarray:
    psi = numeric_evolve(p, boundary)
    return np.outer(psi, psi.conj())


def _two_qubit_block(a: float, b: float) -> np.ndarray:
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = a
    rho[1:3, 1:3] = b
    return rho


def rho12(p: PhasePoint) -> np.ndarray:
    c = np.cos(p.phi)
    return _two_qubit_block(0.5 - 0.5 * c, 0.25 * c + 0.25)


def rho34(p: PhasePoint) -> np.ndarray:
    c = np.cos(p.phi)
    return _two_qubit_block(0.5 * c + 0.5, 0.25 - 0.25 * c)
