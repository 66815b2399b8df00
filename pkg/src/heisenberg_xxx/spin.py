"""Four-site isotropic XXX Hamiltonian with next-nearest-neighbour coupling.

Basis states are |q1 q2 q3 q4> with q1 the most significant bit, so the
0-based index of a state is 8*q1 + 4*q2 + 2*q3 + q4. |0> is spin up.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import BadIndex, BadSite
from .linalg import as_matrix, kron_all

N_SITES = 4

_PAULI = {
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}

Boundary = Literal["periodic", "open"]


@dataclass(frozen=True)
class ChainParams:
    """Coupling configuration.

    ``boundary="periodic"`` adds the 4-1 nearest-neighbour bond that closes the
    four sites into a ring; the closed-form amplitudes in ``dynamics`` are the
    exact solution of that ring. ``"open"`` keeps only the bonds 1-2, 2-3, 3-4.
    Next-nearest bonds are 1-3 and 2-4 in both cases.
    """

    alpha: float = 0.0
    boundary: Boundary = "periodic"
    n_sites: int = N_SITES
    nearest_coupling: float = 1.0

    def __post_init__(self):
        if self.n_sites != N_SITES:
            raise ValueError("only the four-site chain is supported")
        if self.nearest_coupling != 1.0:
            raise ValueError("nearest-neighbour coupling is fixed to 1")
        if self.boundary not in ("periodic", "open"):
            raise ValueError(f"unknown boundary {self.boundary!r}")


@dataclass(frozen=True)
class SectorBasis:
    total_sz: float
    member_indices: tuple[int, ...]  # 0-based


def pauli(axis: str) -> np.ndarray:
    try:
        return _PAULI[axis].copy()
    except KeyError:
        raise ValueError(f"axis must be one of x, y, z; got {axis!r}") from None


def site_operator(axis: str, site: int, n_sites: int = N_SITES) -> np.ndarray:
    if not 1 <= site <= n_sites:
        raise BadSite(f"site {site} outside 1..{n_sites}")
    eye = np.eye(2, dtype=complex)
    return kron_all(pauli(axis) if k == site else eye for k in range(1, n_sites + 1))


def exchange(i: int, j: int) -> np.ndarray:
    """sigma_i . sigma_j on the four-site space."""
    return sum(site_operator(a, i) @ site_operator(a, j) for a in "xyz")


def bonds(boundary: Boundary = "periodic") -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    nearest = [(1, 2), (2, 3), (3, 4)]
    if boundary == "periodic":
        nearest.append((4, 1))
    return nearest, [(1, 3), (2, 4)]


def build_hamiltonian(params: ChainParams | float = 0.0) -> np.ndarray:
    """H = 1/4 sum_nn sigma.sigma + alpha/4 sum_nnn sigma.sigma  (16 x 16)."""
    if not isinstance(params, ChainParams):
        params = ChainParams(alpha=float(params))
    nearest, next_nearest = bonds(params.boundary)
    h = np.zeros((16, 16), dtype=complex)
    for i, j in nearest:
        h += 0.25 * exchange(i, j)
    for i, j in next_nearest:
        h += 0.25 * params.alpha * exchange(i, j)
    return h


def total_sz(n_qubits: int = N_SITES) -> np.ndarray:
    return sum(0.5 * site_operator("z", k, n_qubits) for k in range(1, n_qubits + 1))


def sector_basis(sz: float = 1.0, n_qubits: int = N_SITES) -> SectorBasis:
    """Basis states with the given total S^z, in ascending index order."""
    members = []
    for idx in range(2 ** n_qubits):
        n_down = bin(idx).count("1")
        if 0.5 * (n_qubits - 2 * n_down) == sz:
            members.append(idx)
    return SectorBasis(total_sz=sz, member_indices=tuple(members))


def sector_block(h, basis: SectorBasis) -> np.ndarray:
    h = as_matrix(h)
    idx = np.asarray(basis.member_indices, dtype=int)
    if idx.size == 0 or idx.min() < 0 or idx.max() >= h.shape[0]:
        raise BadIndex(f"sector indices {basis.member_indices} invalid for dim {h.shape[0]}")
    return h[np.ix_(idx, idx)]


def basis_label(index: int, n_qubits: int = N_SITES) -> str:
    return format(index, f"0{n_qubits}b")


def decimal_index(label: str) -> int:
    """1-based index of a bit-string label, e.g. '0100' -> 5."""
    return int(label, 2) + 1
