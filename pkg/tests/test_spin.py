import numpy as np
import pytest
from hypothesis import given, strategies as st

from heisenberg_xxx import spin as S
from heisenberg_xxx.dynamics import PhasePoint, initial_state
from heisenberg_xxx.errors import BadIndex, BadSite
from heisenberg_xxx.linalg import expm_hermitian, hermitian_eigen

alphas = st.floats(-5, 5, allow_nan=False)


def ket(label):
    v = np.zeros(16, complex)
    v[int(label, 2)] = 1
    return v


@pytest.mark.parametrize("axis, expected", [
    ("x", [[0, 1], [1, 0]]),
    ("y", [[0, -1j], [1j, 0]]),
    ("z", [[1, 0], [0, -1]]),
])
def test_pauli(axis, expected):
    np.testing.assert_array_equal(S.pauli(axis), expected)


def test_pauli_bad_axis():
    with pytest.raises(ValueError):
        S.pauli("w")


def test_site_operator_conventions():
    np.testing.assert_array_equal(S.site_operator("z", 1) @ ket("1000"), -ket("1000"))
    np.testing.assert_array_equal(S.site_operator("x", 4) @ ket("0000"), ket("0001"))


def test_site_operators_on_different_sites_commute():
    a, b = S.site_operator("z", 1), S.site_operator("x", 2)
    np.testing.assert_array_equal(a @ b - b @ a, 0)


@pytest.mark.parametrize("site", [0, 5])
def test_bad_site(site):
    with pytest.raises(BadSite):
        S.site_operator("x", site)


def test_decimal_index_convention():
    assert S.decimal_index("0100") == 5
    assert S.decimal_index("1000") == 9
    assert S.basis_label(4) == "0100"


@given(alphas)
def test_hamiltonian_real_symmetric(alpha):
    h = S.build_hamiltonian(alpha)
    assert np.all(h.imag == 0)
    assert np.abs(h - h.conj().T).max() == 0


@pytest.mark.parametrize("boundary", ["periodic", "open"])
def test_flip_flop_amplitudes(boundary):
    alpha = 0.37
    h = S.build_hamiltonian(S.ChainParams(alpha=alpha, boundary=boundary))
    # 1/4 (xx + yy) = 1/2 (s+s- + s-s+) on each bond
    assert ket("0100") @ h @ ket("1000") == pytest.approx(0.5)
    assert ket("0100") @ h @ ket("0001") == pytest.approx(alpha / 2)


def test_boundaries_differ_only_by_the_wrap_bond():
    diff = S.build_hamiltonian(S.ChainParams(0.2, "periodic")) - S.build_hamiltonian(S.ChainParams(0.2, "open"))
    np.testing.assert_allclose(diff, 0.25 * S.exchange(4, 1), atol=0)
    assert ket("1000") @ diff @ ket("0001") == pytest.approx(0.5)


def test_hamiltonian_brute_force_oracle():
    # sum over bonds assembled from numpy.kron, independent of site_operator
    p = {a: S.pauli(a) for a in "xyz"}

    def one_site(k, a):
        return np.kron(np.kron(np.eye(2 ** (k - 1)), p[a]), np.eye(2 ** (4 - k)))

    def two_site(i, j, a):
        return one_site(i, a) @ one_site(j, a)

    alpha = -0.8
    h = sum(0.25 * two_site(i, j, a) for i, j in [(1, 2), (2, 3), (3, 4), (1, 4)] for a in "xyz")
    h = h + sum(0.25 * alpha * two_site(i, j, a) for i, j in [(1, 3), (2, 4)] for a in "xyz")
    np.testing.assert_allclose(S.build_hamiltonian(alpha), h, atol=1e-15)


def test_total_sz_eigenvalues():
    sz = S.total_sz()
    assert np.allclose(sz, np.diag(np.diag(sz)))
    assert (ket("0000") @ sz @ ket("0000")).real == 2
    assert (ket("0100") @ sz @ ket("0100")).real == 1


@pytest.mark.parametrize("boundary", ["periodic", "open"])
@given(alpha=alphas)
def test_hamiltonian_conserves_sz(boundary, alpha):
    h, sz = S.build_hamiltonian(S.ChainParams(alpha, boundary)), S.total_sz()
    assert np.abs(h @ sz - sz @ h).max() <= 1e-14


@given(alphas)
def test_hamiltonian_linear_in_alpha(alpha):
    h0, h1 = S.build_hamiltonian(0.0), S.build_hamiltonian(1.0)
    np.testing.assert_allclose(S.build_hamiltonian(alpha), h0 + alpha * (h1 - h0), atol=1e-14)


def test_chain_params_fixed_fields():
    with pytest.raises(ValueError):
        S.ChainParams(n_sites=5)
    with pytest.raises(ValueError):
        S.ChainParams(nearest_coupling=2.0)
    with pytest.raises(ValueError):
        S.ChainParams(boundary="twisted")


def test_sector_basis_members():
    basis = S.sector_basis(1.0)
    assert [S.decimal_index(S.basis_label(i)) for i in basis.member_indices] == [2, 3, 5, 9]


def test_sector_block_hermitian_and_bad_index():
    block = S.sector_block(S.build_hamiltonian(0.4), S.sector_basis(1.0))
    assert block.shape == (4, 4)
    assert np.abs(block - block.conj().T).max() == 0
    with pytest.raises(BadIndex):
        S.sector_block(np.eye(4), S.sector_basis(1.0))


@pytest.mark.parametrize("alpha, t", [(0.0, 1.3), (-0.4, 2.7), (1.5, 0.9), (-2.5, 6.0)])
def test_sector_evolution_matches_full_space(alpha, t):
    basis = S.sector_basis(1.0)
    idx = list(basis.member_indices)
    h = S.build_hamiltonian(alpha)
    full = expm_hermitian(h, t) @ initial_state()
    small = expm_hermitian(S.sector_block(h, basis), t) @ initial_state()[idx]
    assert np.abs(full[idx] - small).max() <= 1e-12
    outside = np.delete(full, idx)
    assert np.abs(outside).max() <= 1e-13


def test_sector_gap_sets_phase_frequency():
    # the two sector levels carrying the initial state are split by alpha + 1
    for alpha in (0.0, 0.6, -2.0):
        eig = hermitian_eigen(S.sector_block(S.build_hamiltonian(alpha), S.sector_basis(1.0)))
        idx = list(S.sector_basis(1.0).member_indices)
        weights = np.abs(eig.vectors.conj().T @ initial_state()[idx]) ** 2
        # degenerate levels share weight; keep distinct energies only
        levels = np.unique(np.round(eig.values[weights > 1e-12], 12))
        assert len(levels) == 2
        assert levels[1] - levels[0] == pytest.approx(abs(alpha + 1), abs=1e-12)


def test_squared_fidelity_period_at_alpha_zero():
    # alpha = 0: |<psi0|psi(t)>|^2 = cos^2(t/2) vanishes at t = pi and revives at 2 pi
    from heisenberg_xxx.dynamics import numeric_evolve
    psi0 = initial_state()
    overlap = lambda t: abs(np.vdot(psi0, numeric_evolve(PhasePoint(0.0, t)))) ** 2
    assert overlap(np.pi) == pytest.approx(0, abs=1e-12)
    assert overlap(2 * np.pi) == pytest.approx(1, abs=1e-12)


def test_open_chain_does_not_reproduce_closed_forms():
    from heisenberg_xxx.dynamics import analytic_state, numeric_evolve
    p = PhasePoint(-1.0, 5.0)
    open_state = numeric_evolve(p, boundary="open")
    assert abs(np.vdot(initial_state(), open_state)) < 0.1
    assert np.abs(open_state - analytic_state(p)).max() > 0.1
