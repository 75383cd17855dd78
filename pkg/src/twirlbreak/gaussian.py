"""Two-mode Gaussian states at covariance-matrix level, phase-rotation
twirling, invariant-family solvers, and the truncated-Fock uniform-dephasing
channel.

Quadrature ordering is (x_A, p_A, x_B, p_B); the vacuum CM is the identity.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import DensityOperator, hermitian_eigenvalues, partial_transpose_mat

BONA_FIDE_TOL = 1e-10

_OMEGA_1 = np.array([[0.0, 1.0], [-1.0, 0.0]])
OMEGA = np.block(
    [[_OMEGA_1, np.zeros((2, 2))], [np.zeros((2, 2)), _OMEGA_1]]
)
# momentum sign flip on mode B = partial transposition at CM level
LAMBDA_PT = np.diag([1.0, 1.0, 1.0, -1.0])


@dataclass(frozen=True)
class CovarianceMatrix:
    """4x4 real symmetric CM of a two-mode Gaussian state."""

    m: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.m, dtype=float)
        object.__setattr__(self, "m", m)
        if m.shape != (4, 4):
            raise ValueError("covariance matrix must be 4x4")
        if np.max(np.abs(m - m.T)) > 1e-12:
            raise ValueError("covariance matrix must be symmetric")
        if np.linalg.eigvalsh(m + 1j * OMEGA)[0] < -BONA_FIDE_TOL:
            raise ValueError("matrix violates the bona-fide condition V + i Omega >= 0")


@dataclass(frozen=True)
class QuasiNormalParams:
    """Parameters of the rotation-invariant quasi-normal CM form."""

    alpha: float
    beta: float
    omega: float
    phi: float

    def __post_init__(self):
        if self.alpha < 1 or self.beta < 1:
            raise ValueError("alpha and beta must be >= 1")


def rotation_matrix(theta: float) -> np.ndarray:
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, s], [-s, c]])


def apply_rotations(v: CovarianceMatrix, theta_a: float, theta_b: float) -> CovarianceMatrix:
    """Congruence by R(theta_a) + R(theta_b) (direct sum)."""
    s = np.zeros((4, 4))
    s[:2, :2] = rotation_matrix(theta_a)
    s[2:, 2:] = rotation_matrix(theta_b)
    return CovarianceMatrix(s @ v.m @ s.T)


def epr_cm(mu: float) -> CovarianceMatrix:
    """CM of a two-mode squeezed vacuum (EPR) state."""
    if mu < 1:
        raise ValueError("mu must be >= 1")
    z = np.diag([1.0, -1.0])
    c = np.sqrt(mu * mu - 1.0)
    m = np.block([[mu * np.eye(2), c * z], [c * z, mu * np.eye(2)]])
    return CovarianceMatrix(m)


def quasi_normal_cm(p: QuasiNormalParams) -> CovarianceMatrix:
    """Blocks A = alpha I, B = beta I, C = [[omega, phi], [-phi, omega]]."""
    c = np.array([[p.omega, p.phi], [-p.phi, p.omega]])
    m = np.block([[p.alpha * np.eye(2), c], [c.T, p.beta * np.eye(2)]])
    return CovarianceMatrix(m)


def _symplectic_spectrum(m: np.ndarray):
    ev = np.linalg.eigvals(1j * OMEGA @ m)
    nus = np.sort(np.abs(ev))
    # eigenvalues come in +/- pairs; keep one representative per pair
    return float(nus[0]), float(nus[2])


def symplectic_eigenvalues(v: CovarianceMatrix):
    """The two symplectic eigenvalues (moduli of eigenvalues of i Omega V)."""
    return _symplectic_spectrum(v.m)


def pt_symplectic_eigenvalues(v: CovarianceMatrix):
    """Symplectic eigenvalues of the partially transposed CM Lambda V Lambda."""
    return _symplectic_spectrum(LAMBDA_PT @ v.m @ LAMBDA_PT)


def is_separable_two_mode(v: CovarianceMatrix, tol: float = BONA_FIDE_TOL) -> bool:
    """PPT at CM level; conclusive for 1x1-mode Gaussian states."""
    nu_min, _ = pt_symplectic_eigenvalues(v)
    return nu_min >= 1.0 - tol


# -- invariant-family solver ---------------------------------------------------

# generic angles, incommensurate with pi, to avoid accidental extra null space
_SOLVER_ANGLES = np.array([0.37, 0.91, 1.43, 2.02, 2.68, 3.31, 4.17, 5.06])

_SYM_INDEX = [(i, j) for i in range(4) for j in range(i, 4)]  # 10 free entries


def _from_params(x: np.ndarray) -> np.ndarray:
    m = np.zeros((4, 4))
    for val, (i, j) in zip(x, _SYM_INDEX):
        m[i, j] = val
        m[j, i] = val
    return m


@dataclass(frozen=True)
class InvariantFamily:
    """Null-space description of the CMs fixed by a family of rotations."""

    mode: str               # "correlated" | "anticorrelated"
    basis: tuple            # symmetric 4x4 matrices spanning the family
    dimension: int

    def residual(self, m: np.ndarray) -> float:
        """Distance of a symmetric matrix from the family's span."""
        x = np.array([m[i, j] for (i, j) in _SYM_INDEX])
        a = np.stack([[b[i, j] for (i, j) in _SYM_INDEX] for b in self.basis], axis=1)
        coef, *_ = np.linalg.lstsq(a, x, rcond=None)
        return float(np.linalg.norm(a @ coef - x))


def solve_invariant_cm(mode: str) -> InvariantFamily:
    """Solve (R_theta + R_theta') V (R_theta + R_theta')^T = V over an angle
    grid as a linear fixed-point system in the 10 independent CM entries."""
    if mode not in ("correlated", "anticorrelated"):
        raise ValueError("mode must be 'correlated' or 'anticorrelated'")
    sign = 1.0 if mode == "correlated" else -1.0
    rows = []
    for theta in _SOLVER_ANGLES:
        s = np.zeros((4, 4))
        s[:2, :2] = rotation_matrix(theta)
        s[2:, 2:] = rotation_matrix(sign * theta)
        for k in range(10):
            e = _from_params(np.eye(10)[k])
            r = s @ e @ s.T - e
            rows.append([r[i, j] for (i, j) in _SYM_INDEX])
    # rows form the columns of the constraint map applied to each basis vector
    mat = np.array(rows).reshape(len(_SOLVER_ANGLES), 10, 10)
    big = np.concatenate([blk.T for blk in mat], axis=0)  # (8*10, 10)
    _, sv, vt = np.linalg.svd(big)
    null_mask = np.concatenate([sv, np.zeros(10 - len(sv))]) < 1e-10
    basis = tuple(_from_params(vt[i]) for i in range(10) if null_mask[i])
    return InvariantFamily(mode, basis, len(basis))


# -- truncated-Fock uniform dephasing ------------------------------------------

@dataclass(frozen=True)
class TruncatedFockState:
    """Two-mode state in the Fock basis with cutoff N per mode."""

    rho: DensityOperator

    def __post_init__(self):
        if self.rho.dim_a != self.rho.dim_b:
            raise ValueError("both modes must share the Fock cutoff")

    @property
    def cutoff(self) -> int:
        return self.rho.dim_a


def truncated_tmsv(lam: float, n: int, tail_tol: float = 1e-3) -> TruncatedFockState:
    """Two-mode squeezed vacuum with Schmidt coefficients ~ lam^k, truncated
    at cutoff n.  Rejects truncations that lose more than tail_tol of mass."""
    if not 0 <= lam < 1:
        raise ValueError("lam must be in [0, 1)")
    amps = lam ** np.arange(n)
    norm_full = 1.0 / (1.0 - lam * lam)
    kept = float(np.sum(amps * amps))
    if kept / norm_full < 1.0 - tail_tol:
        raise ValueError("Fock cutoff too small for requested tail mass")
    amps = amps / np.sqrt(kept)
    vec = np.zeros(n * n, dtype=complex)
    vec[:: n + 1] = amps
    return TruncatedFockState(DensityOperator(np.outer(vec, vec.conj()), n, n))


def dephase_truncated(state: TruncatedFockState, side: str = "A") -> TruncatedFockState:
    """Uniform phase-rotation average: zeroes every element with k != k' on
    the dephased side (the closed-form theta integral); trace preserving."""
    n = state.cutoff
    t = state.rho.mat.reshape(n, n, n, n).copy()
    idx = np.arange(n)
    if side == "A":
        mask = (idx[:, None, None, None] == idx[None, None, :, None])
    elif side == "B":
        mask = (idx[None, :, None, None] == idx[None, None, None, :])
    else:
        raise ValueError("side must be 'A' or 'B'")
    t = np.where(mask, t, 0.0)
    return TruncatedFockState(DensityOperator(t.reshape(n * n, n * n), n, n))


def separable_decomposition_dephased(state: TruncatedFockState):
    """Explicit separable decomposition of the side-A dephased output of a
    pure input: components (d_k, |k>, |xi(k)>) with d_k = sum_j |c_kj|^2."""
    rho = state.rho
    purity = float(np.trace(rho.mat @ rho.mat).real)
    if purity < 1.0 - 1e-10:
        raise ValueError("input must be pure; spectrally decompose mixed states first")
    ev, vecs = np.linalg.eigh(rho.mat)
    c = vecs[:, -1].reshape(state.cutoff, state.cutoff)
    out = []
    for k in range(state.cutoff):
        dk = float(np.sum(np.abs(c[k]) ** 2))
        if dk <= 1e-14:
            continue
        ket_k = np.zeros(state.cutoff, dtype=complex)
        ket_k[k] = 1.0
        xi = c[k] / np.sqrt(dk)
        out.append((dk, ket_k, xi))
    return out


def reconstruct_decomposition(components, n: int) -> np.ndarray:
    """sum_k d_k |k><k| x |xi(k)><xi(k)|."""
    out = np.zeros((n * n, n * n), dtype=complex)
    for dk, ket_k, xi in components:
        out += dk * np.kron(np.outer(ket_k, ket_k.conj()), np.outer(xi, xi.conj()))
    return out


def min_pt_eigenvalue(state: TruncatedFockState) -> float:
    n = state.cutoff
    return hermitian_eigenvalues(partial_transpose_mat(state.rho.mat, n, n)).min()
