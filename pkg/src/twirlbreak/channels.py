"""CPTP maps as Kraus collections, their unitary dilations with explicit
classical environments, and the entanglement-breaking decision procedure."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import (
    DensityOperator,
    HermitianSpectrum,
    hermitian_eigenvalues,
    kron,
    partial_trace_multi,
    partial_transpose_mat,
    permute_subsystems,
)
from .states import max_entangled

COMPLETENESS_TOL = 1e-10

PAULIS = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),            # X
    np.array([[0, -1j], [1j, 0]], dtype=complex),         # Y
    np.array([[1, 0], [0, -1]], dtype=complex),           # Z
)


@dataclass(frozen=True)
class ProbabilityVector:
    p: tuple

    def __post_init__(self):
        p = tuple(float(x) for x in self.p)
        object.__setattr__(self, "p", p)
        if any(x < 0 for x in p):
            raise ValueError("probabilities must be nonnegative")
        if abs(sum(p) - 1.0) > 1e-12:
            raise ValueError(f"probabilities sum to {sum(p)}, not 1")

    def __len__(self):
        return len(self.p)

    def __getitem__(self, k):
        return self.p[k]


@dataclass(frozen=True)
class KrausChannel:
    """A CPTP map as a list of Kraus operators (weights folded in as sqrt(p) U)."""

    operators: tuple

    def __post_init__(self):
        ops = tuple(np.asarray(k, dtype=complex) for k in self.operators)
        object.__setattr__(self, "operators", ops)
        if not ops:
            raise ValueError("at least one Kraus operator required")
        d = ops[0].shape[0]
        if any(k.shape != (d, d) for k in ops):
            raise ValueError("all Kraus operators must share the same square shape")
        s = sum(k.conj().T @ k for k in ops)
        if np.max(np.abs(s - np.eye(d))) > COMPLETENESS_TOL:
            raise ValueError(
                f"Kraus completeness violated, residual {np.max(np.abs(s - np.eye(d))):.3e}"
            )

    @property
    def dim(self) -> int:
        return self.operators[0].shape[0]


@dataclass(frozen=True)
class DilatedChannel:
    """Classical environment state plus control-unitary pair (E1 A E2 B order)."""

    env_state: DensityOperator      # on E1 x E2, dimension K x K
    control_unitary: np.ndarray     # on E1 x A x E2 x B
    system_dims: tuple              # (d_A, d_B)

    def __post_init__(self):
        u = np.asarray(self.control_unitary, dtype=complex)
        object.__setattr__(self, "control_unitary", u)
        n = u.shape[0]
        if np.max(np.abs(u @ u.conj().T - np.eye(n))) > 1e-10:
            raise ValueError("control unitary is not unitary")
        env = self.env_state.mat
        if np.max(np.abs(env - np.diag(np.diag(env)))) > 1e-14:
            raise ValueError("environment state is not classical (off-diagonal terms)")

    @property
    def env_dim(self) -> int:
        return self.env_state.dim_a


def apply_kraus(ch: KrausChannel, rho: DensityOperator) -> DensityOperator:
    if ch.dim != rho.dim:
        raise ValueError(f"channel dim {ch.dim} != state dim {rho.dim}")
    out = sum(k @ rho.mat @ k.conj().T for k in ch.operators)
    return DensityOperator(out, rho.dim_a, rho.dim_b)


def apply_kraus_mat(ch: KrausChannel, mat: np.ndarray) -> np.ndarray:
    """Kraus action on a raw matrix (no density-operator validation)."""
    return sum(k @ mat @ k.conj().T for k in ch.operators)


def correlated_pauli(p: ProbabilityVector) -> KrausChannel:
    """Two-qubit correlated Pauli channel: Kraus set {sqrt(p_k) P_k x P_k}."""
    if len(p) != 4:
        raise ValueError("correlated Pauli channel needs 4 probabilities")
    ops = tuple(np.sqrt(pk) * kron(pauli, pauli) for pk, pauli in zip(p.p, PAULIS))
    return KrausChannel(ops)


def local_depolarizing(p: ProbabilityVector, side: str = "A") -> KrausChannel:
    """Pauli mixture applied to one qubit of a two-qubit system."""
    if len(p) != 4:
        raise ValueError("depolarizing channel needs 4 probabilities")
    eye = np.eye(2)
    if side == "A":
        ops = tuple(np.sqrt(pk) * kron(pauli, eye) for pk, pauli in zip(p.p, PAULIS))
    elif side == "B":
        ops = tuple(np.sqrt(pk) * kron(eye, pauli) for pk, pauli in zip(p.p, PAULIS))
    else:
        raise ValueError("side must be 'A' or 'B'")
    return KrausChannel(ops)


def _factor_side_a(k: np.ndarray, d: int, tol: float = 1e-10):
    """If k == K_A x I_d on a d x d bipartite space, return K_A, else None."""
    t = k.reshape(d, d, d, d)
    cand = t[:, 0, :, 0]
    if np.max(np.abs(k - np.kron(cand, np.eye(d)))) > tol:
        return None
    return cand


def is_entanglement_breaking(ch: KrausChannel, tol: float = 1e-10):
    """Choi test: apply the channel (of E x I form, acting on side A of a
    d x d space) to the maximally entangled state and check PPT.

    Returns (ppt_verdict, witness_spectrum).  For d = 2 the PPT verdict
    decides entanglement breaking exactly; for d >= 3 it is only the
    necessary PPT/NPT statement.
    """
    d = int(round(np.sqrt(ch.dim)))
    if d * d != ch.dim:
        raise ValueError("channel dimension is not a perfect square")
    for k in ch.operators:
        if _factor_side_a(k, d) is None:
            raise ValueError("channel is not of the form E x I on side A")
    out = apply_kraus(ch, max_entangled(d))
    spec = hermitian_eigenvalues(partial_transpose_mat(out.mat, d, d))
    return spec.min() >= -tol, spec


def is_product_form(rho: DensityOperator, tol: float = 1e-12) -> bool:
    """Structural separability certificate: rho == I/d_A x Tr_A(rho)."""
    sigma = partial_trace_multi(rho.mat, [rho.dim_a, rho.dim_b], keep=[1])
    target = kron(np.eye(rho.dim_a) / rho.dim_a, sigma)
    return float(np.max(np.abs(rho.mat - target))) <= tol


def build_control_unitary(unitaries) -> np.ndarray:
    """sum_k |k><k| x U_k on E x system."""
    k = len(unitaries)
    d = unitaries[0].shape[0]
    u = np.zeros((k * d, k * d), dtype=complex)
    for i, ui in enumerate(unitaries):
        u[i * d : (i + 1) * d, i * d : (i + 1) * d] = ui
    return u


def build_twirl_dilation(unitaries, probabilities=None, conjugate_second=False) -> DilatedChannel:
    """Dilation of sum_k p_k (U_k x V_k) rho (U_k x V_k)^dag with a classical
    correlated environment; V_k = U_k or U_k^* (conjugate_second)."""
    unitaries = [np.asarray(u, dtype=complex) for u in unitaries]
    kk = len(unitaries)
    d = unitaries[0].shape[0]
    if probabilities is None:
        probs = np.full(kk, 1.0 / kk)
    else:
        probs = np.asarray(probabilities.p if isinstance(probabilities, ProbabilityVector) else probabilities)
        if len(probs) != kk:
            raise ValueError("probability vector length must match unitary count")
    env = np.zeros((kk * kk, kk * kk), dtype=complex)
    for i, pi in enumerate(probs):
        env[i * kk + i, i * kk + i] = pi
    env_state = DensityOperator(env, kk, kk)
    seconds = [u.conj() if conjugate_second else u for u in unitaries]
    u_e1a = build_control_unitary(unitaries)
    u_e2b = build_control_unitary(seconds)
    return DilatedChannel(env_state, kron(u_e1a, u_e2b), (d, d))


def build_pauli_dilation(p: ProbabilityVector) -> DilatedChannel:
    """Unitary dilation of the correlated Pauli channel (K = 4 per side)."""
    if len(p) != 4:
        raise ValueError("need 4 probabilities")
    return build_twirl_dilation(PAULIS, probabilities=p)


def apply_dilation(dc: DilatedChannel, rho: DensityOperator) -> DensityOperator:
    """Embed rho with the environment, conjugate by the control unitary,
    trace out the environment."""
    da, db = dc.system_dims
    if (rho.dim_a, rho.dim_b) != (da, db):
        raise ValueError("state dimensions do not match the dilation")
    k = dc.env_dim
    # env x rho lives on (E1, E2, A, B); reorder to (E1, A, E2, B)
    total = kron(dc.env_state.mat, rho.mat)
    total = permute_subsystems(total, [k, k, da, db], [0, 2, 1, 3])
    total = dc.control_unitary @ total @ dc.control_unitary.conj().T
    out = partial_trace_multi(total, [k, da, k, db], keep=[1, 3])
    return DensityOperator(out, da, db)


def env_is_classical(state: DensityOperator, tol: float = 1e-12) -> bool:
    """True iff the state is diagonal in the computational product basis.

    Sufficient certificate for zero discord; not a general discord measure.
    """
    m = state.mat
    return float(np.max(np.abs(m - np.diag(np.diag(m))))) <= tol
