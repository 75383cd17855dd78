"""Unitary 2-design machinery: exact qubit twirling over the Clifford group,
analytic twirl projectors for qudits, and Monte-Carlo Haar twirling."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .linalg import DensityOperator, kron, partial_trace_multi, partial_transpose_mat
from .states import flip_operator, max_entangled

HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
PHASE = np.array([[1, 0], [0, 1j]], dtype=complex)


@dataclass(frozen=True)
class UnitarySet:
    """A finite set of d x d unitaries (exact 2-design or MC Haar batch)."""

    unitaries: tuple
    kind: str  # "exact-2design" | "mc-haar"
    d: int

    def __post_init__(self):
        us = tuple(np.asarray(u, dtype=complex) for u in self.unitaries)
        object.__setattr__(self, "unitaries", us)
        eye = np.eye(self.d)
        for u in us:
            if u.shape != (self.d, self.d):
                raise ValueError("unitary has wrong shape")
            if np.max(np.abs(u @ u.conj().T - eye)) > 1e-10:
                raise ValueError("set contains a non-unitary element")

    def __len__(self):
        return len(self.unitaries)


def _phase_canonical(u: np.ndarray) -> np.ndarray:
    """Fix the global phase so the first entry with |.| > 1e-9 is real positive."""
    flat = u.ravel()
    idx = np.argmax(np.abs(flat) > 1e-9)
    ph = flat[idx] / abs(flat[idx])
    return u / ph


def _fingerprint(u: np.ndarray) -> tuple:
    r = np.round(u, 9)
    r = r + 0.0  # normalize -0.0
    return tuple(r.ravel().tolist())


def clifford_group_qubit() -> UnitarySet:
    """The 24-element single-qubit Clifford group modulo global phase,
    generated by breadth-first closure over {H, S}."""
    gens = [HADAMARD, PHASE]
    seen = {}
    frontier = [_phase_canonical(np.eye(2, dtype=complex))]
    seen[_fingerprint(frontier[0])] = frontier[0]
    while frontier:
        nxt = []
        for u in frontier:
            for g in gens:
                v = _phase_canonical(g @ u)
                fp = _fingerprint(v)
                if fp not in seen:
                    seen[fp] = v
                    nxt.append(v)
        frontier = nxt
    return UnitarySet(tuple(seen.values()), "exact-2design", 2)


def contains_up_to_phase(uset: UnitarySet, u: np.ndarray, tol: float = 1e-9) -> bool:
    target = _phase_canonical(np.asarray(u, dtype=complex))
    return any(np.max(np.abs(_phase_canonical(v) - target)) < tol for v in uset.unitaries)


def twirl_operator(op: np.ndarray, uset: UnitarySet, conjugate_second: bool = False) -> np.ndarray:
    """(1/K) sum_k (U_k x V_k) op (U_k x V_k)^dag with V_k = U_k or U_k^*."""
    out = np.zeros_like(np.asarray(op, dtype=complex))
    for u in uset.unitaries:
        v = u.conj() if conjugate_second else u
        w = kron(u, v)
        out += w @ op @ w.conj().T
    return out / len(uset)


def partial_twirl_operator(op: np.ndarray, uset: UnitarySet, side: str, dims) -> np.ndarray:
    """(1/K) sum_k (U_k x I) op (U_k x I)^dag (or I x U_k for side B)."""
    da, db = dims
    out = np.zeros_like(np.asarray(op, dtype=complex))
    for u in uset.unitaries:
        w = kron(u, np.eye(db)) if side == "A" else kron(np.eye(da), u)
        out += w @ op @ w.conj().T
    return out / len(uset)


def twirl_uu(rho: DensityOperator, uset: UnitarySet) -> DensityOperator:
    if rho.dim_a != uset.d or rho.dim_b != uset.d:
        raise ValueError("state dimensions do not match the unitary set")
    return DensityOperator(twirl_operator(rho.mat, uset), rho.dim_a, rho.dim_b)


def twirl_uustar(rho: DensityOperator, uset: UnitarySet) -> DensityOperator:
    if rho.dim_a != uset.d or rho.dim_b != uset.d:
        raise ValueError("state dimensions do not match the unitary set")
    return DensityOperator(twirl_operator(rho.mat, uset, conjugate_second=True), rho.dim_a, rho.dim_b)


def partial_twirl(rho: DensityOperator, side: str, uset: UnitarySet) -> DensityOperator:
    d = rho.dim_a if side == "A" else rho.dim_b
    if d != uset.d:
        raise ValueError("unitary set dimension does not match the chosen side")
    out = partial_twirl_operator(rho.mat, uset, side, (rho.dim_a, rho.dim_b))
    return DensityOperator(out, rho.dim_a, rho.dim_b)


# -- analytic Haar twirls for any dimension -----------------------------------
#
# The U x U Haar twirl projects onto span{I, V} (V the flip operator); the
# U x U* twirl projects onto span{I, |psi><psi|}.  Coefficients are fixed by
# matching the invariant scalars Tr(rho) and Tr(V rho) (resp. <psi|rho|psi>).

def twirl_uu_exact_mat(op: np.ndarray, d: int) -> np.ndarray:
    v = flip_operator(d)
    t = np.trace(op)
    f = np.trace(v @ op)
    # a*d^2 + b*d = t ; a*d + b*d^2 = f
    det = d * d * d * d - d * d
    a = (d * d * t - d * f) / det
    b = (d * d * f - d * t) / det
    return a * np.eye(d * d) + b * v


def twirl_uustar_exact_mat(op: np.ndarray, d: int) -> np.ndarray:
    psi = max_entangled(d).mat
    t = np.trace(op)
    q = np.trace(psi @ op)
    # a*d^2 + b = t ; a + b = q
    a = (t - q) / (d * d - 1)
    b = q - a
    return a * np.eye(d * d) + b * psi


def twirl_exact(rho: DensityOperator, mode: str) -> DensityOperator:
    """Exact Haar twirl via the analytic projector; mode 'uu' or 'uustar'."""
    if rho.dim_a != rho.dim_b:
        raise ValueError("twirl requires isodimensional subsystems")
    d = rho.dim_a
    if mode == "uu":
        out = twirl_uu_exact_mat(rho.mat, d)
    elif mode == "uustar":
        out = twirl_uustar_exact_mat(rho.mat, d)
    else:
        raise ValueError("mode must be 'uu' or 'uustar'")
    return DensityOperator(out, d, d)


def partial_twirl_exact_mat(op: np.ndarray, dims, side: str = "A") -> np.ndarray:
    """Partial Haar average: I/d x Tr over the averaged side."""
    da, db = dims
    if side == "A":
        red = partial_trace_multi(op, [da, db], keep=[1])
        return kron(np.eye(da) / da, red)
    red = partial_trace_multi(op, [da, db], keep=[0])
    return kron(red, np.eye(db) / db)


# -- Haar sampling and Monte-Carlo twirling -----------------------------------

@dataclass
class HaarSampler:
    """Seeded Haar-unitary sampler (Ginibre + QR with phase fix).

    The stream is defined batch-wise: sample() is sample_batch(1).  A fixed
    seed reproduces an identical sequence.
    """

    seed: int
    d: int
    _rng: np.random.Generator = field(init=False, repr=False)

    def __post_init__(self):
        self._rng = np.random.default_rng(self.seed)

    def sample_batch(self, n: int) -> np.ndarray:
        # interleaved draws keep the stream independent of the batch split
        x = self._rng.standard_normal((n, self.d, self.d, 2))
        z = (x[..., 0] + 1j * x[..., 1]) / np.sqrt(2)
        q, r = np.linalg.qr(z)
        diag = np.diagonal(r, axis1=-2, axis2=-1)
        ph = diag / np.abs(diag)
        return q * ph[:, None, :]

    def sample(self) -> np.ndarray:
        return self.sample_batch(1)[0]


def haar_sample(s: HaarSampler) -> np.ndarray:
    return s.sample()


def mc_twirl_operator(op: np.ndarray, mode: str, n: int, s: HaarSampler, dims) -> np.ndarray:
    """Empirical twirl of a raw operator over n Haar samples.

    Samples are pre-generated serially from the seeded sampler, so results
    do not depend on how the averaging is scheduled.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    da, db = dims
    us = s.sample_batch(n)
    if mode == "uu":
        w = _batch_kron(us, us)
    elif mode == "uustar":
        w = _batch_kron(us, us.conj())
    elif mode == "partial-A":
        eye = np.broadcast_to(np.eye(db), (n, db, db))
        w = _batch_kron(us, eye)
    elif mode == "partial-B":
        eye = np.broadcast_to(np.eye(da), (n, da, da))
        w = _batch_kron(eye, us)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return np.einsum("nab,bc,ndc->ad", w, np.asarray(op, dtype=complex), w.conj(), optimize=True) / n


def mc_twirl(rho: DensityOperator, mode: str, n: int, s: HaarSampler) -> DensityOperator:
    """Empirical twirl over n Haar samples; statistical error O(1/sqrt(n))."""
    out = mc_twirl_operator(rho.mat, mode, n, s, (rho.dim_a, rho.dim_b))
    return DensityOperator(out, rho.dim_a, rho.dim_b)


def _batch_kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    n, da, _ = a.shape
    db = b.shape[1]
    return (a[:, :, None, :, None] * b[:, None, :, None, :]).reshape(n, da * db, da * db)


def verify_2design(uset: UnitarySet) -> bool:
    """Check the two defining consequences of 2-design-ness used here:
    partial twirl fully depolarizes one side, and the U x U twirl of a
    generic input lands in span{I, V}."""
    if uset.d != 2:
        raise ValueError("only the qubit design is shipped")
    d = uset.d
    # 1) partial twirl reproduces I/2 x Tr_A on a complete operator basis
    for i in range(d * d):
        for j in range(d * d):
            basis = np.zeros((d * d, d * d), dtype=complex)
            basis[i, j] = 1.0
            got = partial_twirl_operator(basis, uset, "A", (d, d))
            want = partial_twirl_exact_mat(basis, (d, d), "A")
            if np.max(np.abs(got - want)) > 1e-12:
                return False
    # 2) twirled generic input lies in span{I, V}
    rng = np.random.default_rng(20240317)
    g = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    rho = g @ g.conj().T
    rho /= np.trace(rho).real
    out = twirl_operator(rho, uset)
    proj = twirl_uu_exact_mat(out, d)  # projection onto span{I, V}
    return float(np.linalg.norm(out - proj)) <= 1e-11


def pt_conjugated_twirl(op: np.ndarray, uset: UnitarySet, d: int) -> np.ndarray:
    """PT o twirl_uu o PT, the partial-transposition conjugation of the
    U x U twirl (equals the U x U* twirl)."""
    inner = partial_transpose_mat(op, d, d)
    inner = twirl_operator(inner, uset)
    return partial_transpose_mat(inner, d, d)
