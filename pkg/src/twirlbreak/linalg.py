"""Dense complex linear algebra over bipartite finite-dimensional systems.

Conventions: subsystem A is the left (slow) tensor factor, so a bipartite
matrix element is rho[i*d_B + j, k*d_B + l] = <i,j|rho|k,l>.  Partial
transposition acts on subsystem B by default (j <-> l swap).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10


def _as_complex(m) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2:
        raise ValueError(f"expected a matrix, got ndim={m.ndim}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix contains NaN/Inf entries")
    return m


@dataclass(frozen=True)
class DensityOperator:
    """A bipartite density matrix with dimension metadata.

    Validation (Hermiticity, unit trace, positivity) runs on construction;
    use the module-level tolerances.
    """

    mat: np.ndarray
    dim_a: int
    dim_b: int

    def __post_init__(self):
        m = _as_complex(self.mat)
        object.__setattr__(self, "mat", m)
        d = self.dim_a * self.dim_b
        if self.dim_a < 1 or self.dim_b < 1:
            raise ValueError("subsystem dimensions must be positive")
        if m.shape != (d, d):
            raise ValueError(
                f"matrix shape {m.shape} inconsistent with dims ({self.dim_a}, {self.dim_b})"
            )
        if np.max(np.abs(m - m.conj().T)) > HERMITICITY_TOL:
            raise ValueError("density matrix is not Hermitian")
        if abs(np.trace(m).real - 1.0) > TRACE_TOL or abs(np.trace(m).imag) > TRACE_TOL:
            raise ValueError("density matrix does not have unit trace")
        if np.linalg.eigvalsh(m)[0] < -PSD_TOL:
            raise ValueError("density matrix is not positive semidefinite")

    @property
    def dim(self) -> int:
        return self.dim_a * self.dim_b


@dataclass(frozen=True)
class HermitianSpectrum:
    """Real eigenvalues of a Hermitian matrix, sorted ascending."""

    eigenvalues: np.ndarray = field()

    def __post_init__(self):
        ev = np.asarray(self.eigenvalues, dtype=float)
        object.__setattr__(self, "eigenvalues", ev)

    def min(self) -> float:
        return float(self.eigenvalues[0])


def kron(a, b) -> np.ndarray:
    """Kronecker product with A as the left (slow) factor."""
    return np.kron(_as_complex(a), _as_complex(b))


def permute_subsystems(mat: np.ndarray, dims, perm) -> np.ndarray:
    """Reorder the tensor factors of a square matrix.

    ``dims`` are the current factor dimensions; ``perm[i]`` is the index
    of the current factor placed at output position i.
    """
    dims = list(dims)
    n = len(dims)
    t = np.asarray(mat).reshape(dims + dims)
    axes = list(perm) + [n + p for p in perm]
    t = t.transpose(axes)
    d = int(np.prod(dims))
    return t.reshape(d, d)


def partial_trace_multi(mat: np.ndarray, dims, keep) -> np.ndarray:
    """Trace out every tensor factor not listed in ``keep`` (order preserved)."""
    dims = list(dims)
    n = len(dims)
    keep = sorted(keep)
    t = np.asarray(mat).reshape(dims + dims)
    # contract traced factors pairwise, from the highest axis down
    traced = [i for i in range(n) if i not in keep]
    for i in sorted(traced, reverse=True):
        t = np.trace(t, axis1=i, axis2=i + t.ndim // 2)
    d = int(np.prod([dims[i] for i in keep]))
    return t.reshape(d, d)


def partial_trace(rho: DensityOperator, subsystem: str) -> DensityOperator:
    """Trace out subsystem 'A' or 'B', returning the complementary marginal."""
    if subsystem not in ("A", "B"):
        raise ValueError("subsystem must be 'A' or 'B'")
    keep = [1] if subsystem == "A" else [0]
    red = partial_trace_multi(rho.mat, [rho.dim_a, rho.dim_b], keep)
    d = rho.dim_b if subsystem == "A" else rho.dim_a
    return DensityOperator(red, d, 1)


def partial_transpose_mat(mat: np.ndarray, dim_a: int, dim_b: int, side: str = "B") -> np.ndarray:
    """Partial transposition of a bipartite matrix (default on subsystem B)."""
    t = np.asarray(mat).reshape(dim_a, dim_b, dim_a, dim_b)
    if side == "B":
        t = t.transpose(0, 3, 2, 1)
    elif side == "A":
        t = t.transpose(2, 1, 0, 3)
    else:
        raise ValueError("side must be 'A' or 'B'")
    return t.reshape(dim_a * dim_b, dim_a * dim_b)


def partial_transpose(rho: DensityOperator, side: str = "B") -> np.ndarray:
    return partial_transpose_mat(rho.mat, rho.dim_a, rho.dim_b, side=side)


def hermitian_eigenvalues(m, tol: float = 1e-10) -> HermitianSpectrum:
    """Eigenvalues of a Hermitian matrix, ascending.  Raises on non-Hermitian input."""
    m = _as_complex(m)
    if np.max(np.abs(m - m.conj().T)) > tol:
        raise ValueError("matrix is not Hermitian within tolerance")
    return HermitianSpectrum(np.linalg.eigvalsh(m))


def is_ppt(rho: DensityOperator, tol: float = PSD_TOL) -> bool:
    """Peres-Horodecki test: positivity of the partial transpose.

    Decides separability exactly for 2x2 and 2x3 systems; elsewhere PPT is
    only a necessary condition.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    spec = hermitian_eigenvalues(partial_transpose(rho))
    return spec.min() >= -tol


def negativity(rho: DensityOperator) -> float:
    """Sum of |negative eigenvalues| of the partial transpose."""
    ev = hermitian_eigenvalues(partial_transpose(rho)).eigenvalues
    return float(np.sum(np.abs(ev[ev < 0])))


def frobenius_distance(a, b) -> float:
    a = _as_complex(a)
    b = _as_complex(b)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    return float(np.linalg.norm(a - b))


def density(mat, dim_a: int, dim_b: int) -> DensityOperator:
    """Shorthand constructor."""
    return DensityOperator(mat, dim_a, dim_b)
