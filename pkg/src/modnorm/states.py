"""States on M_n as density matrices, maximizing-state sets, intersections.

A state is phi = tr(rho .) for a density matrix rho.  For a positive matrix p
the states attaining |phi(p)| = ||p|| are exactly the density matrices
supported on the top eigenspace of p, so maximizing sets are carried around as
orthogonal projections.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_CONFIG, ToleranceConfig
from .linalg import as_matrix, hermitian_eig, psd_check, spectral_norm, top_eigenspace
from .numrange import chord_through_zero


class ZeroMatrixError(ValueError):
    """The maximizing set of the zero matrix is rejected as degenerate."""


@dataclass(frozen=True)
class DensityState:
    """A positive unit-trace matrix rho representing phi = tr(rho .)."""

    rho: np.ndarray

    def __post_init__(self) -> None:
        m = as_matrix(self.rho)
        if m.shape[0] != m.shape[1]:
            raise ValueError("density matrix must be square")
        scale = max(spectral_norm(m), 1.0)
        if np.linalg.norm(m - m.conj().T, 2) > 1e-9 * scale:
            raise ValueError("density matrix must be Hermitian")
        if abs(np.trace(m).real - 1.0) > 1e-9:
            raise ValueError("density matrix must have unit trace")
        if np.linalg.eigvalsh((m + m.conj().T) / 2)[0] < -1e-9:
            raise ValueError("density matrix must be positive semidefinite")

    @staticmethod
    def pure(xi: np.ndarray) -> "DensityState":
        v = np.asarray(xi, dtype=np.complex128).ravel()
        v = v / np.linalg.norm(v)
        return DensityState(rho=np.outer(v, v.conj()))

    @staticmethod
    def mix(states: list[tuple[float, "DensityState"]]) -> "DensityState":
        rho = sum(w * s.rho for w, s in states)
        return DensityState(rho=rho / np.trace(rho).real)


def evaluate(phi: DensityState, a: np.ndarray) -> complex:
    """phi(a) = tr(rho a)."""
    m = as_matrix(a)
    if m.shape != phi.rho.shape:
        raise ValueError(f"dimension mismatch: state {phi.rho.shape}, matrix {m.shape}")
    return complex(np.trace(phi.rho @ m))


@dataclass(frozen=True)
class SubspaceProjection:
    """Orthonormal basis columns and the orthogonal projection they span."""

    basis: np.ndarray
    projection: np.ndarray

    @staticmethod
    def from_basis(basis: np.ndarray) -> "SubspaceProjection":
        b = np.asarray(basis, dtype=np.complex128)
        if b.ndim != 2:
            raise ValueError("basis must be a matrix of column vectors")
        return SubspaceProjection(basis=b, projection=b @ b.conj().T)

    @property
    def dim(self) -> int:
        return self.basis.shape[1]


def maximizing_set(
    p: np.ndarray, cfg: ToleranceConfig = DEFAULT_CONFIG
) -> SubspaceProjection:
    """Projection onto the top eigenspace of a nonzero positive matrix.

    Every density state supported under the projection evaluates to ||p|| on p.
    """
    m = as_matrix(p)
    if spectral_norm(m) <= cfg.eps_eq:
        raise ZeroMatrixError("maximizing set of the zero matrix is rejected")
    if not psd_check(m, cfg):
        raise ValueError("maximizing_set needs a positive semidefinite matrix")
    return SubspaceProjection.from_basis(top_eigenspace(m, cfg))


def sets_intersect(
    p: SubspaceProjection,
    q: SubspaceProjection,
    cfg: ToleranceConfig = DEFAULT_CONFIG,
) -> tuple[bool, DensityState | None]:
    """Principal-angle intersection test: sigma_max(P Q) >= 1 - eps_opt.

    On success returns a pure witness state supported (numerically) in both
    subspaces.
    """
    if p.projection.shape != q.projection.shape:
        raise ValueError("subspaces live in different ambient dimensions")
    prod = p.projection @ q.projection
    u, s, _ = np.linalg.svd(prod)
    if s[0] < 1.0 - cfg.eps_opt:
        return False, None
    # eigenvector of P Q P for eigenvalue ~1 lies in the intersection
    w = p.projection @ u[:, 0]
    w = w / np.linalg.norm(w)
    return True, DensityState.pure(w)


def subspace_intersection(
    p: SubspaceProjection,
    q: SubspaceProjection,
    cfg: ToleranceConfig = DEFAULT_CONFIG,
) -> np.ndarray:
    """Orthonormal basis of the (numerical) intersection of two subspaces.

    Vectors are eigenvectors of P Q P with eigenvalue within eps_opt of 1
    (squared cosines of principal angles).
    """
    pqp = p.projection @ q.projection @ p.projection
    dec = hermitian_eig(pqp, cfg)
    keep = dec.eigenvalues >= 1.0 - cfg.eps_opt
    return dec.eigenvectors[:, keep]


def witness_in_set_with_zero(
    p: SubspaceProjection,
    c: np.ndarray,
    cfg: ToleranceConfig = DEFAULT_CONFIG,
) -> DensityState | None:
    """A density state supported under P with tr(rho c) ~ 0, or None.

    Exists iff 0 lies in the numerical range of c compressed to ran(P); the
    witness is a convex combination of at most two pure states built from the
    chord of the compressed range through the origin.
    """
    m = as_matrix(c)
    if m.shape != p.projection.shape:
        raise ValueError(f"dimension mismatch: projection {p.projection.shape}, matrix {m.shape}")
    if p.dim == 0:
        return None
    comp = p.basis.conj().T @ m @ p.basis
    chord = chord_through_zero(comp, cfg)
    if chord is None:
        return None
    xi1, xi2, t, resid = chord
    if resid > cfg.eps_opt * (1.0 + spectral_norm(m)):
        return None
    v1 = p.basis @ xi1
    v2 = p.basis @ xi2
    # the chord weight t interpolates from the first point toward the second
    if t >= 1.0 - 1e-15:
        return DensityState.pure(v2)
    if t <= 1e-15:
        return DensityState.pure(v1)
    return DensityState.mix([(1.0 - t, DensityState.pure(v1)), (t, DensityState.pure(v2))])
