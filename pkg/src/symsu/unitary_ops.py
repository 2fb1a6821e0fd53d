"""Dense unitary-level operations over the invariant algebra.

Covers the exponential map from Hermitian generator sums, products of
invariant unitaries, seeded sampling of invariant unitaries, a
unitary eigendecomposition with degenerate-cluster handling, the
eigenphase-interpolation path A(t) = P D(t) P+ from the identity to A,
and rescaling onto determinant one.
"""

import math
from dataclasses import dataclass

import numpy as np

from .basis import InvariantBasis, build_basis
from .errors import DimensionError, NotUnitaryError, NumericError
from .paulis import PauliSum, sum_to_matrix
from .symmetry import SymmetryGroup

UNITARITY_TOL = 1e-9

# Eigenvalues closer than this on the unit circle are treated as one
# degenerate cluster; the eigenvectors are re-orthonormalized per cluster
# so the spectral projectors, not individual vectors, carry the meaning.
CLUSTER_TOL = 1e-8

RECONSTRUCTION_TOL = 1e-9


class Unitary:
    """A dense square matrix validated to be unitary at construction."""

    __slots__ = ("matrix", "unitarity_residual", "_eig")

    def __init__(self, matrix, tol: float = UNITARITY_TOL):
        m = np.array(matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimensionError(f"expected a square matrix, got shape {m.shape}")
        dim = m.shape[0]
        if dim & (dim - 1):
            raise DimensionError(f"dimension {dim} is not a power of two")
        residual = float(np.linalg.norm(m @ m.conj().T - np.eye(dim)))
        if residual >= tol:
            raise NotUnitaryError(f"||UU+ - 1|| = {residual:.3e} exceeds {tol:.1e}")
        m.setflags(write=False)
        self.matrix = m
        self.unitarity_residual = residual
        self._eig = None

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def n(self) -> int:
        return self.dim.bit_length() - 1

    def dagger(self) -> "Unitary":
        return Unitary(self.matrix.conj().T)

    def __repr__(self) -> str:
        return f"Unitary(dim={self.dim}, residual={self.unitarity_residual:.2e})"


def identity_unitary(n: int) -> Unitary:
    return Unitary(np.eye(1 << n))


def exp_generator(h: PauliSum, alpha: float, max_qubits: int = 10) -> Unitary:
    """exp(-i*alpha/2 * H) for a Hermitian generator sum H.

    Computed through the Hermitian eigendecomposition of the realization,
    so the result is unitary up to eigensolver error.
    """
    if not h.is_hermitian():
        raise ValueError(
            "generator must be Hermitian (real coefficients on phase-free terms)"
        )
    hm = sum_to_matrix(h, max_qubits=max_qubits)
    w, v = np.linalg.eigh(hm)
    return Unitary((v * np.exp(-0.5j * alpha * w)) @ v.conj().T)


def compose(u1: Unitary, u2: Unitary) -> Unitary:
    """Apply u1 first, then u2: the matrix product U2 U1."""
    if u1.dim != u2.dim:
        raise DimensionError(f"dimensions differ: {u1.dim} vs {u2.dim}")
    return Unitary(u2.matrix @ u1.matrix)


def random_invariant(n: int, group: SymmetryGroup, seed: int, depth: int,
                     basis: InvariantBasis | None = None) -> Unitary:
    """Product of `depth` exponentials of uniformly drawn basis elements.

    Deterministic per seed; angles are uniform in [0, 2*pi).
    """
    if basis is None:
        basis = build_basis(n, group)
    if len(basis) == 0:
        raise ValueError("degenerate group: the invariant basis is empty")
    rng = np.random.default_rng(seed)
    u = np.eye(1 << n, dtype=complex)
    for _ in range(depth):
        k = int(rng.integers(len(basis)))
        alpha = float(rng.uniform(0.0, 2.0 * math.pi))
        u = exp_generator(basis.elements[k], alpha).matrix @ u
    return Unitary(u)


@dataclass(frozen=True)
class EigDecomposition:
    """Orthonormal eigenvectors and clustered eigenphases of a unitary.

    ``clusters`` holds half-open column ranges of equal eigenvalues;
    thetas are identical within each cluster and lie in (-pi, pi].
    """

    eigenvectors: np.ndarray
    thetas: np.ndarray
    clusters: tuple

    @property
    def eigenvalues(self) -> np.ndarray:
        return np.exp(1j * self.thetas)

    def reconstruct(self, t: float = 1.0) -> np.ndarray:
        p = self.eigenvectors
        return (p * np.exp(1j * t * self.thetas)) @ p.conj().T


def _cluster_indices(values: np.ndarray, tol: float) -> list[list[int]]:
    """Group indices whose complex values match within tol (union-find)."""
    k = len(values)
    parent = list(range(k))

    def root(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(k):
        for j in range(i + 1, k):
            if abs(values[i] - values[j]) <= tol:
                ri, rj = root(i), root(j)
                if ri != rj:
                    parent[rj] = ri
    groups: dict[int, list[int]] = {}
    for i in range(k):
        groups.setdefault(root(i), []).append(i)
    return list(groups.values())


def _assemble(m: np.ndarray, vectors: np.ndarray, lambdas: np.ndarray,
              cluster_tol: float):
    """Cluster eigenvalues, re-orthonormalize per cluster, sort by theta."""
    groups = _cluster_indices(lambdas, cluster_tol)
    reps = []
    for members in groups:
        rep = np.mean(lambdas[members])
        rep /= abs(rep)
        reps.append((float(np.angle(rep)), members))
    reps.sort(key=lambda item: item[0])

    dim = m.shape[0]
    p = np.empty((dim, dim), dtype=complex)
    thetas = np.empty(dim)
    clusters = []
    col = 0
    for theta, members in reps:
        block = vectors[:, members]
        q, _ = np.linalg.qr(block)
        width = q.shape[1]
        p[:, col:col + width] = q
        thetas[col:col + width] = theta
        clusters.append((col, col + width))
        col += width
    return EigDecomposition(p, thetas, tuple(clusters))


def _pencil_decomposition(m: np.ndarray, cluster_tol: float) -> EigDecomposition:
    """Joint diagonalization of the Hermitian parts (A+A+)/2 and (A-A+)/2i.

    For a normal A the two commute, so refining the eigenspaces of the
    real part by the imaginary part yields orthonormal eigenvectors of A.
    """
    re_part = (m + m.conj().T) / 2
    im_part = (m - m.conj().T) / 2j
    w, v = np.linalg.eigh(re_part)
    im_vals = np.empty_like(w)
    start = 0
    dim = m.shape[0]
    for stop in range(1, dim + 1):
        if stop < dim and w[stop] - w[stop - 1] <= cluster_tol:
            continue
        block = v[:, start:stop]
        sub = block.conj().T @ im_part @ block
        sub = (sub + sub.conj().T) / 2
        wi, rot = np.linalg.eigh(sub)
        v[:, start:stop] = block @ rot
        im_vals[start:stop] = wi
        start = stop
    lambdas = w + 1j * im_vals
    lambdas /= np.abs(lambdas)
    return _assemble(m, v, lambdas, cluster_tol)


def _general_decomposition(m: np.ndarray, cluster_tol: float) -> EigDecomposition:
    lambdas, vectors = np.linalg.eig(m)
    lambdas = lambdas / np.abs(lambdas)
    return _assemble(m, vectors, lambdas, cluster_tol)


def _decomposition_residuals(m: np.ndarray, dec: EigDecomposition) -> tuple[float, float]:
    p = dec.eigenvectors
    recon = float(np.linalg.norm(dec.reconstruct() - m))
    ortho = float(np.linalg.norm(p.conj().T @ p - np.eye(m.shape[0])))
    return recon, ortho


def eig_unitary(a, cluster_tol: float = CLUSTER_TOL,
                residual_tol: float = RECONSTRUCTION_TOL) -> EigDecomposition:
    """Eigendecomposition of a unitary with degenerate-cluster grouping.

    Tries the Hermitian-pencil route first; falls back to a general
    complex eigensolve with per-cluster re-orthonormalization.
    """
    m = np.asarray(getattr(a, "matrix", a), dtype=complex)
    dec = _pencil_decomposition(m, cluster_tol)
    recon, ortho = _decomposition_residuals(m, dec)
    if recon < residual_tol and ortho < residual_tol:
        return dec
    dec = _general_decomposition(m, cluster_tol)
    recon, ortho = _decomposition_residuals(m, dec)
    if recon < residual_tol and ortho < residual_tol:
        return dec
    raise NumericError(
        f"unitary eigendecomposition failed: reconstruction residual {recon:.3e}, "
        f"orthonormality residual {ortho:.3e}, target {residual_tol:.1e}"
    )


def _cached_eig(a: Unitary) -> EigDecomposition:
    if a._eig is None:
        a._eig = eig_unitary(a)
    return a._eig


def connectedness_path(a: Unitary, t: float) -> Unitary:
    """Point on the eigenphase-interpolation path from the identity to A.

    A(t) = P diag(exp(i t theta)) P+ with one cached decomposition per A;
    A(0) is the identity and A(1) reproduces A.  If A commutes with a
    symmetry group, so does every A(t), because the interpolation only
    rescales eigenvalues while keeping the spectral projectors fixed.
    """
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"path parameter must lie in [0, 1], got {t}")
    dec = _cached_eig(a)
    return Unitary(dec.reconstruct(t))


def project_to_su(u: Unitary) -> Unitary:
    """Rescale by the principal dim-th root of det(U) onto determinant one.

    The factor is a global phase, so commutation with every symmetry
    element is unchanged.
    """
    d = complex(np.linalg.det(u.matrix))
    factor = abs(d) ** (-1.0 / u.dim) * np.exp(-1j * np.angle(d) / u.dim)
    return Unitary(u.matrix * factor)
