"""Canonical forms and correlation-matrix algebra for fermionic Gaussian states.

A system of n fermionic modes is described by 2n Majorana operators; every
quadratic Hamiltonian is encoded by a real skew-symmetric coefficient matrix
A through H = (i/4) c^T A c, and every Gaussian state by its real
skew-symmetric correlation matrix Gamma with eigenvalues +-i*nu_j,
0 <= nu_j <= 1.  Both matrices admit the canonical form

    A = R [ (+) blocks (0, v_j; -v_j, 0) ] R^T,   R orthogonal, v_j >= 0,

which this module computes via the real Schur decomposition.  All functions
are pure; returned matrices are read-only views.
"""

from dataclasses import dataclass

import numpy as np
import scipy.linalg as sla

from .errors import (
    ConvergenceError,
    DegenerateGroundStateError,
    OddDimensionError,
    RangeError,
    SkewSymmetryError,
    SpectrumOutOfRangeError,
)

#: clamping tolerance for block values at the boundary of [0, 1]
TOL_SPEC = 1e-10

#: default gap tolerance below which a ground state counts as degenerate
TOL_GAP = 1e-10

#: skewness tolerance accepted by make_coupling before antisymmetrization
TOL_SKEW = 1e-9


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=float)
    a.setflags(write=False)
    return a


def _check_square_even(entries: np.ndarray) -> None:
    if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
        raise OddDimensionError(f"expected a square matrix, got shape {entries.shape}")
    if entries.shape[0] % 2 != 0 or entries.shape[0] == 0:
        raise OddDimensionError(f"dimension must be a positive even integer, got {entries.shape[0]}")


class SkewMatrix:
    """A real skew-symmetric matrix of even dimension, exact as stored.

    The lower triangle is mirrored with negation at construction, so
    ``self.matrix`` satisfies M[j, k] == -M[k, j] bitwise.
    """

    __slots__ = ("matrix",)

    def __init__(self, entries: np.ndarray, tol: float = TOL_SKEW):
        entries = np.asarray(entries, dtype=float)
        _check_square_even(entries)
        asym = np.max(np.abs(entries + entries.T))
        if asym > tol:
            raise SkewSymmetryError(f"matrix deviates from skew symmetry by {asym:.3e} (tol {tol:.1e})")
        upper = np.triu(entries - entries.T, 1) / 2.0
        self.matrix = _freeze(upper - upper.T)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def n_modes(self) -> int:
        return self.matrix.shape[0] // 2

    def __repr__(self):
        return f"{type(self).__name__}(dim={self.dim})"


class CouplingMatrix(SkewMatrix):
    """Coefficient matrix A of a quadratic Majorana Hamiltonian H = (i/4) c^T A c.

    ``metadata`` may carry builder information (model name, parameters, and
    the additive constant dropped when mapping a spin Hamiltonian to A).
    """

    __slots__ = ("metadata",)

    def __init__(self, entries: np.ndarray, metadata: dict | None = None, tol: float = TOL_SKEW):
        super().__init__(entries, tol=tol)
        self.metadata = dict(metadata) if metadata else {}


class CorrelationMatrix(SkewMatrix):
    """Correlation matrix Gamma_{jk} = (i/2) Tr(rho [c_j, c_k]) of a Gaussian state.

    Skew symmetry is enforced at construction; the spectral bound
    nu_j <= 1 is checked by the operations that consume the spectrum
    (see :func:`mode_occupations`).
    """

    __slots__ = ()


@dataclass(frozen=True, eq=False)
class CanonicalDecomposition:
    """Orthogonal rotation and nonnegative block values of a skew-symmetric matrix."""

    rotation: np.ndarray
    block_values: np.ndarray

    def reconstruct(self) -> np.ndarray:
        """Return R [ (+) (0, v; -v, 0) ] R^T."""
        d = self.rotation.shape[0]
        sigma = np.zeros((d, d))
        for j, v in enumerate(self.block_values):
            sigma[2 * j, 2 * j + 1] = v
            sigma[2 * j + 1, 2 * j] = -v
        return self.rotation @ sigma @ self.rotation.T


def make_coupling(raw: np.ndarray, metadata: dict | None = None) -> CouplingMatrix:
    """Validate and antisymmetrize a raw square matrix into a CouplingMatrix.

    Accepts matrices whose symmetric part is below 1e-9 in max norm and
    stores (raw - raw^T)/2 with the lower triangle mirrored exactly.
    """
    return CouplingMatrix(raw, metadata=metadata)


def _schur_blocks(matrix: np.ndarray, zero_tol: float = 1e-12):
    """Real Schur form of a skew-symmetric matrix, organised into 2x2 blocks.

    Returns ``(Z, blocks)`` where Z is orthogonal and ``blocks`` is a list of
    ``(i, j, b)`` with column indices i, j of Z spanning one canonical plane
    and b the signed block value (A acts on that plane as (0, b; -b, 0)).
    Zero modes appear in the Schur form as 1x1 null blocks; consecutive ones
    are paired into planes with b = 0.
    """
    try:
        T, Z = sla.schur(matrix, output="real")
    except (sla.LinAlgError, ValueError) as exc:  # pragma: no cover - LAPACK failure path
        raise ConvergenceError(f"real Schur decomposition failed: {exc}") from exc
    d = matrix.shape[0]
    blocks = []
    singles = []
    j = 0
    while j < d:
        if j + 1 < d and abs(T[j + 1, j]) > zero_tol:
            blocks.append((j, j + 1, T[j, j + 1]))
            j += 2
        else:
            singles.append(j)
            j += 1
    for k in range(0, len(singles) - 1, 2):
        blocks.append((singles[k], singles[k + 1], 0.0))
    if len(singles) % 2 != 0:  # pragma: no cover - cannot happen for even skew input
        raise ConvergenceError("odd number of null Schur blocks in a skew-symmetric matrix")
    return Z, blocks


def canonical_block_diagonalize(matrix) -> CanonicalDecomposition:
    """Block-diagonalize a skew-symmetric matrix by a real orthogonal transform.

    Returns (R, v) with v_j >= 0 sorted descending (ties broken by the
    block's leading column in the Schur form) and
    R [ (+) (0, v_j; -v_j, 0) ] R^T equal to the input within 1e-9.
    """
    A = matrix.matrix if isinstance(matrix, SkewMatrix) else SkewMatrix(matrix).matrix
    Z, blocks = _schur_blocks(A)
    # flip negative blocks by swapping their two columns, then sort descending
    ordered = []
    for i, j, b in blocks:
        if b < 0:
            ordered.append((abs(b), i, (j, i)))
        else:
            ordered.append((b, i, (i, j)))
    ordered.sort(key=lambda t: (-t[0], t[1]))
    d = A.shape[0]
    R = np.empty_like(Z)
    values = np.empty(len(ordered))
    for k, (v, _lead, (ci, cj)) in enumerate(ordered):
        R[:, 2 * k] = Z[:, ci]
        R[:, 2 * k + 1] = Z[:, cj]
        values[k] = v
    return CanonicalDecomposition(rotation=_freeze(R), block_values=_freeze(values))


def _assemble(Z: np.ndarray, blocks, values_per_block) -> np.ndarray:
    """Build Z [ (+) (0, v; -v, 0) ] Z^T for per-block values aligned with ``blocks``."""
    d = Z.shape[0]
    G = np.zeros((d, d))
    for (i, j, _b), v in zip(blocks, values_per_block):
        if v != 0.0:
            G += v * (np.outer(Z[:, i], Z[:, j]) - np.outer(Z[:, j], Z[:, i]))
    return (G - G.T) / 2.0


def ground_state_correlation(coupling: CouplingMatrix, tol_gap: float = TOL_GAP) -> CorrelationMatrix:
    """Correlation matrix of the unique ground state of H = (i/4) c^T A c.

    Every canonical block is set to occupation 1 with the sign chosen
    blockwise to minimize the Gaussian energy <H> = -(1/4) tr(A Gamma);
    the result is pure (Gamma^2 = -I).

    Raises :class:`DegenerateGroundStateError` when any quasiparticle energy
    falls below ``tol_gap``; the error lists the offending modes.  Chains
    with exact zero modes (the h = 0 Ising chain, odd XX chains) land here,
    and so do gapped open chains whose edge-mode splitting has decayed under
    the threshold; callers that accept the edge-mode ambiguity may pass a
    smaller ``tol_gap``.
    """
    A = coupling.matrix
    Z, blocks = _schur_blocks(A)
    energies = sorted((abs(b) for _i, _j, b in blocks), reverse=True)
    bad = [k for k, e in enumerate(energies) if e < tol_gap]
    if bad:
        raise DegenerateGroundStateError(
            f"{len(bad)} quasiparticle energies below tol_gap={tol_gap:.1e} "
            f"(smallest {energies[-1]:.3e}); zero modes at indices {bad}",
            modes=bad,
        )
    # minimizing s*b/2 per block puts occupation -sign(b) on the plane (i, j)
    signs = []
    for i, j, b in blocks:
        t = Z[:, i] @ A @ Z[:, j] if b == 0.0 else b
        signs.append(-1.0 if t > 0 else 1.0)
    return CorrelationMatrix(_assemble(Z, blocks, signs))


def thermal_correlation(coupling: CouplingMatrix) -> CorrelationMatrix:
    """Correlation matrix of the Gaussian state rho ~ exp((i/4) c^T A c).

    Block values are tanh(eps_j / 2) in the canonical frame of A, oriented
    along A's own block signs.
    """
    A = coupling.matrix
    Z, blocks = _schur_blocks(A)
    lams = [np.tanh(b / 2.0) for _i, _j, b in blocks]
    return CorrelationMatrix(_assemble(Z, blocks, lams))


def reduce(gamma: CorrelationMatrix, first_site: int, last_site: int) -> CorrelationMatrix:
    """Principal submatrix of Gamma over the contiguous site range [first_site, last_site].

    Site indexing is 1-based; site j owns Majorana rows 2j-1 and 2j.  The
    extracted submatrix is the correlation matrix of the reduced state.
    """
    n = gamma.n_modes
    if not (1 <= first_site <= last_site <= n):
        raise RangeError(f"site range [{first_site}, {last_site}] invalid for {n} sites")
    lo = 2 * (first_site - 1)
    hi = 2 * last_site
    return CorrelationMatrix(gamma.matrix[lo:hi, lo:hi])


def mode_occupations(gamma: CorrelationMatrix, tol: float = TOL_SPEC) -> np.ndarray:
    """Block values nu_j of a correlation matrix, clamped to [0, 1], sorted descending.

    Values inside (1, 1 + tol] are floating-point residue and clamp to 1;
    anything larger raises :class:`SpectrumOutOfRangeError`.
    """
    try:
        w = np.linalg.eigvalsh(1j * gamma.matrix)
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise ConvergenceError(f"eigensolver failed: {exc}") from exc
    nus = np.sort(w[gamma.n_modes :])[::-1]
    worst = nus[0] if nus.size else 0.0
    if worst > 1.0 + tol:
        raise SpectrumOutOfRangeError(f"block value {worst!r} exceeds 1 beyond tolerance {tol:.1e}")
    return _freeze(np.clip(nus, 0.0, 1.0))


def random_gaussian_correlation(n: int, pure: bool = False, seed: int = 0) -> CorrelationMatrix:
    """Seeded random correlation matrix on n modes (a test-fixture generator).

    Draws a Haar-like orthogonal R by QR-orthogonalizing a seeded standard
    normal matrix, and block values all 1 when ``pure`` else uniform [0, 1].
    Deterministic in ``seed``.
    """
    if n < 1:
        raise RangeError(f"need at least one mode, got n={n}")
    rng = np.random.default_rng(seed)
    q, r = np.linalg.qr(rng.standard_normal((2 * n, 2 * n)))
    q = q * np.where(np.diag(r) >= 0.0, 1.0, -1.0)  # fix the QR sign ambiguity
    lams = np.ones(n) if pure else rng.uniform(0.0, 1.0, n)
    d = 2 * n
    sigma = np.zeros((d, d))
    for j, lam in enumerate(lams):
        sigma[2 * j, 2 * j + 1] = lam
        sigma[2 * j + 1, 2 * j] = -lam
    g = q @ sigma @ q.T
    return CorrelationMatrix((g - g.T) / 2.0)
