"""Dense 2^n-dimensional reference implementation (n <= 7).

Everything the Gaussian formalism computes through 2n x 2n matrices is
recomputed here from explicit operators on the full Hilbert space: Majorana
matrices from the Jordan-Wigner construction, Gaussian states from their
product form, fidelities from Tr sqrt(sqrt(rho) sigma sqrt(rho)), reduced
states from genuine partial traces.  The point is validation, not scale;
requests beyond 7 modes (128-dimensional operators) are refused.
"""

from functools import lru_cache

import numpy as np

from .core import CorrelationMatrix, CouplingMatrix
from .errors import (
    DegenerateGroundStateError,
    DimensionMismatchError,
    InvalidLambdaError,
    NonRealResultError,
    RangeError,
    TooLargeError,
)

MAX_MODES = 7

_PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
_PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
_PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)


def _check_modes(n: int) -> None:
    if not 1 <= n <= MAX_MODES:
        raise TooLargeError(f"dense oracle supports 1..{MAX_MODES} modes, got n={n}")


class DenseState:
    """A validated density matrix: Hermitian, unit trace, positive semidefinite."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: np.ndarray):
        m = np.asarray(matrix, dtype=complex)
        dim = m.shape[0]
        if m.ndim != 2 or m.shape[1] != dim or dim & (dim - 1):
            raise DimensionMismatchError(f"density matrix must be square with power-of-two dim, got {m.shape}")
        if np.max(np.abs(m - m.conj().T)) > 1e-10:
            raise NonRealResultError("density matrix is not Hermitian within 1e-10")
        if abs(np.trace(m).real - 1.0) > 1e-10 or abs(np.trace(m).imag) > 1e-10:
            raise NonRealResultError(f"density matrix trace {np.trace(m)} is not 1 within 1e-10")
        if np.linalg.eigvalsh(m).min() < -1e-10:
            raise NonRealResultError("density matrix has an eigenvalue below -1e-10")
        m = 0.5 * (m + m.conj().T)
        m.setflags(write=False)
        self.matrix = m

    @property
    def n_modes(self) -> int:
        return int(np.log2(self.matrix.shape[0]))

    def __repr__(self):
        return f"DenseState(n_modes={self.n_modes})"


def _kron_chain(ops) -> np.ndarray:
    out = ops[0]
    for op in ops[1:]:
        out = np.kron(out, op)
    return out


@lru_cache(maxsize=MAX_MODES)
def _majorana_cache(n: int):
    eye = np.eye(2, dtype=complex)
    cs = []
    for site in range(n):
        string = [_PAULI_Z] * site
        tail = [eye] * (n - 1 - site)
        # c_{2j-1} = f_j + f_j^dag,  c_{2j} = -i(f_j - f_j^dag) with f_j = sigma_j^- (string)
        cs.append(_kron_chain(string + [_PAULI_X] + tail))
        cs.append(_kron_chain(string + [-_PAULI_Y] + tail))
    for c in cs:
        c.setflags(write=False)
    return tuple(cs)


def majorana_matrices(n: int):
    """The 2n Jordan-Wigner Majorana matrices on n sites (each 2^n x 2^n).

    Hermitian, squaring to the identity, pairwise anticommuting, and
    traceless in every product of distinct factors.
    """
    _check_modes(n)
    return _majorana_cache(n)


def dense_hamiltonian(coupling: CouplingMatrix) -> np.ndarray:
    """The operator (i/4) sum_jk A[j,k] c_j c_k as a dense matrix."""
    A = coupling.matrix
    n = coupling.n_modes
    _check_modes(n)
    cs = majorana_matrices(n)
    H = np.zeros((2**n, 2**n), dtype=complex)
    for j, k in zip(*np.nonzero(A)):
        H += (0.25j * A[j, k]) * (cs[j] @ cs[k])
    if np.max(np.abs(H - H.conj().T)) > 1e-10:
        raise NonRealResultError("assembled Hamiltonian is not Hermitian within 1e-10")
    return 0.5 * (H + H.conj().T)


def dense_gaussian_state(rotation: np.ndarray, lambdas, n: int) -> DenseState:
    """The Gaussian state (1/2^n) prod_j (I + i lambda_j ct_{2j-1} ct_{2j}).

    The tilded Majoranas are ct = R^T c, i.e. linear combinations of the
    Jordan-Wigner matrices with the columns of ``rotation`` as coefficients.
    """
    _check_modes(n)
    lambdas = np.asarray(lambdas, dtype=float)
    if lambdas.shape != (n,) or np.any(np.abs(lambdas) > 1.0 + 1e-12):
        raise InvalidLambdaError(f"need {n} block values in [-1, 1], got {lambdas!r}")
    R = np.asarray(rotation, dtype=float)
    if R.shape != (2 * n, 2 * n) or np.max(np.abs(R @ R.T - np.eye(2 * n))) > 1e-9:
        raise InvalidLambdaError("rotation must be a 2n x 2n orthogonal matrix")
    cs = majorana_matrices(n)
    dim = 2**n
    ct = [sum(R[m, i] * cs[m] for m in range(2 * n)) for i in range(2 * n)]
    rho = np.eye(dim, dtype=complex) / dim
    for j in range(n):
        rho = rho @ (np.eye(dim) + 1j * lambdas[j] * (ct[2 * j] @ ct[2 * j + 1]))
    return DenseState(rho)


def dense_ground_state(hamiltonian: np.ndarray, tol_gap: float = 1e-10) -> DenseState:
    """Projector onto the lowest eigenvector of a Hermitian operator."""
    w, v = np.linalg.eigh(hamiltonian)
    if w[1] - w[0] < tol_gap:
        raise DegenerateGroundStateError(
            f"dense spectrum gap {w[1] - w[0]:.3e} below {tol_gap:.1e}", modes=(0,)
        )
    psi = v[:, 0]
    return DenseState(np.outer(psi, psi.conj()))


def dense_partial_trace(state: DenseState, keep: int) -> DenseState:
    """Reduced state on the leading sites 1..keep (rightmost modes traced out).

    Jordan-Wigner strings point toward site 1, so operators on the leading
    modes act on the leading qubits only and the fermionic partial trace is
    the plain qubit partial trace.
    """
    n = state.n_modes
    if not 1 <= keep <= n:
        raise RangeError(f"keep must select a leading site range 1..m with 1 <= m <= {n}, got {keep}")
    da, db = 2**keep, 2 ** (n - keep)
    r = state.matrix.reshape(da, db, da, db)
    return DenseState(np.einsum("ijkj->ik", r))


def dense_fidelity(rho: DenseState, sigma: DenseState) -> float:
    """Tr sqrt(sqrt(rho) sigma sqrt(rho)) via Hermitian eigendecompositions."""
    a, b = rho.matrix, sigma.matrix
    if a.shape != b.shape:
        raise DimensionMismatchError(f"states differ in dimension: {a.shape} vs {b.shape}")
    w, v = np.linalg.eigh(a)
    sqrt_a = (v * np.sqrt(np.clip(w, 0.0, None))) @ v.conj().T
    inner = sqrt_a @ b @ sqrt_a
    w2 = np.linalg.eigvalsh(0.5 * (inner + inner.conj().T))
    return float(np.sum(np.sqrt(np.clip(w2, 0.0, None))))


def dense_correlation_matrix(state: DenseState) -> CorrelationMatrix:
    """Gamma_{jk} = (i/2) Tr(rho [c_j, c_k]) computed from dense traces."""
    n = state.n_modes
    cs = majorana_matrices(n)
    rho = state.matrix
    moments = np.empty((2 * n, 2 * n), dtype=complex)
    rc = [rho @ c for c in cs]
    for j in range(2 * n):
        for k in range(2 * n):
            moments[j, k] = np.trace(rc[j] @ cs[k]) if k >= j else -moments[k, j] + (2.0 if j == k else 0.0)
    gamma = 0.5j * (moments - moments.T)
    residue = np.max(np.abs(gamma.imag))
    if residue > 1e-10:
        raise NonRealResultError(f"correlation matrix has imaginary residue {residue:.3e}")
    return CorrelationMatrix(gamma.real)


def dense_entropy(state: DenseState) -> float:
    """Von Neumann entropy -sum p ln p of a dense state (natural log)."""
    p = np.clip(np.linalg.eigvalsh(state.matrix), 0.0, 1.0)
    p = p[p > 0.0]
    return float(-np.sum(p * np.log(p)))
