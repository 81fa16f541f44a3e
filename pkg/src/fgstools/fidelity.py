"""Closed-form Uhlmann fidelity between fermionic Gaussian states.

Given the correlation matrices of two states, the fidelity is

    F = |det((G_rho G_sigma - I)/2)|^(1/4) * prod_j (1 + sqrt(1 - nu_j^2))^(1/2),

where the nu_j >= 0 pair up the spectrum +-i*nu_j of
M = (G_rho + G_sigma)(G_rho G_sigma - I)^(-1).  M is similar to a real
skew-symmetric matrix, so its spectrum is purely imaginary; evaluating the
square root through that spectrum avoids forming the square root of a
non-symmetric matrix.  The first determinant vanishes exactly when the two
states are orthogonal (a common eigenmode occupied in one and empty in the
other), in which case F = 0 and the inverse is never formed.

Numerical notes: the determinant is evaluated in the log domain, the
inverse as a partially pivoted linear solve, and occupations within
PURE_BAND of 1 are treated as exactly pure.  The last rule removes the
square-root amplification of eigenvalue roundoff for modes the two states
share at machine purity, which otherwise inflates F for nearly identical
nearly pure states (the regime every boundary-effect sweep lives in).
"""

import warnings
from dataclasses import dataclass

import numpy as np

from .core import CorrelationMatrix
from .errors import (
    ConvergenceError,
    DimensionMismatchError,
    SingularInputError,
    UnpairedSpectrumError,
)

#: raw first-determinant threshold under which the states count as orthogonal
TOL_SINGULAR = 1e-24

#: occupations nu with 1 - nu below this band are clamped to exactly 1
PURE_BAND = 1e-12

#: tolerance on residual real parts / pairing mismatch of the M spectrum
TOL_PAIRING = 1e-7

#: a first determinant more negative than this signals numerical breakdown
TOL_NEGATIVE_DET = 1e-12


@dataclass(frozen=True)
class FidelityResult:
    """Fidelity value in [0, 1], the first determinant, and the orthogonality flag."""

    value: float
    first_determinant: float
    singular: bool


def _as_matrix(g) -> np.ndarray:
    return g.matrix if isinstance(g, CorrelationMatrix) else np.asarray(g, dtype=float)


def _pair_spectrum(M: np.ndarray, tol_pairing: float = TOL_PAIRING) -> np.ndarray:
    """Extract nu_j >= 0 from the +-i*nu_j spectrum of M, clamped to [0, 1]."""
    try:
        ev = np.linalg.eigvals(M)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"eigensolver failed on the fidelity kernel: {exc}") from exc
    scale = max(1.0, np.max(np.abs(ev.imag)))
    worst_real = np.max(np.abs(ev.real))
    if worst_real > tol_pairing * scale:
        raise UnpairedSpectrumError(
            f"spectrum has real parts up to {worst_real:.3e}; expected purely imaginary pairs"
        )
    im = np.sort(np.abs(ev.imag))[::-1]
    mismatch = np.max(np.abs(im[0::2] - im[1::2])) if im.size else 0.0
    if mismatch > tol_pairing * scale:
        raise UnpairedSpectrumError(f"+-i*nu pairing failed, worst magnitude mismatch {mismatch:.3e}")
    nus = 0.5 * (im[0::2] + im[1::2])
    nus = np.where(1.0 - nus < PURE_BAND, 1.0, np.minimum(nus, 1.0))
    return nus


def _kernel(a: np.ndarray, b: np.ndarray):
    """K = G_rho G_sigma - I plus its log-determinant pieces."""
    if a.shape != b.shape:
        raise DimensionMismatchError(f"correlation matrices differ in shape: {a.shape} vs {b.shape}")
    K = a @ b - np.eye(a.shape[0])
    sign, logabs = np.linalg.slogdet(0.5 * K)
    return K, sign, logabs


def gaussian_fidelity(grho, gsigma, tol_singular: float = TOL_SINGULAR) -> FidelityResult:
    """Uhlmann fidelity of two Gaussian states from their correlation matrices.

    Returns a :class:`FidelityResult`; ``singular=True`` (with value 0) when
    |det((G_rho G_sigma - I)/2)| falls below ``tol_singular``.  A materially
    negative first determinant cannot occur in exact arithmetic and is
    reported through the warning channel.
    """
    a, b = _as_matrix(grho), _as_matrix(gsigma)
    K, sign, logabs = _kernel(a, b)
    d1 = sign * np.exp(logabs) if np.isfinite(logabs) else 0.0
    if not np.isfinite(logabs) or logabs < np.log(tol_singular):
        return FidelityResult(value=0.0, first_determinant=d1, singular=True)
    if sign < 0 and logabs > np.log(TOL_NEGATIVE_DET):
        warnings.warn(
            f"first determinant is negative ({d1:.3e}); the fidelity kernel is numerically unreliable",
            RuntimeWarning,
            stacklevel=2,
        )
    try:
        M = np.linalg.solve(K.T, (a + b).T).T
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"linear solve against the fidelity kernel failed: {exc}") from exc
    nus = _pair_spectrum(M)
    log_f = 0.25 * logabs + 0.5 * np.sum(np.log1p(np.sqrt((1.0 - nus) * (1.0 + nus))))
    value = float(np.clip(np.exp(log_f), 0.0, 1.0))
    return FidelityResult(value=value, first_determinant=d1, singular=False)


def mode_angles(grho, gsigma, tol_singular: float = TOL_SINGULAR) -> np.ndarray:
    """The nu_j spectrum of M = (G_rho + G_sigma)(G_rho G_sigma - I)^(-1).

    Values are clamped to [0, 1] and sorted descending.  Raises
    :class:`SingularInputError` for orthogonal pairs, where M is undefined.
    """
    a, b = _as_matrix(grho), _as_matrix(gsigma)
    K, _sign, logabs = _kernel(a, b)
    if not np.isfinite(logabs) or logabs < np.log(tol_singular):
        raise SingularInputError("states are orthogonal; the fidelity kernel is singular")
    M = np.linalg.solve(K.T, (a + b).T).T
    return np.sort(_pair_spectrum(M))[::-1]
