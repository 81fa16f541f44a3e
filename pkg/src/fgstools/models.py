"""Coupling-matrix builders for two open-boundary free-fermion spin chains.

Both chains map to quadratic Majorana Hamiltonians H = (i/4) c^T A c under
the Jordan-Wigner transformation f_j = sigma_j^- prod_{k<j} sigma_k^z with
Majorana operators c_{2j-1} = f_j + f_j^dag, c_{2j} = -i(f_j - f_j^dag).
In that convention the elementary translations are

    sigma_j^z                    =  i c_{2j-1} c_{2j}
    sigma_j^x sigma_{j+1}^x      =  i c_{2j}   c_{2j+1}
    sigma_j^y sigma_{j+1}^y      = -i c_{2j-1} c_{2j+2}

so both spin Hamiltonians below equal (i/4) c^T A c with no additive
constant; the constant is still recorded in the builder metadata for the
spectrum-equivalence checks.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .core import CouplingMatrix
from .errors import TooFewSitesError


class ModelKind(str, Enum):
    ISING = "ising"
    XY = "xy"


@dataclass(frozen=True)
class ModelSpec:
    """A chain selection: model kind, site count n >= 2, field h."""

    kind: ModelKind
    n: int
    h: float

    def __post_init__(self):
        if self.n < 2:
            raise TooFewSitesError(f"chain needs n >= 2 sites, got n={self.n}")


def _majorana_term(A: np.ndarray, p: int, q: int, alpha: float) -> None:
    """Add alpha * i * c_p c_q (0-based Majorana indices) to (i/4) c^T A c."""
    A[p, q] += 2.0 * alpha
    A[q, p] -= 2.0 * alpha


def ising_coupling(n: int, h: float) -> CouplingMatrix:
    """Transverse-field Ising chain H = -sum_j x_j x_{j+1} - h sum_j z_j.

    Majorana form: -i sum_j c_{2j} c_{2j+1} - i h sum_j c_{2j-1} c_{2j};
    bonds couple Majorana indices (2j, 2j+1) and fields (2j-1, 2j).
    """
    if n < 2:
        raise TooFewSitesError(f"chain needs n >= 2 sites, got n={n}")
    A = np.zeros((2 * n, 2 * n))
    for j in range(n - 1):
        _majorana_term(A, 2 * j + 1, 2 * j + 2, -1.0)
    for j in range(n):
        _majorana_term(A, 2 * j, 2 * j + 1, -h)
    return CouplingMatrix(A, metadata={"model": "ising", "n": n, "h": h, "constant": 0.0})


def xy_coupling(n: int, h: float) -> CouplingMatrix:
    """XY chain H = sum_j (x_j x_{j+1} + y_j y_{j+1}) + h sum_j z_j.

    The sign convention is taken verbatim (+ on both terms), so the ground
    state fills the negative-energy half of the open-chain hopping band.
    At h = 0 the single-particle energies are 4 cos(k pi / (n+1)); odd n
    therefore carries an exact zero mode and has no unique ground state.
    """
    if n < 2:
        raise TooFewSitesError(f"chain needs n >= 2 sites, got n={n}")
    A = np.zeros((2 * n, 2 * n))
    for j in range(n - 1):
        _majorana_term(A, 2 * j + 1, 2 * j + 2, 1.0)   # x x bond
        _majorana_term(A, 2 * j, 2 * j + 3, -1.0)      # y y bond
    for j in range(n):
        _majorana_term(A, 2 * j, 2 * j + 1, h)
    return CouplingMatrix(A, metadata={"model": "xy", "n": n, "h": h, "constant": 0.0})


def build(spec: ModelSpec) -> CouplingMatrix:
    """Dispatch a ModelSpec to the matching builder."""
    if spec.kind is ModelKind.ISING:
        return ising_coupling(spec.n, spec.h)
    return xy_coupling(spec.n, spec.h)
