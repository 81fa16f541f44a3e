"""Plain-text matrix files.

Format: the first non-comment line holds the even dimension d; each of the
next d non-comment lines holds d whitespace-separated floating-point numbers
(scientific notation allowed, written at full round-trip precision).
Lines starting with ``#`` are comments and are skipped anywhere in the file.
"""

from pathlib import Path

import numpy as np

from .errors import MatrixFileError


def read_matrix(path) -> np.ndarray:
    """Parse a matrix file into a float ndarray."""
    lines = [ln for ln in Path(path).read_text().splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise MatrixFileError(f"{path}: empty file")
    try:
        d = int(lines[0].strip())
    except ValueError as exc:
        raise MatrixFileError(f"{path}: first line must be the integer dimension, got {lines[0]!r}") from exc
    if d <= 0 or d % 2 != 0:
        raise MatrixFileError(f"{path}: dimension must be a positive even integer, got {d}")
    if len(lines) < d + 1:
        raise MatrixFileError(f"{path}: expected {d} data rows, found {len(lines) - 1}")
    rows = []
    for k, line in enumerate(lines[1 : d + 1]):
        parts = line.split()
        if len(parts) != d:
            raise MatrixFileError(f"{path}: row {k + 1} has {len(parts)} entries, expected {d}")
        try:
            rows.append([float(p) for p in parts])
        except ValueError as exc:
            raise MatrixFileError(f"{path}: row {k + 1} holds a non-numeric entry") from exc
    return np.array(rows, dtype=float)


def write_matrix(path, matrix: np.ndarray, comments: tuple[str, ...] = ()) -> None:
    """Write a matrix file with 17-significant-digit entries."""
    m = np.asarray(matrix, dtype=float)
    out = [f"# {c}" for c in comments]
    out.append(str(m.shape[0]))
    for row in m:
        out.append(" ".join(f"{x:.17g}" for x in row))
    Path(path).write_text("\n".join(out) + "\n")
