"""Exception types raised across the toolkit."""


class FgsError(Exception):
    """Base class for all toolkit errors."""


class OddDimensionError(FgsError):
    """Matrix dimension is not even (Majorana matrices pair two rows per mode)."""


class SkewSymmetryError(FgsError):
    """Input matrix is not skew-symmetric within tolerance."""


class ConvergenceError(FgsError):
    """An underlying orthogonal reduction or eigensolver did not converge."""


class DegenerateGroundStateError(FgsError):
    """Ground state is not unique: some quasiparticle energy sits below the gap tolerance.

    ``modes`` lists the offending block indices (in descending-energy order).
    """

    def __init__(self, message, modes=()):
        super().__init__(message)
        self.modes = tuple(modes)


class RangeError(FgsError):
    """A site range, sweep range, or index is out of bounds."""


class SpectrumOutOfRangeError(FgsError):
    """A correlation-matrix block value exceeds 1 beyond tolerance."""


class DimensionMismatchError(FgsError):
    """Two matrices that must share a dimension do not."""


class SingularInputError(FgsError):
    """The pair of states is orthogonal (first determinant below threshold)."""


class UnpairedSpectrumError(FgsError):
    """Eigenvalues failed to pair as +-i*nu within tolerance."""


class TooFewSitesError(FgsError):
    """Chain builders need at least two sites."""


class NotDivisibleByFourError(FgsError):
    """The mid-chain correlation sweep requires the site count divisible by 4."""


class InsufficientDataError(FgsError):
    """Too few points in the requested fit window."""


class NonPositiveValuesError(FgsError):
    """Log-domain fits need strictly positive values inside the window."""


class TooLargeError(FgsError):
    """Dense reference computations are capped at 7 modes."""


class InvalidLambdaError(FgsError):
    """Block occupation parameters must lie in [-1, 1]."""


class NonRealResultError(FgsError):
    """A quantity that must be real carries an imaginary residue above tolerance."""


class MatrixFileError(FgsError):
    """A matrix file failed to parse."""
