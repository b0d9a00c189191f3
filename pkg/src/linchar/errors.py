"""Exception types shared across the package."""


class LincharError(Exception):
    """Base class for all package-specific errors."""


class UnsupportedRank(LincharError, ValueError):
    """An operation that needs explicit root coordinates was asked for rank > 3."""


class InexactDivision(LincharError, ArithmeticError):
    """A division that must be exact left a remainder; signals a bug upstream."""


class NotAdmissible(LincharError, ValueError):
    """The requested residue class is not admissible for the averaging construction."""


class SymmetryViolation(LincharError, ValueError):
    """A supplied polynomial fails the required symmetry g(t-h) = (-1)^l g(-t)."""


class NonConvergence(LincharError, RuntimeError):
    """Root iteration did not converge; partial results are attached.

    Attributes
    ----------
    partial : the best root set found so far (flagged not converged), or None.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class QTooSmall(LincharError, ValueError):
    """The modulus q is not in the safe quasi-polynomial regime q > m*h."""
