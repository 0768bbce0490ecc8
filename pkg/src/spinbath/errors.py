"""Exception types shared across the package."""


class SpinbathError(Exception):
    """Base class for all package-specific errors."""


class DegenerateMode(SpinbathError):
    """A mode has zero single-particle energy, so its mixing angle is undefined."""


class NumericalNegativity(SpinbathError):
    """A quantity that is nonnegative by construction came out negative beyond
    floating-point slack; indicates an implementation bug, not a data condition."""


class SingularField(SpinbathError):
    """A formula with a 1/(lambda - 1) denominator was evaluated at lambda = 1."""


class ZeroAlpha(SpinbathError):
    """A coupling-shift alpha is zero where a formula needs its sign or inverse."""


class WrongRegime(SpinbathError):
    """Arguments do not satisfy the sign pattern the requested regime assumes."""


class NotHermitian(SpinbathError):
    """Input matrix is not Hermitian within tolerance."""


class NoConvergence(SpinbathError):
    """Iterative eigen-solver hit its rotation cap before converging."""


class NotDensityMatrix(SpinbathError):
    """Matrix fails a density-matrix precondition (trace, positivity)."""
