"""Exception and warning types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the physically meaningful domain."""


class UnphysicalStateError(DomainError):
    """A correlation matrix violates the uncertainty bound."""


class InfeasibleConstraintError(ValueError):
    """An energy/photon budget cannot be met by any admissible input."""


class UnsupportedParameterError(ValueError):
    """Parameters outside the range covered by the closed-form expressions."""


class SpectrumError(ValueError):
    """An eigenvalue spectrum that should be a probability vector is not."""


class ConvergenceError(RuntimeError):
    """An iterative optimizer exhausted its iteration budget."""


class TruncationWarning(UserWarning):
    """Probability mass escaping a Fock-space truncation is non-negligible."""
