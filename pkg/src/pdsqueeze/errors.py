"""Exception types shared across the package."""


class TruncationError(RuntimeError):
    """A Fock-space object lost more probability past the cutoff than allowed."""

    def __init__(self, message: str, leakage: float):
        super().__init__(f"{message} (measured leakage {leakage:.3e})")
        self.leakage = leakage


class InternalConsistencyError(RuntimeError):
    """A closed form produced a residue that should have cancelled."""


class UnsupportedParametersError(ValueError):
    """The requested parameter combination has no implemented closed form."""
