"""Exception types shared across the package."""


class UsageError(ValueError):
    """Bad arguments: mismatched contexts, out-of-range indices, wrong parity."""


class DomainError(ValueError):
    """An operation is undefined for its input (e.g. inverting a binomial)."""


class DiagramError(ValueError):
    """A Lagrangian diagram failed structural validation."""


class DGAError(RuntimeError):
    """A computed differential violates the DGA axioms."""


class ResourceGuardError(UsageError):
    """Refused to run a brute-force computation above the size guard."""
