"""Exception types shared across the package."""


class DomainError(ValueError):
    """Parameters lie outside an operation's stated region of validity."""

    def __init__(self, message, violated=()):
        super().__init__(message)
        self.violated = tuple(violated)


class PoleError(DomainError):
    """A Gamma-type function was evaluated at a non-positive integer."""

    def __init__(self, location, context=""):
        self.location = complex(location)
        self.context = context
        where = f" in {context}" if context else ""
        super().__init__(f"pole at {self.location}{where}")


class IntegrandDomainError(DomainError):
    """An integrand left the domain where its real power is defined."""


class DivergentSeries(DomainError):
    """The requested series diverges for the given argument."""


class NoConvergence(RuntimeError):
    """An iterative scheme exhausted its budget without converging."""


class FamilyMismatch(ValueError):
    """Circular and hyperbolic spectral forms were combined."""


class UnknownEntry(KeyError):
    """No catalog entry with the requested id."""

    def __init__(self, entry_id):
        super().__init__(entry_id)
        self.entry_id = entry_id

    def __str__(self):
        return f"unknown catalog entry: {self.entry_id!r}"
