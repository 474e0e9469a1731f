"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class InfeasibleConfigurationError(ValueError):
    """A problem configuration violates a feasibility cap.

    ``bound_name`` and ``bound_value`` identify the cap that was exceeded so
    that callers (the CLI in particular) can report it verbatim.
    """

    def __init__(self, quantity, bound_name, bound_value):
        self.quantity = quantity
        self.bound_name = bound_name
        self.bound_value = bound_value
        super().__init__(f"{quantity} exceeds {bound_name} = {bound_value:.17g}")


class HypothesisViolationError(ValueError):
    """The density parameter is too large for an error bound to apply."""

    def __init__(self, constant, log_limit, log_delta):
        self.constant = constant
        self.log_limit = log_limit
        self.log_delta = log_delta
        super().__init__(
            f"delta exceeds {constant}: log(delta) = {log_delta:.17g} > "
            f"log({constant}) = {log_limit:.17g}"
        )
