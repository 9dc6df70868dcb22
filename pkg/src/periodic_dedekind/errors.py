"""Exception types shared across the package."""


class CapacityError(ValueError):
    """A requested cyclotomic order or Bernoulli index exceeds the configured cap."""


class DomainError(ValueError):
    """Arguments violate a precondition of the definition being evaluated."""


class PoleError(ArithmeticError):
    """Evaluation requested at a pole of an analytic function."""


class AccuracyError(ArithmeticError):
    """A truncated series could not reach its tail target within budget."""

    def __init__(self, message, achieved_tail=float("inf")):
        super().__init__(message)
        self.achieved_tail = achieved_tail


class ParseError(ValueError):
    """Malformed literal or sequence spec."""


class UnknownIdentityError(LookupError):
    """No identity is registered under the requested id."""
