"""Exception types raised by the engine."""


class JMHError(Exception):
    """Base class for all errors raised by this package."""


class ZeroDenominator(JMHError):
    """A denominator factor became ``1 - 1`` under substitution.

    The caller should extract a residue instead of substituting.
    """


class NonMonomialPole(JMHError):
    """A pole location is not a Laurent monomial in the remaining variables."""


class InversionDepthExceeded(JMHError):
    """Series inversion was asked for more terms than the pole order allows."""


class UnexpectedVariable(JMHError):
    """A polynomial still involves a variable that should have been eliminated."""


class NonPolynomialResult(JMHError):
    """Binomial denominators survived where a Laurent polynomial was expected."""

    def __init__(self, message, factors=()):
        super().__init__(message)
        self.factors = tuple(factors)


class MethodDisagreement(JMHError):
    """The two independent evaluators produced different polynomials."""


class InvariantViolation(JMHError):
    """An internal consistency check failed; indicates a bug, not bad input."""
