"""Exception hierarchy shared across the package.

Three branches matter to callers (and to the CLI's exit codes):
input/validation problems, violated mathematical preconditions, and
exhausted computation budgets.
"""

from __future__ import annotations


class MatroidworksError(Exception):
    """Base class for every error raised by this package."""


class InputError(MatroidworksError):
    """Malformed or axiom-violating input data."""


class PreconditionError(MatroidworksError):
    """A documented mathematical precondition does not hold."""


class BudgetError(MatroidworksError):
    """A configured computation budget was exhausted before completion."""


class EmptyFamily(InputError):
    pass


class UnequalBasisSizes(InputError):
    pass


class ExchangeAxiomViolation(InputError):
    """Carries a witness: bases A, B and x in A \\ B with no valid exchange."""

    def __init__(self, a, b, x):
        self.witness = (a, b, x)
        super().__init__(
            f"no y in B with (A - {{{x}}}) + {{y}} a basis for A={sorted(a)}, B={sorted(b)}"
        )


class LoopPresent(PreconditionError):
    pass


class NonPrimeCharacteristic(PreconditionError):
    pass


class RingMismatch(PreconditionError):
    pass


class NotSymmetric(PreconditionError):
    pass


class NonzeroRemainder(PreconditionError):
    pass


class WrongDegree(PreconditionError):
    pass


class DegreeBudgetExceeded(BudgetError):
    pass


class SearchBudgetExceeded(BudgetError):
    pass
