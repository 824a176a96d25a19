"""Exception types shared across the package."""


class EgyfracError(Exception):
    """Base class for egyfrac-specific failures."""


class DigitBudgetError(EgyfracError):
    """Computing the next sequence term would exceed the digit budget.

    Raised *before* the offending multiplication, so callers can catch it
    and retry with a larger budget without having burned the memory.
    """

    def __init__(self, seed, index, estimated_digits, budget):
        self.seed = seed
        self.index = index
        self.estimated_digits = estimated_digits
        self.budget = budget
        super().__init__(
            f"term {index} of the sequence seeded at {seed} needs about "
            f"{estimated_digits} decimal digits, over the budget of {budget}; "
            f"raise the budget to proceed"
        )


class RefinementLimitError(EgyfracError):
    """Comparison refinement hit its depth guard without separating.

    Distinct canonical score expressions always separate at the first
    refinement step, so seeing this error signals an implementation bug,
    not a hard input.
    """


class DecompositionError(EgyfracError, ValueError):
    """A claimed decomposition violates one of its defining invariants."""


class MassMismatchError(DecompositionError):
    """Unit-fraction masses do not add up to the claimed total."""


class MonotonicityError(DecompositionError):
    """A term ordering constraint (nondecreasing/nonincreasing) is violated."""
