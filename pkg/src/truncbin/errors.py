"""Exception types shared across the toolkit.

The CLI maps these onto its exit-code contract, so library code should
raise the most specific class that applies.
"""


class DomainError(ValueError):
    """An argument lies outside the supported domain of an operation."""


class PreconditionError(ValueError):
    """A documented precondition of an operation does not hold."""


class InconsistentCaseError(PreconditionError):
    """The exponent divides two or more of the coprime variables.

    A common factor in two of the three variables forces the same factor
    into the third, contradicting coprimality, so the input is rejected
    rather than classified.
    """


class ScanBudgetError(RuntimeError):
    """A residue scan would touch more grid cells than the configured cap."""

    def __init__(self, required_cells: int, budget: int):
        self.required_cells = required_cells
        self.budget = budget
        super().__init__(
            f"scan needs {required_cells} cells but the budget is {budget}; "
            f"raise the cap to at least {required_cells} to run it"
        )
