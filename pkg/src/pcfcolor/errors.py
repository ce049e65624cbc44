"""Exception hierarchy shared by all engines and the CLI."""


class PcfError(Exception):
    """Base class for all package errors."""


class InputError(PcfError, ValueError):
    """Malformed input: unknown vertex, bad file, out-of-range color."""


class StructureError(PcfError):
    """The graph lacks a structural property an operation requires."""


class PreconditionError(PcfError):
    """An engine was invoked outside the regime it handles."""


class ContractError(PcfError):
    """An extension precondition or an operation contract was violated."""


class EngineFailure(PcfError):
    """An engine exhausted every fallback without producing a coloring.

    Carries whatever trace the engine collected so it can be filed as a bug
    or counterexample report.
    """

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace


class BudgetExceeded(PcfError):
    """An exact search ran out of its node or time budget."""
