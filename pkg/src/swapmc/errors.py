"""Exception types shared across the package."""


class SwapMCError(Exception):
    """Base class for all swapmc errors."""


class FormatError(SwapMCError, ValueError):
    """Malformed degree-sequence or realization input."""


class InfeasibleSequenceError(SwapMCError, ValueError):
    """No simple realization exists for the requested degrees/forbidden set."""


class IllegalMoveError(SwapMCError, ValueError):
    """A swap/switch move whose preconditions do not hold in the given state."""


class BudgetExceededError(SwapMCError, RuntimeError):
    """An exhaustive routine was asked to exceed its documented size budget."""


class RepairError(SwapMCError, RuntimeError):
    """No eligible switch exists while repairing an auxiliary matrix.

    Reaching this is evidence that the instance violates the rapid-mixing
    degree-spread condition; it is reported, never silently patched.
    """
