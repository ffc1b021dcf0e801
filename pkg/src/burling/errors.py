"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or out-of-contract caller input (files, CLI arguments, raw data)."""


class ContractError(RuntimeError):
    """An internal invariant or operation precondition failed.

    Raised when library code detects a state the algorithms guarantee cannot
    occur on valid inputs, or when a caller violates a documented precondition
    of a structural operation (for example joining two Burling sets that do
    not overlap the way the join requires).
    """
