class HomodigraphError(Exception):
    """Base class for library errors."""


class InputError(HomodigraphError, ValueError):
    """An argument violates an operation's precondition."""


class ContractError(HomodigraphError):
    """Arc contraction would break the digraph invariants."""


class SpecParseError(InputError):
    """A family spec string could not be parsed."""
