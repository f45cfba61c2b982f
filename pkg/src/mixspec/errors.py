"""Exception hierarchy shared by every module."""


class MixspecError(Exception):
    """Base class for all errors raised by mixspec."""


class DomainError(MixspecError, ValueError):
    """An argument lies outside the admissible range of an operation."""


class StructuralError(MixspecError, ValueError):
    """A signed measure violates the structural condition on its parts."""


class ResolutionError(DomainError):
    """The lattice spacing is too coarse for the requested domain."""


class ShapeError(MixspecError, ValueError):
    """A node vector does not match the grid it is paired with."""


class PreconditionError(MixspecError, ValueError):
    """An experiment was asked to run outside the hypotheses it checks."""


class NumericalError(MixspecError, ArithmeticError):
    """A numerical safeguard tripped (indefinite matrix, large residual)."""


class DefinitenessError(NumericalError):
    """Cholesky factorization of the right-hand matrix broke down."""


class ConfigError(MixspecError, ValueError):
    """Invalid run configuration, located by a JSON pointer."""

    def __init__(self, pointer: str, message: str):
        self.pointer = pointer or "/"
        super().__init__(f"{self.pointer}: {message}")
