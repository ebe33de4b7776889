from typing import Optional, Tuple


class ExclugraphError(Exception):
    """Base class of every error raised by the toolkit."""


class ParameterError(ExclugraphError, ValueError):
    """Inadmissible input: family parameters, weights, distributions, lengths."""


class CapacityError(ParameterError):
    """Input exceeds a size cap (vertices, SDP size, automorphism count)."""


class ParseError(ParameterError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class StructuralError(ParameterError):
    """The graph does not satisfy the hypothesis of the requested result."""


class PreconditionError(ParameterError):
    """Operation called on an input outside its domain (e.g. witness for an inside point)."""


class NumericalError(ExclugraphError, RuntimeError):
    def __init__(self, message: str, bracket: Optional[Tuple[float, float]] = None):
        if bracket is not None:
            message = f"{message}; best bracket [dual={bracket[0]:.12g}, primal={bracket[1]:.12g}]"
        super().__init__(message)
        self.bracket = bracket


class WitnessError(NumericalError):
    """No candidate witness for an outside point passed self-verification."""
