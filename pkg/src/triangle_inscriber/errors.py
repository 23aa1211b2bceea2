"""Exception hierarchy shared by the library and the CLI."""

from typing import Any


class InscriberError(Exception):
    """Base class for all triangle-inscriber errors."""


class DegenerateTriangleError(InscriberError, ValueError):
    """All vertices coincide: the input is not a point of the triangle space."""


class ToleranceError(InscriberError, ValueError):
    """A tolerance argument was not strictly positive."""


class InvalidParameterError(InscriberError, ValueError):
    """A curve constructor received parameters outside its domain."""


class EmbeddingError(InscriberError, ValueError):
    """Numerical validation rejected a curve as not embedded."""

    def __init__(self, message: str, report: Any = None):
        super().__init__(message)
        self.report = report


class DiagonalError(InscriberError, ValueError):
    """The three curve points of a parameter triple coincide."""


class NonC1CurveError(InscriberError, ValueError):
    """The operation needs a curve flagged C1."""


class FlatTargetError(InscriberError, ValueError):
    """The target triangle or simplex is flat."""


class ConfigError(InscriberError, ValueError):
    """A configuration value violates its invariant."""


class SpecParseError(InscriberError, ValueError):
    """A textual curve or triangle spec could not be parsed."""

    def __init__(self, message: str, text: str = "", position: int = 0):
        super().__init__(f"{message} (at position {position} in {text!r})")
        self.text = text
        self.position = position


class RegularityError(InscriberError):
    """Preimages stayed critical or unstable after all probe perturbations."""


class ContinuationError(InscriberError):
    """Path tracking stopped before reaching the end of the curve family."""

    def __init__(self, message: str, s: float, diagnostic: str):
        super().__init__(f"{message} (s={s:.6g}, diagnostic={diagnostic})")
        self.s = s
        self.diagnostic = diagnostic
