"""Exception types shared across the library.

Exit-code mapping for the CLI: everything deriving from
:class:`PreconditionError` is a precondition/covering violation (exit 3);
plain ``ValueError``/``KeyError`` in config handling is a usage error (exit 2).
"""

from __future__ import annotations


class GeometricPhaseError(Exception):
    """Base class for all library errors."""


class DimensionMismatchError(GeometricPhaseError):
    """Two states (or a state and an operator) live in different dimensions."""


class PreconditionError(GeometricPhaseError):
    """A documented precondition of an operation does not hold."""


class OrthogonalStatesError(PreconditionError):
    """A phase or geodesic is requested between (nearly) orthogonal states.

    ``overlap`` carries the offending overlap magnitude so callers can decide
    whether to refine, switch covering, or give up.
    """

    def __init__(self, message: str, overlap: float | None = None):
        super().__init__(message)
        self.overlap = overlap


class CoveringViolationError(OrthogonalStatesError):
    """A state lies outside the covering of the projection state.

    ``which`` names the offending endpoint/sample (e.g. ``"a"``, ``"b"``,
    ``"sample 17"``).
    """

    def __init__(self, message: str, which: str, overlap: float | None = None):
        super().__init__(message, overlap)
        self.which = which


class RefinementNeededError(PreconditionError):
    """Discretization too coarse for an unambiguous phase increment."""


class StepSizeError(PreconditionError):
    """Integrator norm drift exceeded tolerance; reduce the time step."""


class WindingUndefinedError(PreconditionError):
    """The overlap trace crosses zero, so the winding class is undefined."""


class NoCrossingError(PreconditionError):
    """No orthogonality crossing found in the analyzed window."""


class MultipleCrossingsError(PreconditionError):
    """More than one orthogonality crossing in the window; split it."""


class PhaseUnidentifiableError(PreconditionError):
    """Fringe visibility too low to extract a phase."""


class ReferenceSearchError(GeometricPhaseError):
    """Random search for a shared reference state exhausted its trials."""
