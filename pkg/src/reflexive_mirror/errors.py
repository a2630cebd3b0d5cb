"""Exception types raised across the package."""


class ReflexiveMirrorError(Exception):
    """Base class for all errors raised by this package."""


class DegenerateInput(ReflexiveMirrorError, ValueError):
    """The input point set does not span a 3-dimensional affine space."""


class NotReflexive(ReflexiveMirrorError, ValueError):
    """An operation requiring a reflexive polytope got something else."""


class FaceNotOfPolytope(ReflexiveMirrorError, ValueError):
    pass


class InvalidInvariants(ReflexiveMirrorError, ValueError):
    """Invariants produce a negative or otherwise impossible Hodge number."""


class ZeroChernFunctional(ReflexiveMirrorError, ValueError):
    """The c2 pairing vanishes, so the lambda invariant is undefined."""


class ParseError(ReflexiveMirrorError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InternalTheoremViolation(ReflexiveMirrorError, RuntimeError):
    """A combinatorial identity or mirror relation that must hold did not."""
