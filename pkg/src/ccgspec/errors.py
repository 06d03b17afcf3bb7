"""Exception types shared across the package."""


class CcgError(Exception):
    """Base class for all package errors."""


class InvalidParams(CcgError):
    """Family or theorem parameters violate their constraints."""


class ParseError(CcgError):
    """A Cayley-table file or config file could not be parsed."""


class NotAGroup(CcgError):
    """A multiplication table violates a group axiom.

    Carries ``witness``: the offending element triple (or pair/element,
    depending on which axiom failed).
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class AbelianGroup(CcgError):
    """The commuting conjugacy class graph is undefined for abelian groups."""


class NotCompleteUnion(CcgError):
    """A graph component is not a clique.  ``witness`` is a missing edge."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SameVertex(CcgError):
    """Common neighbourhood of a vertex with itself was requested."""


class NoConvergence(CcgError):
    """The eigensolver hit its sweep cap.  ``residual`` is the remaining
    off-diagonal Frobenius norm."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class NonIntegralParameter(CcgError):
    """A derived theorem quantity is not an integer for these parameters."""


class MissingCase(CcgError):
    """A case label is required but was not supplied."""


class KOutOfRange(CcgError):
    """The k parameter lies outside [1, p]."""


class UnknownTheorem(CcgError):
    """No closed form is registered under the requested identifier."""


class HypothesisMismatch(CcgError):
    """A witness group does not satisfy the hypothesis of the theorem it
    was paired with."""


class ConfigError(CcgError):
    """A verification-suite config is malformed."""
