"""Exception types shared across the package."""


class FuzzyGraphError(Exception):
    """Base class for every error raised by this package."""


# --- graph construction ---------------------------------------------------

class EmptyGraphError(FuzzyGraphError):
    """Graph has no vertices."""


class ZeroSigmaVertexError(FuzzyGraphError):
    """A vertex was given membership 0; zero membership means 'not a vertex'."""


class DuplicateVertexError(FuzzyGraphError):
    """The same vertex id was listed twice."""


class DuplicateEdgeError(FuzzyGraphError):
    """The same unordered vertex pair was listed twice."""


class SelfLoopError(FuzzyGraphError):
    """An edge joins a vertex to itself; loops are excluded."""


class UnknownEndpointError(FuzzyGraphError):
    """An edge endpoint is not a listed vertex."""


class MembershipBoundError(FuzzyGraphError):
    """An edge membership exceeds the minimum of its endpoint memberships."""


class ValueRangeError(FuzzyGraphError):
    """A membership value lies outside [0, 1]."""


class ReservedCharacterError(FuzzyGraphError):
    """A vertex id contains '~', which is reserved for product-vertex naming."""


# --- selections and operations --------------------------------------------

class EmptySelectionError(FuzzyGraphError):
    """A vertex subset argument was empty."""


class UnknownVertexError(FuzzyGraphError):
    """A selected vertex does not exist in the host graph."""


class VertexCollisionError(FuzzyGraphError):
    """Union/join operands share vertex ids."""


class TooLargeError(FuzzyGraphError):
    """Input exceeds the guard for an exhaustive algorithm."""


class BadParameterError(FuzzyGraphError):
    """A generator or operation parameter is invalid."""


# --- audit -----------------------------------------------------------------

class BadProfileError(FuzzyGraphError):
    """A sampling profile is malformed."""


class UnknownPropertyError(FuzzyGraphError):
    """Property id is not in the audit catalog."""


class ProfileMismatchError(FuzzyGraphError):
    """The given profile does not match the property's hypothesis."""


class UnknownClaimError(FuzzyGraphError):
    """Claim id is not in the counterexample-search catalog."""


# --- file format ------------------------------------------------------------

class DocumentSyntaxError(FuzzyGraphError):
    """A graph document is not well-formed."""
