"""Exception types shared across the library."""


class EnrichfanError(Exception):
    """Base class for all errors raised by this library."""


class FormatError(EnrichfanError, ValueError):
    """Malformed textual or JSON input."""


class UnknownVertexError(EnrichfanError, KeyError):
    pass


class UnknownEdgeError(EnrichfanError, KeyError):
    pass


class UnknownLabelError(EnrichfanError, KeyError):
    pass


class DisconnectedGraphError(EnrichfanError, ValueError):
    pass


class NotBiconnectedError(EnrichfanError, ValueError):
    pass


class NotABondError(EnrichfanError, ValueError):
    """The requested vertex bipartition does not induce a minimal cut."""


class NonDisjointSidesError(EnrichfanError, ValueError):
    """Bond sum requested for bonds whose distinguished sides overlap."""


class GroundSetMismatchError(EnrichfanError, ValueError):
    """A preorder's ground set does not match the edge set it is paired with."""


class GuardExceededError(EnrichfanError, ValueError):
    """Input is larger than the configured enumeration guard."""


class NotStronglyConvexError(EnrichfanError, ValueError):
    """A projected cone contains a line and is not a cone of a fan."""
