class CPRelError(Exception):
    """Base class for all errors raised by this package."""


class ObjectMismatch(CPRelError, ValueError):
    """Two morphisms were combined whose objects do not line up."""


class ShapeMismatch(CPRelError, ValueError):
    """A relation does not have the (A x A) -> (B x B) shape required."""


class NotPositive(CPRelError, ValueError):
    pass


class NotCompletelyPositive(CPRelError, ValueError):
    pass


class MalformedGraph(CPRelError, ValueError):
    pass


class BoundExceeded(CPRelError, ValueError):
    """A brute-force enumeration was asked to go past its configured bound."""
