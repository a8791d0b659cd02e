"""Error hierarchy shared by every package."""


class IsovError(Exception):
    """Base class for all errors raised by the engine."""


class InvalidObject(IsovError, ValueError):
    """Object parameters outside 0 <= k <= n+1."""


class NonCanonicalVertex(IsovError, ValueError):
    """Vertex not in canonical form for its object."""


class OrderViolation(IsovError):
    """A vertex table does not preserve the order."""


class IsovarianceViolation(IsovError):
    """A vertex table does not preserve isotropy exactly."""


class EquivarianceViolation(IsovError):
    """A vertex table does not commute with the involution."""


class IndexOutOfRange(IsovError, IndexError):
    """Generator index or level outside its legal range."""


class CompositionMismatch(IsovError, TypeError):
    """Maps are not composable."""


class NotEpi(IsovError, ValueError):
    """An epimorphism was required."""


class NotAdmissible(IsovError, ValueError):
    """Horn is not admissible."""


class NonMonoLeg(IsovError, ValueError):
    """Pushout leg along which we glue is not a monomorphism."""


class NonMono(IsovError, ValueError):
    """A monomorphism was required."""


class InvalidCospan(IsovError, ValueError):
    """Cospan legs do not commute."""


class NotASubobject(IsovError, ValueError):
    """Cell set is not closed under faces and swaps of its ambient."""


class NaturalityViolation(IsovError):
    """Assignment is not compatible with face or swap structure."""


class InvalidDocument(IsovError, ValueError):
    """Malformed interchange document."""


class InvalidPoint(IsovError, ValueError):
    """Barycentric coordinates that are negative or do not sum to one."""
