"""Exception hierarchy.

Every error raised by the library derives from :class:`HeckeError`.  The CLI
maps the families below onto its exit codes.
"""


class HeckeError(Exception):
    """Base class for all library errors."""


class InputError(HeckeError):
    """Bad user input: malformed parameters, wrong fields, non-integral data."""


class NonPrime(InputError):
    pass


class Reducible(InputError):
    pass


class DegreeMismatch(InputError):
    pass


class FieldMismatch(InputError):
    pass


class DivisionByZero(InputError, ZeroDivisionError):
    pass


class NotIntegral(InputError):
    pass


class NotOrdinary(InputError):
    pass


class InconsistentParams(InputError):
    pass


class BadParams(InputError):
    pass


class NotInvertible(InputError):
    pass


class RelationViolated(InputError):
    def __init__(self, relation: str):
        super().__init__(f"defining relation violated: {relation}")
        self.relation = relation


class NotScalar(HeckeError):
    def __init__(self, element: str):
        super().__init__(f"central element {element} does not act by a scalar")
        self.element = element


class ZeroVector(InputError):
    pass


class Falsification(HeckeError):
    """A computation contradicts a claim of the classification."""


class NoCaseMatched(Falsification):
    pass


class IdentifyFailed(Falsification):
    pass


class AmbiguousMatch(Falsification):
    pass


class TooLarge(HeckeError):
    """An exhaustive enumeration would exceed its hard bound."""
