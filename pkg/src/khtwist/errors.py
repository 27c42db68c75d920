"""Exception types shared across the package."""


class KhtwistError(Exception):
    """Base class for all errors raised by khtwist."""


class MalformedRecord(KhtwistError):
    """A PD-code record has the wrong shape or an unparsable token."""


class BadArcMultiplicity(KhtwistError):
    """An arc label is not used exactly twice, or labels are not 1..2n."""


class NonPlanar(KhtwistError):
    """The rotation system does not trace a sphere embedding (Euler check)."""


class CapExceeded(KhtwistError):
    """A computation was requested above the configured crossing cap."""


class InternalInconsistency(KhtwistError):
    """An internal self-check failed (e.g. the differential does not square to zero)."""


class DisconnectedGraph(KhtwistError):
    """Cycle rank was requested for a disconnected graph."""

    def __init__(self, component_count: int):
        self.component_count = component_count
        super().__init__(f"graph has {component_count} components; cycle rank needs a connected graph")


class PreconditionViolated(KhtwistError):
    """Input does not satisfy a documented precondition (e.g. not reduced alternating)."""


class NotAKnot(KhtwistError):
    """A knot-only check was invoked on a multi-component link."""
