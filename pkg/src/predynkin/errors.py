"""Exception types shared across the package."""


class PreDynkinError(Exception):
    """Base class for all errors raised by :mod:`predynkin`."""


class GroundMismatch(PreDynkinError, ValueError):
    """Objects built on different ground sets were combined."""


class InvalidEvent(PreDynkinError, ValueError):
    """An event mask does not fit the ground set."""


class MembershipError(PreDynkinError, ValueError):
    """An event is (or is not) a member of a set system, contrary to the
    operation's precondition."""


class PiSystemError(PreDynkinError, ValueError):
    """A set system that must be a pi-system is not closed under
    intersection."""


class SizeLimitExceeded(PreDynkinError, RuntimeError):
    """A computation would exceed a configured size cap."""


class NotExtendable(PreDynkinError, ValueError):
    """The probability (or partial expectation) admits no extension to
    the full power set."""


class ConditioningError(PreDynkinError, ValueError):
    """The conditioning event is outside the domain or has zero mass."""


class EmptyPolytope(PreDynkinError, ValueError):
    """A credal polytope has no feasible point."""


class InfeasibleAnchor(PreDynkinError, ValueError):
    """The anchor point handed to :func:`affine_directions` is not feasible."""


class InvalidMeasure(PreDynkinError, ValueError):
    """A measure, distortion or expectation is structurally malformed."""
