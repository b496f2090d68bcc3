"""Exception types shared across the package."""


class EucalcError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(EucalcError):
    """Operands live in ambient spaces of different dimensions."""


class NonCompactSupport(EucalcError):
    """Euler integration requested for a function with unbounded support."""


class ImproperConvolution(EucalcError):
    """Convolution of supports on which addition is not proper."""


class DegenerateMap(EucalcError):
    """Affine pushforward with zero linear coefficient."""


class NonIntegrable(EucalcError):
    """Kernel antiderivative undefined at an infinity the pairing needs."""


class EmptyWindow(EucalcError):
    """Window composition produced an empty interval."""


class UnsupportedGenerator(EucalcError):
    """Operation restricted to a generator class it was not given."""


class NotConeConstructible(EucalcError):
    """Input fails the cone-constructibility precondition."""


class ZeroDirection(EucalcError):
    """A nonzero direction form is required."""


class MonotonicityUnknown(EucalcError):
    """Kernel carries no strict monotonicity tag on the active window."""
