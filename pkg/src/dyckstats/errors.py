"""Exception types raised by the dyckstats library.

Input-validation errors subclass ValueError so callers can catch broadly.
InternalError subclasses are defensive: they flag broken invariants and
should never fire on valid inputs.
"""


class DyckstatsError(Exception):
    """Base class for all library errors."""


class InputError(DyckstatsError, ValueError):
    """Base class for errors caused by bad caller input."""


class InternalError(DyckstatsError, RuntimeError):
    """Base class for defensive checks that must never fire on valid input."""


class BadCharError(InputError):
    """Path text contains a character outside the step alphabet."""


class NonBalancedError(InputError):
    """Up/down step counts do not balance."""


class BelowAxisError(InputError):
    """Some prefix of the path dips below the x-axis."""


class EmptyResidueSetError(InputError):
    """A residue set must contain at least one residue class."""


class InvalidMError(InputError):
    """The modulus parameter is outside its documented range."""


class CapExceededError(InputError):
    """Requested size exceeds the configured exhaustive-enumeration cap."""


class IndexOutOfRangeError(InputError):
    """Combinatorial index (n, k) outside the defined triangle."""


class NonPositiveSizeError(InputError):
    """Tree constructors require a positive edge count."""


class NotPlantedError(InputError):
    """Operation requires a planted tree (root of degree exactly one)."""


class HeightTooLowError(InputError):
    """Path is too low to decompose along the requested cut lines."""


class NotReflectableError(InputError):
    """Only above-blocks and under-blocks can be reflected."""


class NonUnitDivisorError(InputError):
    """Series division needs a divisor with constant term +1 or -1."""


class NotInImageError(InternalError):
    """Inverse-map case analysis failed; input is not a valid image."""


class NonConvergenceError(InternalError):
    """Fixed-point iteration hit its cap without stabilising."""
