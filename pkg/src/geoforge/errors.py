"""Exception taxonomy shared across the package.

Domain errors signal violated mathematical preconditions; search and
precision errors signal exhausted configurable resources.  Everything
derives from GeoforgeError so callers can catch broadly.
"""


class GeoforgeError(Exception):
    """Base class for all package errors."""


class NotHyperbolic(GeoforgeError):
    """Operation requires a hyperbolic element (|trace| > 2)."""


class NotPrimitive(GeoforgeError):
    """Operation requires a primitive conjugacy class."""


class InvalidPoint(GeoforgeError):
    """Point is not in the open upper half-plane."""


class DegenerateAxes(GeoforgeError):
    """Two axes share an endpoint; impossible for distinct axes in a
    discrete free group, so this always indicates an internal error."""


class NotAStrand(GeoforgeError):
    """Arc too short to wind once around the cusp at this level."""


class InvalidLevels(GeoforgeError):
    """Horocycle levels violate the required strict ordering."""


class HypothesisViolated(GeoforgeError):
    """Inputs are outside the hypotheses of the underlying estimate."""


class TooFewStrands(GeoforgeError):
    """Multi-strand bound needs at least two strands."""


class Unsorted(GeoforgeError):
    """Winding numbers must be given in ascending order."""


class EpsilonOutOfRange(GeoforgeError):
    """Thick-part threshold requires 0 < eps <= 1/2."""


class NoSolutionBelowCap(GeoforgeError):
    """Certified integer search exceeded its configured cap."""

    def __init__(self, message, cap=None):
        super().__init__(message)
        self.cap = cap


class NotApplicable(GeoforgeError):
    """Formula undefined for this topological type (e.g. Bers bound on
    the thrice punctured sphere)."""


class NotHyperbolicType(GeoforgeError):
    """(g, n) is not a cusped hyperbolic surface type."""


class NoCusp(GeoforgeError):
    """Pants operation requires a cusp boundary entry."""


class LevelTooLarge(GeoforgeError):
    """Horocycle level exceeds the embedded range for the pants."""


class PrecisionExhausted(GeoforgeError):
    """A certified comparison stayed undecided up to the precision cap."""


class TrivialWord(GeoforgeError):
    """Word reduces to the identity."""


class InCyclicSubgroup(GeoforgeError):
    """Conjugator lies in the cyclic subgroup generated by the word."""


class ToleranceBreach(GeoforgeError):
    """A numeric predicate fell inside its tolerance band; retry at
    higher precision."""
