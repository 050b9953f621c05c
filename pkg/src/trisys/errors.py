"""Exception hierarchy shared by all trisys modules."""


class TrisysError(Exception):
    """Base class for all library errors."""


class StructureError(TrisysError):
    """Malformed combinatorial data (bad edge, out-of-range vertex, duplicate)."""


class LinearityError(TrisysError):
    """An operation requiring a linear triple system received a non-linear one."""


class CapacityError(TrisysError):
    """Estimated work exceeds the configured exhaustive-search guard."""


class DegeneracyError(TrisysError):
    """Geometric degeneracy: coincident points, zero denominator, collinear triangle."""


class VerificationError(TrisysError):
    """A verification run found a violated invariant; message names the witness."""


class InternalInvariantError(TrisysError):
    """A must-never-fire consistency check fired; indicates a bug."""
