"""Exception taxonomy shared across the package."""


class LegdetError(Exception):
    """Base class for all package-specific errors."""


class ZeroInput(LegdetError, ValueError):
    """An argument that must be nonzero mod p was zero."""


class NonResidue(LegdetError, ValueError):
    """A square root mod p was requested for a quadratic non-residue."""


class CongruenceMismatch(LegdetError, ValueError):
    """A prime fails the congruence condition a construction requires."""


class SymmetryViolation(LegdetError, ValueError):
    """A coefficient tuple lacks the symmetry a factorization requires."""


class NotASquare(LegdetError, ArithmeticError):
    """A quantity that must be a perfect square (times a known factor) is not."""


class SingularCurve(LegdetError, ValueError):
    """The cubic has a repeated root mod p, so there is no elliptic curve."""


class DegenerateFamily(LegdetError, ValueError):
    """Curve parameters are globally degenerate (d = 0 or c^2 = 4d)."""


class NoRepresentation(LegdetError, ValueError):
    """p is outside the congruence class represented by the quadratic form."""


class NotAUnit(LegdetError, ArithmeticError):
    """Recovered coordinates fail the unit norm equation."""


class NotAPower(LegdetError, ArithmeticError):
    """A unit is not a power of the fundamental unit within the search bound."""


class SizeCapExceeded(LegdetError, ValueError):
    """A requested matrix exceeds the configured dimension cap."""
