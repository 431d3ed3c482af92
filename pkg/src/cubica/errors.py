"""Exception hierarchy shared by every cubica module."""


class CubicaError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidInput(CubicaError):
    """Malformed user input (bad JSON, unparsable scalar, wrong shape)."""


class ZeroLeadingCoefficient(CubicaError):
    """Cubic solve called with a vanishing leading coefficient."""


class CoincidentPoints(CubicaError):
    """Projectively equal points do not span a line."""


class SingularMap(CubicaError):
    """Projective maps must have a nonzero determinant."""


class DegenerateForm(CubicaError):
    """The form has a repeated linear factor, so its singular locus is a curve."""


class SingularCurve(CubicaError):
    """Operation requires a smooth curve."""


class ConvergenceFailure(CubicaError):
    """Numerical polishing did not reach the required residual."""


class SingularParameter(CubicaError):
    """Hesse parameter with k**3 == 1, or k infinite."""


class NotAFlex(CubicaError):
    """Point fails the triple tangency test."""


class SingularAtFlex(CubicaError):
    """The gradient vanishes at the supplied point."""


class ZeroScale(CubicaError):
    """Rescaling factor must be nonzero."""


class NonFlexBase(CubicaError):
    """Group-law operation requires a flex base point."""


class DegenerateLattice(CubicaError):
    """Lattice generators are linearly dependent over the reals."""


class NumericalSingularity(CubicaError):
    """A derived curve came out singular to working precision."""


class ComplexCoefficients(CubicaError):
    """Real classification requires real coefficients."""


class OneComponent(CubicaError):
    """Cross-ratio is defined only for two-component real loci."""


class InvalidCanvas(CubicaError):
    """Render canvas smaller than the supported minimum."""
