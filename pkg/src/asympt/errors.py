"""Exception hierarchy shared by all modules.

Two families matter to callers (and to the CLI exit codes):

* ``InputError`` -- the request itself is malformed (wrong lengths, bad
  degrees, mismatched series kinds).  Subclasses ``ValueError``.
* ``NumericalError`` -- the request is well formed but the computation
  hit a genuine numerical obstruction (singular Padé block, evaluation at
  a pole, breakdown of a recurrence).
"""

from __future__ import annotations


class AsymptError(Exception):
    """Base class for every error raised by this package."""


class InputError(AsymptError, ValueError):
    """Malformed input."""


class NumericalError(AsymptError, ArithmeticError):
    """A well-posed request that failed numerically."""


class KindMismatch(InputError):
    """Series expanded about different points were combined."""


class InsufficientCoefficients(InputError):
    """Not enough trusted coefficients for the requested construction."""


class TooShort(InputError):
    """A sequence is too short for the requested transform."""


class InconsistentDegrees(InputError):
    """Far-field leading power does not match the numerator/denominator degrees."""


class InconsistentAsymptotics(InputError):
    """No basis choice satisfies both limiting behaviours."""


class SingularSystem(NumericalError):
    """Linear system is (numerically) singular."""


class EvaluationAtPole(NumericalError):
    """Denominator vanishes at the evaluation point."""


class Breakdown(NumericalError):
    """A recurrence hit a zero pivot."""


class DegeneratePolynomial(NumericalError):
    """Polynomial is identically zero (no roots to report)."""


class NoSignChange(NumericalError):
    """Bracket does not contain a sign change."""


class TooFewPoints(TooShort):
    """Not enough data points for a fit."""


class ZeroCoefficientInWindow(InputError):
    """A coefficient used as a divisor is zero."""


class SingularDeterminant(SingularSystem):
    """A determinant used as a divisor vanishes."""


class EvaluationBreakdown(NumericalError):
    """An intermediate denominator underflowed during evaluation."""


class OutOfRange(InputError):
    """A parameter lies outside its admissible interval."""
