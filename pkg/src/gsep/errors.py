"""Exception hierarchy.

Two families matter to callers (and to the CLI exit codes):

* ``ValidationError`` -- the input violates a precondition (non-unimodular
  matrix, rank zero, dependent basis, ...).  CLI exit code 2.
* ``TheoremViolation`` -- an internal consistency check that should hold for
  every valid input failed.  CLI exit code 1.
"""

from __future__ import annotations


class GsepError(Exception):
    """Base class for all errors raised by this package."""


class ArithmeticOverflowError(GsepError, OverflowError):
    """An intermediate integer left the signed 64-bit range."""


class ValidationError(GsepError, ValueError):
    """Input rejected by a precondition check."""

    def to_dict(self) -> dict:
        return {"type": type(self).__name__, "message": str(self)}


class InvalidArgumentError(ValidationError):
    pass


class ParseError(ValidationError):
    pass


class RankError(ValidationError):
    """Matrix is not of full row rank."""


class ZeroRankError(ValidationError):
    """Rank zero matroids are excluded."""


class NotABasisError(ValidationError):
    pass


class NotStandardFormError(ValidationError):
    pass


class MustSimplifyError(ValidationError):
    """Operation requires irredundant columns; run ``simplify`` first."""


class NeedsFacetsError(ValidationError):
    pass


class SigningInfeasibleError(ValidationError):
    pass


class InvalidCorrespondenceError(ValidationError):
    pass


class SizeLimitError(ValidationError):
    pass


class NotUnimodularError(ValidationError):
    """A transform is not in GL_r(Z)."""


class UnimodularityError(ValidationError):
    """Matrix fails a (weak or total) unimodularity test.

    ``witness`` holds the 0-based ``(rows, cols)`` of an offending square
    submatrix and ``determinant`` its determinant.
    """

    def __init__(self, message: str, witness=None, determinant=None):
        super().__init__(message)
        self.witness = witness
        self.determinant = determinant

    def to_dict(self) -> dict:
        d = super().to_dict()
        if self.witness is not None:
            rows, cols = self.witness
            d["witness"] = {
                "rows": [i + 1 for i in rows],
                "cols": [j + 1 for j in cols],
                "determinant": self.determinant,
            }
        return d


class TheoremViolation(GsepError, AssertionError):
    """A property guaranteed by theory did not hold."""


class InternalInconsistencyError(TheoremViolation):
    pass
