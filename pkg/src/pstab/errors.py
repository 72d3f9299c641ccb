"""Exception hierarchy shared by the whole package.

Certification failures are structured: each carries enough data to name the
exact hypothesis that failed, so the CLI can map them onto stable exit codes
(1 = hypothesis refuted, 2 = inconclusive, 3 = bad input).
"""


class MatrixArgumentError(ValueError):
    """Malformed argument: size mismatch, out-of-range index, empty set."""


class SingularMatrixError(ZeroDivisionError):
    """An exact inverse was requested for a matrix with det = 0."""

    def __init__(self, message="matrix is singular (det = 0)"):
        super().__init__(message)


class CertificationError(Exception):
    """Base class for structured certification failures."""

    kind = "error"


class HypothesisError(CertificationError):
    """The input matrix fails one of the theorem's hypotheses.

    ``witness`` is whatever object the failing classifier produced
    (a minor witness, an order-sum witness, or None for a missing nest).
    """

    def __init__(self, kind, message, witness=None):
        super().__init__(message)
        self.kind = kind
        self.witness = witness


class StabilizerInconclusiveError(CertificationError):
    """The diagonal-stabilizer search hit its shrink cap.

    Not a refutation: the searched-for matrix exists whenever the block
    traces are positive, but the geometric search gave up at ``level``.
    """

    kind = "inconclusive"

    def __init__(self, level, last_violation, message=None):
        super().__init__(
            message or f"stabilizer search exhausted at level {level}"
        )
        self.level = level
        self.last_violation = last_violation


class NumericToleranceError(CertificationError):
    """A floating-point cross-check fell outside its stated tolerance."""

    kind = "numeric"


class InternalInconsistencyError(CertificationError):
    """An exactly-provable identity failed; indicates a bug upstream."""

    kind = "internal"
