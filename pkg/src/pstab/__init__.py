"""Exact minor-positivity classification and positive-stability certificates.

The public surface: exact matrices and minors (:mod:`pstab.exactmat`),
compound and exterior products (:mod:`pstab.compound`), matrix-class tests
(:mod:`pstab.classify`), Q^2 chain search (:mod:`pstab.nests`), the
certification pipeline (:mod:`pstab.stabilize`) and numeric spectra
(:mod:`pstab.spectra`).
"""

from .exactmat import (
    ExactMatrix,
    Rational,
    as_rational,
    det,
    minor,
    principal_submatrix,
    inverse,
    trace,
    abs_matrix,
    lex_rank,
    lex_unrank,
)
from .compound import (
    CompoundMatrix,
    GeneralizedCompound,
    compound,
    compound_block,
    diag_generalized_compound,
    exterior_product,
    generalized_compound,
    wedge_vectors,
)
from .classify import ClassReport, classify_full, is_p, is_q, is_p2, is_q2
from .nests import NestCertificate, find_q2_nest, find_positive_nest, verify_nest
from .stabilize import (
    StabilityCertificate,
    Stabilizer,
    TraceLedger,
    block_traces,
    build_B,
    build_stabilizer,
    certify_stability,
    homotopy_certificate,
    schur_complement,
    sylvester_check,
)
from .spectra import Spectrum, eigenvalues, is_positively_stable, wedge_check

__version__ = "0.1.0"

__all__ = [
    "ExactMatrix",
    "Rational",
    "as_rational",
    "det",
    "minor",
    "principal_submatrix",
    "inverse",
    "trace",
    "abs_matrix",
    "lex_rank",
    "lex_unrank",
    "CompoundMatrix",
    "GeneralizedCompound",
    "compound",
    "compound_block",
    "diag_generalized_compound",
    "exterior_product",
    "generalized_compound",
    "wedge_vectors",
    "ClassReport",
    "classify_full",
    "is_p",
    "is_q",
    "is_p2",
    "is_q2",
    "NestCertificate",
    "find_q2_nest",
    "find_positive_nest",
    "verify_nest",
    "StabilityCertificate",
    "Stabilizer",
    "TraceLedger",
    "block_traces",
    "build_B",
    "build_stabilizer",
    "certify_stability",
    "homotopy_certificate",
    "schur_complement",
    "sylvester_check",
    "Spectrum",
    "eigenvalues",
    "is_positively_stable",
    "wedge_check",
    "__version__",
]
