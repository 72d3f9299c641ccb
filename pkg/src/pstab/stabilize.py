"""Schur complements, the inverse-permutation transform, the constructive
diagonal stabilizer, and the top-level positive-stability certification.

The pipeline: a P-matrix that is Q^2 and carries a maximal Q^2 chain is
transformed (via the chain's permutation and exact inversion) into a matrix
B whose compound leading blocks all have positive squared traces.  A
strictly decreasing positive diagonal D = diag(1, e_2, ..., e_n) is then
searched for such that every trace Tr(D_k^(j) B^(j) D_m^(j) B^(j)) is
positive; that ledger certifies, with no sampling, that (tI + (1-t)D)B
stays Q^2 along the whole homotopy t in [0,1], which pins the spectrum in
the open right half-plane.

Exact and numeric content are kept separate: the ledger, block traces and
class verdicts are rational arithmetic; eigenvalue checks are explicitly
tolerance-carrying floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import spectra
from .classify import ClassReport, classify_full, is_p, is_q2
from .compound import compound, compound_block, diag_generalized_compound
from .errors import (
    HypothesisError,
    InternalInconsistencyError,
    MatrixArgumentError,
    SingularMatrixError,
    StabilizerInconclusiveError,
    NumericToleranceError,
)
from .exactmat import (
    ExactMatrix,
    as_rational,
    det,
    minor,
    principal_submatrix,
    inverse,
    trace,
)
from .nests import NestCertificate, NestEvidence, verify_nest

DEFAULT_MAX_SHRINK = 64


# -- Schur complements and Sylvester's identity -----------------------------


def schur_complement(m: ExactMatrix, k: int) -> ExactMatrix:
    """Schur complement of the leading k-by-k block:
    A22 - A21 * A11^{-1} * A12, computed exactly."""
    n = m.n
    if not (1 <= k < n):
        raise MatrixArgumentError(f"block size k={k} out of range [1, {n - 1}]")
    head = tuple(range(1, k + 1))
    tail = tuple(range(k + 1, n + 1))
    a11 = principal_submatrix(m, head)
    if det(a11) == 0:
        raise SingularMatrixError(f"leading {k}x{k} block is singular")
    a11_inv = inverse(a11)
    rows12 = [[m.rows[i - 1][j - 1] for j in tail] for i in head]
    rows21 = [[m.rows[i - 1][j - 1] for j in head] for i in tail]
    a22 = [[m.rows[i - 1][j - 1] for j in tail] for i in tail]
    # a21 (n-k x k) * a11_inv (k x k) * a12 (k x n-k), done with plain lists
    # since the blocks are rectangular.
    left = [
        [
            sum(rows21[r][t] * a11_inv.rows[t][c] for t in range(k))
            for c in range(k)
        ]
        for r in range(n - k)
    ]
    correction = [
        [
            sum(left[r][t] * rows12[t][c] for t in range(k))
            for c in range(n - k)
        ]
        for r in range(n - k)
    ]
    return ExactMatrix(
        [
            [a22[r][c] - correction[r][c] for c in range(n - k)]
            for r in range(n - k)
        ]
    )


def sylvester_check(m: ExactMatrix, pivot_rows, pivot_cols, p: int):
    """Verify Sylvester's determinant identity for the given pivot sets.

    Builds the matrix of bordered minors b_lr = A(pivot_rows, l; pivot_cols, r)
    over the complement indices and checks, for every pair of p-subsets,

        B(l_1..l_p; r_1..r_p) = A(pr; pc)^(p-1) * A(pr, l_1..l_p; pc, r_1..r_p)

    with every index set taken in increasing order.  Returns None when the
    identity holds everywhere, otherwise the first violating
    (row subset, col subset, lhs, rhs) tuple.
    """
    import itertools

    n = m.n
    pivot_rows = tuple(sorted(pivot_rows))
    pivot_cols = tuple(sorted(pivot_cols))
    k = len(pivot_rows)
    if len(pivot_cols) != k:
        raise MatrixArgumentError("pivot row and column sets must have equal size")
    if not (0 <= p <= n - k):
        raise MatrixArgumentError(f"subset size p={p} out of range [0, {n - k}]")
    free_rows = [i for i in range(1, n + 1) if i not in pivot_rows]
    free_cols = [j for j in range(1, n + 1) if j not in pivot_cols]

    def bordered(extra_rows, extra_cols):
        rows = tuple(sorted(pivot_rows + tuple(extra_rows)))
        cols = tuple(sorted(pivot_cols + tuple(extra_cols)))
        return minor(m, rows, cols)

    b = ExactMatrix(
        [[bordered((l,), (r,)) for r in free_cols] for l in free_rows]
    ) if free_rows else None
    pivot_minor = minor(m, pivot_rows, pivot_cols) if k else Fraction(1)

    if p == 0:
        return None
    row_pos = {v: i + 1 for i, v in enumerate(free_rows)}
    col_pos = {v: i + 1 for i, v in enumerate(free_cols)}
    for lset in itertools.combinations(free_rows, p):
        for rset in itertools.combinations(free_cols, p):
            lhs = minor(
                b,
                tuple(row_pos[v] for v in lset),
                tuple(col_pos[v] for v in rset),
            )
            rhs = pivot_minor ** (p - 1) * bordered(lset, rset)
            if lhs != rhs:
                return (lset, rset, lhs, rhs)
    return None


# -- the permutation transform ---------------------------------------------


def build_B(a: ExactMatrix, nest: NestCertificate):
    """Transform A into B via the chain's permutation and exact inversion.

    With tau = (i_1, ..., i_n) listing the chain inner-to-outer, the
    permutation theta(i_m) = n - m + 1 sends the chain's submatrices to the
    trailing blocks of the conjugated matrix; B is the inverse of that
    conjugation.  B is verified exactly to be a P- and Q^2-matrix, and each
    leading Schur complement of B is verified to invert onto the matching
    trailing block.
    """
    n = a.n
    if len(nest.tau) != n:
        raise MatrixArgumentError("nest permutation size does not match matrix")
    check = verify_nest(a, nest.chain)
    if not isinstance(check, NestEvidence):
        raise InternalInconsistencyError(
            f"supplied nest fails re-verification: {check.describe()}"
        )

    theta = [0] * n  # theta[i-1] = image of index i
    for m_pos, i_m in enumerate(nest.tau, start=1):
        theta[i_m - 1] = n - m_pos + 1

    conjugated = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            conjugated[theta[i - 1] - 1][theta[j - 1] - 1] = a.rows[i - 1][j - 1]
    a_tilde = ExactMatrix(conjugated)
    b = inverse(a_tilde)

    ok_p, p_witness = is_p(b)
    if not ok_p:
        raise InternalInconsistencyError(
            f"transformed matrix is not a P-matrix: {p_witness.describe()}"
        )
    ok_q2, *_ = is_q2(b)
    if not ok_q2:
        raise InternalInconsistencyError("transformed matrix is not a Q^2-matrix")
    for m_pos in range(1, n):
        tail = tuple(range(m_pos + 1, n + 1))
        if inverse(schur_complement(b, m_pos)) != principal_submatrix(a_tilde, tail):
            raise InternalInconsistencyError(
                f"Schur-inverse identity failed at block size {m_pos}"
            )
    return tuple(theta), b


# -- block traces and the trace ledger -------------------------------------


def block_traces(b: ExactMatrix):
    """Tr((B^(j)[1..m])^2) for all 1 <= m <= j <= n, exactly."""
    values = {}
    for j in range(1, b.n + 1):
        for m_pos in range(1, j + 1):
            block = compound_block(b, j, m_pos)
            values[(j, m_pos)] = trace(block * block)
    return values


@dataclass(frozen=True)
class Stabilizer:
    """Strictly decreasing positive diagonal, e_1 = 1 > e_2 > ... > e_n > 0."""

    eps: tuple  # Fractions
    shrink_log: tuple  # halvings spent choosing e_2, ..., e_n

    def __post_init__(self):
        if self.eps[0] != 1:
            raise MatrixArgumentError("stabilizer must start with eps_1 = 1")
        for a, b in zip(self.eps, self.eps[1:]):
            if not (0 < b < a):
                raise MatrixArgumentError(
                    "stabilizer entries must decrease strictly and stay positive"
                )


@dataclass(frozen=True)
class TraceLedger:
    """Exact values Tr(D_k^(j) B^(j) D_m^(j) B^(j)), 1 <= k,m <= j <= n."""

    entries: dict  # (j, k, m) -> Fraction

    def all_positive(self):
        return all(v > 0 for v in self.entries.values())

    def first_violation(self):
        for key in sorted(self.entries):
            if self.entries[key] <= 0:
                return key, self.entries[key]
        return None


def _quad_trace(c: ExactMatrix, dk, dm):
    """Tr(diag(dk) * C * diag(dm) * C) without forming the products."""
    total = Fraction(0)
    for alpha in range(c.n):
        row = c.rows[alpha]
        for beta in range(c.n):
            total += dk[alpha] * row[beta] * dm[beta] * c.rows[beta][alpha]
    return total


def _diag_vectors(eps, j):
    """Diagonals of D_k^(j) for k = 1..j, via the symmetric-polynomial form."""
    return {
        k: [
            diag_generalized_compound(eps, j, k).data.rows[i][i]
            for i in range(math.comb(len(eps), j))
        ]
        for k in range(1, j + 1)
    }


def _ledger(comps, eps, keys=None):
    """Ledger entries for diag(eps) over precomputed compounds of B.

    ``keys`` restricts to specific (j, k, m) triples; None means all.
    """
    n = len(eps)
    entries = {}
    wanted_j = sorted({j for (j, _, _) in keys}) if keys is not None else range(1, n + 1)
    for j in wanted_j:
        c = comps[j]
        dvecs = _diag_vectors(eps, j)
        for k in range(1, j + 1):
            for m_pos in range(1, j + 1):
                key = (j, k, m_pos)
                if keys is not None and key not in keys:
                    continue
                entries[key] = _quad_trace(c, dvecs[k], dvecs[m_pos])
    return entries


def homotopy_certificate(b: ExactMatrix, d) -> TraceLedger:
    """Full exact trace ledger for a positive diagonal over B.

    ``d`` may be a Stabilizer or any sequence of positive rationals.  An
    all-positive ledger certifies that (tI + (1-t)diag(d)) * B is a
    Q^2-matrix for every t in [0,1]; nonpositive entries are reported in
    the ledger, not raised.
    """
    eps = list(d.eps) if isinstance(d, Stabilizer) else [as_rational(x) for x in d]
    if len(eps) != b.n:
        raise MatrixArgumentError("diagonal length must equal matrix dimension")
    if any(e <= 0 for e in eps):
        raise MatrixArgumentError("diagonal entries must be positive")
    comps = {j: compound(b, j).data for j in range(1, b.n + 1)}
    return TraceLedger(entries=_ledger(comps, eps))


# -- the stabilizer search --------------------------------------------------


def _eps_from_ratios(ratios):
    eps = [Fraction(1)]
    for r in ratios:
        eps.append(eps[-1] * r)
    return eps


def _leading_spectrum_ok(b, eps, size, tols):
    head = tuple(range(1, size + 1))
    block = principal_submatrix(b, head).scale_rows(eps[:size])
    return spectra.positive_simple(spectra.eigenvalues(block), tols)


def build_stabilizer(
    b: ExactMatrix,
    max_shrink: int = DEFAULT_MAX_SHRINK,
    tols: spectra.SpectralTolerances | None = None,
) -> Stabilizer:
    """Constructive search for a stabilizing diagonal with a positive ledger.

    Entries are chosen level by level: e_{l+1} starts at e_l / 2 and halves
    until all exact ledger entries with max(k, m) = l are positive and the
    leading (l+1)-block of diag(eps) * B has a numerically positive simple
    spectrum.  Unchosen trailing entries continue the current geometric
    decay during intermediate checks; a final pass re-verifies the complete
    ledger and the full spectrum, shrinking further on any residual
    violation.  Existence is guaranteed when the block traces of B are
    positive, so only the shrink cap can make this inconclusive.
    """
    tols = tols or spectra.SpectralTolerances()
    n = b.n
    ok_p, p_witness = is_p(b)
    if not ok_p:
        raise MatrixArgumentError(
            f"stabilizer target must be a P-matrix: {p_witness.describe()}"
        )
    for (j, m_pos), value in block_traces(b).items():
        if value <= 0:
            raise MatrixArgumentError(
                f"block trace ({j},{m_pos}) = {value} is not positive"
            )
    comps = {j: compound(b, j).data for j in range(1, n + 1)}

    ratios = [Fraction(1, 2)] * (n - 1)
    shrink_log = [0] * (n - 1)

    for level in range(1, n):
        level_keys = {
            (j, k, m_pos)
            for j in range(level, n + 1)
            for k in range(1, j + 1)
            for m_pos in range(1, j + 1)
            if max(k, m_pos) == level
        }
        last_violation = None
        for _ in range(max_shrink + 1):
            eps = _eps_from_ratios(ratios)
            entries = _ledger(comps, eps, keys=level_keys)
            bad = [(key, v) for key, v in sorted(entries.items()) if v <= 0]
            if not bad and _leading_spectrum_ok(b, eps, level + 1, tols):
                break
            last_violation = bad[0] if bad else ("leading-spectrum", level + 1)
            ratios[level - 1] /= 2
            shrink_log[level - 1] += 1
        else:
            raise StabilizerInconclusiveError(
                level=level + 1, last_violation=last_violation
            )

    # Later levels were provisional while earlier ones were checked; confirm
    # the full ledger and spectrum, shrinking at the failing level if needed.
    last_violation = None
    for _ in range(max_shrink + 1):
        eps = _eps_from_ratios(ratios)
        ledger = TraceLedger(entries=_ledger(comps, eps))
        violation = ledger.first_violation()
        if violation is None:
            full = spectra.eigenvalues(b.scale_rows(eps))
            if spectra.positive_simple(full, tols):
                return Stabilizer(eps=tuple(eps), shrink_log=tuple(shrink_log))
            last_violation = ("spectrum", None)
            for i in range(n - 1):
                ratios[i] /= 2
                shrink_log[i] += 1
            continue
        (j, k, m_pos), value = violation
        last_violation = violation
        level = max(k, m_pos)
        if level >= n:
            raise InternalInconsistencyError(
                f"order-n ledger entry {violation} cannot be nonpositive"
            )
        ratios[level - 1] /= 2
        shrink_log[level - 1] += 1
    raise StabilizerInconclusiveError(level=None, last_violation=last_violation)


# -- the top-level certificate ---------------------------------------------


@dataclass(frozen=True)
class StabilityCertificate:
    """Everything needed to re-check a positive-stability claim.

    All fields up to ``trace_ledger`` are exact rationals re-derivable from
    the input matrix alone; the two spectra and the wedge margin are the
    only floating-point content and carry their tolerances.
    """

    matrix: ExactMatrix
    report: ClassReport
    nest: NestCertificate
    theta: tuple
    b_matrix: ExactMatrix
    block_trace_values: dict  # (j, m) -> Fraction
    stabilizer: Stabilizer
    trace_ledger: TraceLedger
    spectrum: spectra.Spectrum  # of the input matrix
    stabilized_spectrum: spectra.Spectrum  # of diag(eps) * B
    wedge_margin: float
    tolerances: spectra.SpectralTolerances


def certify_stability(
    a: ExactMatrix,
    tols: spectra.SpectralTolerances | None = None,
    max_shrink: int = DEFAULT_MAX_SHRINK,
) -> StabilityCertificate:
    """Run the whole certification pipeline on an exact matrix.

    Raises HypothesisError (not-P, not-Q2, no-nest),
    StabilizerInconclusiveError, or NumericToleranceError; on success every
    exact field of the returned certificate is independently re-verifiable.
    """
    from .nests import find_q2_nest

    tols = tols or spectra.SpectralTolerances()
    report = classify_full(a)
    if not report.is_p:
        raise HypothesisError(
            "not-P",
            f"input is not a P-matrix: {report.witnesses['P'].describe()}",
            witness=report.witnesses["P"],
        )
    if not report.is_q2:
        witness = report.witnesses.get("Q") or report.witnesses.get("Q2")
        raise HypothesisError(
            "not-Q2",
            f"input is not a Q^2-matrix: {witness.describe()}",
            witness=witness,
        )
    nest = find_q2_nest(a)
    if nest is None:
        raise HypothesisError(
            "no-nest", "no maximal Q^2 chain of principal submatrices exists"
        )

    theta, b = build_B(a, nest)
    bt = block_traces(b)
    bad_bt = [(key, v) for key, v in sorted(bt.items()) if v <= 0]
    if bad_bt:
        raise InternalInconsistencyError(
            f"nonpositive block trace {bad_bt[0]} contradicts the transform lemma"
        )

    stabilizer = build_stabilizer(b, max_shrink=max_shrink, tols=tols)
    ledger = homotopy_certificate(b, stabilizer)
    if not ledger.all_positive():
        raise InternalInconsistencyError(
            f"stabilizer ledger re-check failed: {ledger.first_violation()}"
        )

    stabilized = spectra.eigenvalues(b.scale_rows(stabilizer.eps))
    if not spectra.positive_simple(stabilized, tols):
        raise NumericToleranceError(
            "stabilized spectrum fails the positive-simple tolerance check"
        )
    spectrum = spectra.eigenvalues(a)
    if not spectra.is_positively_stable(spectrum, margin=0.0):
        raise NumericToleranceError(
            "certified matrix shows a numerically nonpositive eigenvalue; "
            "exact and numeric evidence disagree"
        )
    ok_wedge, margin = spectra.wedge_check(spectrum, a.n, kind="sharpened")
    if not ok_wedge:
        raise NumericToleranceError(
            f"sharpened wedge bound violated numerically (slack {margin})"
        )
    return StabilityCertificate(
        matrix=a,
        report=report,
        nest=nest,
        theta=theta,
        b_matrix=b,
        block_trace_values=bt,
        stabilizer=stabilizer,
        trace_ledger=ledger,
        spectrum=spectrum,
        stabilized_spectrum=stabilized,
        wedge_margin=margin,
        tolerances=tols,
    )
