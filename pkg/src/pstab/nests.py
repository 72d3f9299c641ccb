"""Search for nested sequences of principal submatrices.

The stability theorem needs a maximal chain S_1 in S_2 in ... in S_n of
index sets whose principal submatrices are all Q^2-matrices.  Because the
Q^2 property of a principal submatrix depends only on its index set, the
search walks the subset lattice (at most 2^n verdicts, memoized) rather
than the n! orderings.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classify import is_q2
from .errors import MatrixArgumentError
from .exactmat import ExactMatrix, index_sets, minor, principal_submatrix


@dataclass(frozen=True)
class LevelEvidence:
    """Order sums for one principal submatrix and its square."""

    subset: tuple
    order_sums: tuple
    order_sums_square: tuple


@dataclass(frozen=True)
class NestEvidence:
    levels: tuple  # LevelEvidence per chain level, smallest first


@dataclass(frozen=True)
class NestViolation:
    """First failing level of a candidate chain."""

    level: int  # 1-based position in the chain
    subset: tuple
    order: int
    value: object
    from_square: bool

    def describe(self):
        src = "square" if self.from_square else "matrix"
        return (
            f"level {self.level} subset {self.subset}: order-{self.order} "
            f"minor sum of the {src} is {self.value}"
        )


@dataclass(frozen=True)
class NestCertificate:
    """A maximal Q^2 chain together with its defining permutation.

    ``tau`` lists the chain inner-to-outer: tau[0] is the single element of
    S_1 and tau[k-1] is the element added when growing S_{k-1} to S_k, so
    S_k = {tau[0], ..., tau[k-1]}.
    """

    chain: tuple  # index sets, sizes 1..n
    tau: tuple
    evidence: NestEvidence


def _chain_tau(chain):
    tau = [chain[0][0]]
    for prev, cur in zip(chain, chain[1:]):
        added = set(cur) - set(prev)
        if len(added) != 1:
            raise MatrixArgumentError("chain levels must grow by one index")
        tau.append(added.pop())
    return tuple(tau)


def _validate_chain(chain, n):
    chain = [tuple(sorted(s)) for s in chain]
    if len(chain) != n:
        raise MatrixArgumentError(
            f"chain must have {n} levels, got {len(chain)}"
        )
    for k, s in enumerate(chain, start=1):
        if len(s) != k or len(set(s)) != k:
            raise MatrixArgumentError(f"chain level {k} must have {k} indices")
        if any(not (1 <= i <= n) for i in s):
            raise MatrixArgumentError(f"chain level {k} has out-of-range indices")
        if k > 1 and not set(chain[k - 2]) <= set(s):
            raise MatrixArgumentError(f"chain level {k} does not contain level {k-1}")
    return chain


def _q2_verdict(m, subset, memo):
    subset = tuple(subset)
    if subset not in memo:
        sub = principal_submatrix(m, subset)
        memo[subset] = is_q2(sub)
    return memo[subset]


def find_q2_nest(m: ExactMatrix):
    """Depth-first search for a maximal Q^2 chain; None if none exists.

    Descends from the full index set, trying removable indices in
    increasing order, so the returned chain is deterministic.
    """
    n = m.n
    memo = {}
    full = tuple(range(1, n + 1))
    ok, *_ = _q2_verdict(m, full, memo)
    if not ok:
        return None

    def descend(subset):
        if len(subset) == 1:
            return [subset]
        for e in subset:
            smaller = tuple(i for i in subset if i != e)
            ok, *_ = _q2_verdict(m, smaller, memo)
            if ok:
                tail = descend(smaller)
                if tail is not None:
                    return tail + [subset]
        return None

    chain = descend(full)
    if chain is None:
        return None
    evidence = _chain_evidence(m, chain, memo)
    assert isinstance(evidence, NestEvidence)
    return NestCertificate(
        chain=tuple(chain), tau=_chain_tau(chain), evidence=evidence
    )


def _chain_evidence(m, chain, memo=None):
    """Evidence for a validated chain, or the first violation."""
    memo = memo if memo is not None else {}
    levels = []
    for level, subset in enumerate(chain, start=1):
        ok, sums_m, sums_m2, witness = _q2_verdict(m, subset, memo)
        if not ok:
            return NestViolation(
                level=level,
                subset=tuple(subset),
                order=witness.order,
                value=witness.value,
                from_square=all(s > 0 for s in sums_m),
            )
        levels.append(
            LevelEvidence(
                subset=tuple(subset),
                order_sums=tuple(sums_m),
                order_sums_square=tuple(sums_m2),
            )
        )
    return NestEvidence(levels=tuple(levels))


def verify_nest(m: ExactMatrix, chain):
    """Re-verify an externally supplied chain.

    Returns NestEvidence when every level is Q^2, otherwise the
    NestViolation for the first failing level.
    """
    chain = _validate_chain(chain, m.n)
    return _chain_evidence(m, chain)


def find_positive_nest(m: ExactMatrix):
    """Permutation ordering with all leading principal minors positive.

    Returns the permutation (i_1, ..., i_n) with every A(i_1..i_j; i_1..i_j)
    positive, or None.  Greedy depth-first with backtracking; candidate
    indices are tried in increasing order.
    """
    n = m.n

    def extend(order):
        if len(order) == n:
            return order
        for e in range(1, n + 1):
            if e in order:
                continue
            s = tuple(sorted(order + [e]))
            if minor(m, s, s) > 0:
                found = extend(order + [e])
                if found is not None:
                    return found
        return None

    found = extend([])
    return tuple(found) if found is not None else None
