"""Exact wiretapper-equivocation analysis via the rank formula.

For a full-rank observation W the equivocation contribution is
rank(H [C_W; C_W_perp]^{-1} J_{n,mu}) where C_W_perp is the canonical kernel
basis of C_W and J_{n,mu} selects the last n - mu coordinates.  Delta(mu) is
the minimum over all qualifying W.  Rank-deficient observations are reduced
to a row basis first; by matroid augmentation the minimizer can always be
taken among observations of maximal achievable rank, so restricting to those
is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations
from math import comb

from .exceptions import (
    BadBudgets,
    CutNotInvertible,
    DimensionMismatch,
    SingularMatrix,
    TooLargeForExhaustive,
)
from .fmatrix import FMatrix
from .netgraph import NetworkCode
from .securecode import wiretappable_edges

GHW_CODEWORD_CAP = 10 ** 6


@dataclass
class EquivocationReport:
    k: int
    delta: dict = dc_field(default_factory=dict)  # mu -> Delta(mu)
    witnesses: dict = dc_field(default_factory=dict)  # mu -> minimizing W
    flagged: dict = dc_field(default_factory=dict)  # mu -> True if no full-rank W
    d_profile: dict = dc_field(default_factory=dict)  # r -> d_r
    method: str = "rank-formula"


def complete_to_invertible(C: FMatrix) -> FMatrix:
    """Rows extending C's rows to a basis of the full space.

    The kernel basis is preferred (the textbook completion), but over a finite
    field a code can intersect its own dual, making [C; kernel] singular; in
    that case unit vectors are added greedily instead.  The equivocation
    formula is completion-independent, so either choice is valid.
    """
    n = C.cols
    kernel = C.null_space_basis()
    if C.stack(kernel).rank() == n:
        return kernel
    rows = [list(r) for r in C.data]
    added = []
    rank = C.rows
    for i in range(n):
        unit = [1 if j == i else 0 for j in range(n)]
        cand = FMatrix(C.field, rows + added + [unit], n)
        if cand.rank() > rank:
            added.append(unit)
            rank += 1
            if rank == n:
                break
    return FMatrix(C.field, added, n)


def _observation_equivocation(H: FMatrix, C: FMatrix) -> int:
    """Exact H(S|Z_W) in q-ary symbols for a full-rank observation matrix C."""
    n = C.cols
    r = C.rows
    if r == 0:
        return H.rows
    A = C.stack(complete_to_invertible(C))
    Ainv = A.invert()
    # rank of H A^-1 J_{n,r}: the last n - r columns of H A^-1
    HA = H.mul_mat(Ainv)
    return HA.submatrix_columns(range(r, n)).rank()


def equivocation_rank(H: FMatrix, code: NetworkCode, mu: int, restricted=None):
    """Delta(mu) by the rank formula: exact minimum over edge subsets.

    Returns (delta, witness, flagged).  flagged means no size-mu subset
    achieves rank mu; the minimum is then taken over subsets of the maximal
    achievable rank (reduced to a row basis), which is still the exact
    minimum of H(S|Z_W) over all size-mu subsets.
    """
    k = H.rows
    edges = wiretappable_edges(code, restricted)
    if mu == 0:
        return k, (), False
    if mu > len(edges):
        raise DimensionMismatch(f"mu={mu} exceeds {len(edges)} wiretappable edges")
    subsets = list(combinations(edges, mu))
    ranks = {}
    max_rank = 0
    for W in subsets:
        r = code.coding_matrix(W).rank()
        ranks[W] = r
        if r > max_rank:
            max_rank = r
    flagged = max_rank < mu
    best = None
    witness = None
    for W in subsets:
        if ranks[W] != max_rank:
            continue
        C = code.coding_matrix(W)
        if flagged:
            C = C.row_basis()
        d = _observation_equivocation(H, C)
        if best is None or d < best:
            best, witness = d, W
            if best == 0:
                break
    return best, witness, flagged


def equivocation_sweep(H: FMatrix, code: NetworkCode, mu_max: int,
                       restricted=None) -> EquivocationReport:
    """Delta(mu) for mu = 0..mu_max plus the network d_r profile."""
    k = H.rows
    report = EquivocationReport(k=k)
    for mu in range(mu_max + 1):
        delta, witness, flagged = equivocation_rank(H, code, mu, restricted)
        report.delta[mu] = delta
        report.witnesses[mu] = witness
        report.flagged[mu] = flagged
    for r in range(k + 1):
        for mu in range(mu_max + 1):
            if report.delta[mu] == k - r:
                report.d_profile[r] = mu
                break
    return report


def network_dr_profile(H: FMatrix, code: NetworkCode, restricted=None):
    """d_r = smallest mu with Delta(mu) = k - r; absent values are omitted."""
    edges = wiretappable_edges(code, restricted)
    report = equivocation_sweep(H, code, len(edges), restricted)
    return report.d_profile


def equivocation_wtc2(H: FMatrix, mu: int) -> int:
    """Classical wiretap-channel-II equivocation:
    min over |U| = n - mu of the rank of the columns of H indexed by U."""
    n = H.cols
    if mu >= n:
        return 0
    best = H.rows
    for U in combinations(range(n), n - mu):
        r = H.submatrix_columns(U).rank()
        if r < best:
            best = r
            if best == 0:
                break
    return best


def equivocation_underestimated(k: int, lam: int, mu: int) -> int:
    """Leakage for a wiretapper stronger than designed for: k - (mu - lambda),
    clamped at zero.  Valid for designs with perfect secrecy at lambda."""
    if lam < 0 or mu < lam:
        raise BadBudgets(f"need 0 <= lambda <= mu, got lambda={lam}, mu={mu}")
    return max(k - (mu - lam), 0)


def equivocation_restricted_cut(H: FMatrix, mu: int, code: NetworkCode = None,
                                cut_edges=None) -> int:
    """Wiretapper restricted to a decodable cut of n edges: the coset code
    behaves exactly as on the wiretap channel of type II.

    When the cut is supplied, its coding matrix must be invertible."""
    if code is not None and cut_edges is not None:
        C = code.coding_matrix(cut_edges)
        if C.rows != C.cols or C.rank() != C.rows:
            raise CutNotInvertible(
                f"cut {tuple(cut_edges)} has singular coding matrix"
            )
    return equivocation_wtc2(H, mu)


def generalized_hamming_weights(C_generator: FMatrix):
    """Brute-force d_1..d_k: minimum support of an r-dimensional subcode.

    The support of a subcode is the union of the supports of any basis, so we
    minimize over independent r-subsets of codewords.
    """
    G = C_generator
    k = G.rows
    if G.rank() != k:
        raise SingularMatrix("generator must have full row rank", rank=G.rank())
    f = G.field
    q = f.order
    if q ** k > GHW_CODEWORD_CAP:
        raise TooLargeForExhaustive(f"q^k = {q ** k} exceeds cap")
    codewords = []
    for msg_code in range(1, q ** k):
        msg = []
        v = msg_code
        for _ in range(k):
            msg.append(v % q)
            v //= q
        word = tuple(G.transpose().mul_vec(msg))
        codewords.append(word)
    weights = []
    for r in range(1, k + 1):
        if comb(len(codewords), r) > GHW_CODEWORD_CAP:
            raise TooLargeForExhaustive(f"choose({len(codewords)}, {r}) exceeds cap")
        best = None
        for subset in combinations(codewords, r):
            if FMatrix(f, subset, G.cols).rank() != r:
                continue
            support = set()
            for word in subset:
                support.update(i for i, x in enumerate(word) if x)
            if best is None or len(support) < best:
                best = len(support)
        weights.append(best)
    return weights


def wei_consistency_check(C_generator: FMatrix, mu: int, delta: int) -> bool:
    """Check d_{n-mu-Delta} <= n - mu < d_{n-mu-Delta+1} with the conventions
    d_0 = 0 and d_{k+1} = infinity (restricted-to-cut regime)."""
    n = C_generator.cols
    k = C_generator.rows
    d = generalized_hamming_weights(C_generator)

    def d_at(i):
        if i <= 0:
            return 0
        if i > k:
            return float("inf")
        return d[i - 1]

    idx = n - mu - delta
    return d_at(idx) <= n - mu < d_at(idx + 1)
