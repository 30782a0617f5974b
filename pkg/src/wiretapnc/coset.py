"""Ozarow-Wyner coset coding and MDS/MRD parity-check constructions.

The encoder maps a k-symbol secret to the syndrome of an [n, n-k] code and
transmits a word drawn uniformly from the matching coset:
Y = Y0(S) + r N, with N the canonical kernel basis of H and r the injected
randomness.  Randomness enters only through an explicit seed (or an explicit
kernel-coefficient vector), so every security experiment is reproducible.
"""

from __future__ import annotations

import random
from itertools import combinations
from math import comb

from .exceptions import (
    DimensionMismatch,
    ExtensionTooSmall,
    LengthExceedsField,
    SingularMatrix,
    TooManySubsets,
)
from .fmatrix import FMatrix
from .gf import FieldSpec, field_new

MDS_SUBSET_CAP = 10 ** 6


class CosetCode:
    """Coset code defined by a full-row-rank k x n parity check matrix H."""

    def __init__(self, parity_check: FMatrix):
        H = parity_check
        if H.rank() != H.rows:
            raise SingularMatrix(
                f"parity check must have full row rank {H.rows}", rank=H.rank()
            )
        self.parity_check = H
        self.k = H.rows
        self.n = H.cols
        self.field = H.field
        self.kernel = H.null_space_basis()  # (n-k) x n
        # particular solution: invert H restricted to its pivot columns
        _, pivots = H.rref()
        self._pivots = pivots
        if self.k:
            self._pivot_inv = H.submatrix_columns(pivots).invert()
        else:
            self._pivot_inv = None

    def particular_solution(self, secret):
        """One word with syndrome `secret`: nonzero only on H's pivot columns."""
        if len(secret) != self.k:
            raise DimensionMismatch(f"secret length {len(secret)} != k={self.k}")
        y = [0] * self.n
        if self.k:
            partial = self._pivot_inv.mul_vec(secret)
            for col, val in zip(self._pivots, partial):
                y[col] = val
        return y

    def encode_with_randomness(self, secret, r):
        """Deterministic coset word for explicit kernel coefficients r."""
        if len(r) != self.n - self.k:
            raise DimensionMismatch(f"need {self.n - self.k} randomness symbols")
        f = self.field
        y = self.particular_solution(secret)
        for coeff, basis_row in zip(r, self.kernel.data):
            if coeff:
                y = [f.add(a, f.mul(coeff, b)) for a, b in zip(y, basis_row)]
        return y

    def encode(self, secret, seed: int = 0):
        rng = random.Random(seed)
        r = [rng.randrange(self.field.order) for _ in range(self.n - self.k)]
        return self.encode_with_randomness(secret, r)

    def decode(self, word):
        """Syndrome computation H y; inverts encode for every seed."""
        return self.parity_check.mul_vec(word)


def rs_parity_check(n: int, length: int, field: FieldSpec, alpha=None) -> FMatrix:
    """Vandermonde parity check of an [length, length-n] Reed-Solomon code.

    Entry (i, j) = alpha^((i+1) j), rows i = 0..n-1, columns j = 0..length-1.
    """
    if length > field.order - 1:
        raise LengthExceedsField(
            f"length {length} exceeds q-1 = {field.order - 1}"
        )
    if alpha is None:
        alpha = field.primitive_element()
    a = int(field.element(alpha))
    return FMatrix(
        field,
        [[field.pow(a, (i + 1) * j) for j in range(length)] for i in range(n)],
    )


def is_mds_parity_check(Hfull: FMatrix):
    """Exhaustively check that every n-column submatrix has full rank n.

    Returns (ok, witness): witness is the first failing column subset, or None.
    This is a correctness oracle; above the subset cap it refuses rather than
    sampling.
    """
    n = Hfull.rows
    if comb(Hfull.cols, n) > MDS_SUBSET_CAP:
        raise TooManySubsets(
            f"choose({Hfull.cols}, {n}) exceeds cap {MDS_SUBSET_CAP}"
        )
    for subset in combinations(range(Hfull.cols), n):
        if Hfull.submatrix_columns(subset).rank() != n:
            return False, subset
    return True, None


def gabidulin_parity_check(n: int, k: int, base: FieldSpec, m: int) -> FMatrix:
    """Moore-style parity check of an [n, k] Gabidulin code over GF(q^m).

    Row i, column j holds g_j^(q^i) where g_j = x^j is the canonical basis of
    GF(q^m) over GF(q) truncated to n elements.  Requires m >= n.
    """
    if base.m != 1:
        raise ExtensionTooSmall(
            "Gabidulin construction requires a prime base field"
        )
    if m < n:
        raise ExtensionTooSmall(f"extension degree {m} < code length {n}")
    ext = field_new(base.p, m)
    q = base.order
    # g_j = x^j encodes as p^j in the little-endian integer encoding
    basis = [base.p ** j for j in range(n)]
    return FMatrix(
        ext,
        [[ext.pow(g, q ** i) for g in basis] for i in range(n - k)],
    )


def lift_matrix(M: FMatrix, ext: FieldSpec) -> FMatrix:
    """Embed a prime-base-field matrix into the extension field GF(p^m)."""
    if M.field.m != 1 or M.field.p != ext.p:
        raise DimensionMismatch("can only lift prime-field matrices into GF(p^m)")
    return FMatrix(ext, M.data, M.cols)


def universal_secrecy_check(H_ext: FMatrix, B: FMatrix) -> bool:
    """MRD universality: is the stack [H; lift(B)] invertible over GF(q^m)?

    B must be a full-rank matrix over the base field with H.rows + B.rows
    equal to the common column count.
    """
    if B.cols != H_ext.cols:
        raise DimensionMismatch(f"{B.cols} cols vs {H_ext.cols}")
    if H_ext.rows + B.rows != H_ext.cols:
        raise DimensionMismatch(
            f"stack is {H_ext.rows + B.rows}x{H_ext.cols}, not square"
        )
    if B.rank() != B.rows:
        raise SingularMatrix("B must have full row rank", rank=B.rank())
    lifted = B if B.field == H_ext.field else lift_matrix(B, H_ext.field)
    stacked = H_ext.stack(lifted)
    return stacked.rank() == stacked.cols
