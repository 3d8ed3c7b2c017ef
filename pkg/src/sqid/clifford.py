"""Signed permutation matrices G_x and integer Clifford representations.

G_x is the 2^n x 2^n matrix with G_x(y, y + x) = (-1)^f_O(x, y) and zeros
elsewhere.  Generators x with f_O(x, x) = 1 that pairwise satisfy
f_O(x, x') + f_O(x', x) = 1 give a representation of Cl_{0,r}.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .gf2n import alpha, check_dim, check_element, e, e_bar, f_octonion
from .pairs import ElementSet

MATRIX_CHECK_DIM = 6
DENSE_EXPORT_DIM = 14


@dataclass(frozen=True)
class SignedPermMatrix:
    """Row y has its single nonzero entry ``signs[y]`` in column ``perm[y]``."""

    n: int
    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        size = 1 << self.n
        if len(self.perm) != size or len(self.signs) != size:
            raise ValueError("perm and signs must have length 2^n")
        if sorted(self.perm) != list(range(size)):
            raise ValueError("perm is not a permutation")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +-1")

    @classmethod
    def identity(cls, n: int) -> SignedPermMatrix:
        size = 1 << n
        return cls(n, tuple(range(size)), (1,) * size)

    @property
    def size(self) -> int:
        return 1 << self.n

    def __matmul__(self, other: SignedPermMatrix) -> SignedPermMatrix:
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        perm = tuple(other.perm[c] for c in self.perm)
        signs = tuple(s * other.signs[c] for s, c in zip(self.signs, self.perm))
        return SignedPermMatrix(self.n, perm, signs)

    def __neg__(self) -> SignedPermMatrix:
        return SignedPermMatrix(self.n, self.perm, tuple(-s for s in self.signs))

    def scaled(self, sign: int) -> SignedPermMatrix:
        return self if sign == 1 else -self

    @property
    def T(self) -> SignedPermMatrix:
        perm = [0] * self.size
        signs = [0] * self.size
        for row, (col, s) in enumerate(zip(self.perm, self.signs)):
            perm[col] = row
            signs[col] = s
        return SignedPermMatrix(self.n, tuple(perm), tuple(signs))

    def to_dense(self) -> np.ndarray:
        if self.n > DENSE_EXPORT_DIM:
            raise ValueError(f"dense export limited to n <= {DENSE_EXPORT_DIM}")
        out = np.zeros((self.size, self.size), dtype=np.int8)
        out[np.arange(self.size), np.array(self.perm)] = np.array(self.signs, dtype=np.int8)
        return out

    def triplets(self) -> list[tuple[int, int, int]]:
        return [(row, col, s) for row, (col, s) in enumerate(zip(self.perm, self.signs))]


def build_G(n: int, x: int) -> SignedPermMatrix:
    check_dim(n)
    check_element(x, n)
    size = 1 << n
    return SignedPermMatrix(
        n,
        tuple(y ^ x for y in range(size)),
        tuple(-1 if f_octonion(x, y) else 1 for y in range(size)),
    )


def anticommute(n: int, x: int, x2: int) -> bool:
    """Whether G_x G_x' = -G_x' G_x, read off f_O(x, x') + f_O(x', x)."""
    check_dim(n)
    check_element(x, n)
    check_element(x2, n)
    return bool(f_octonion(x, x2) ^ f_octonion(x2, x))


def matrices_anticommute(n: int, x: int, x2: int) -> bool:
    """Same question answered by multiplying the matrices."""
    g, h = build_G(n, x), build_G(n, x2)
    return g @ h == -(h @ g)


class CliffordCase(enum.Enum):
    """Which Cl_{0,r} the generator set represents, r in {2n, 2n-1, 2n-2}."""

    R2N = "2n"
    R2N_MINUS_1 = "2n-1"
    R2N_MINUS_2 = "2n-2"

    def rank(self, n: int) -> int:
        return {"2n": 2 * n, "2n-1": 2 * n - 1, "2n-2": 2 * n - 2}[self.value]


_ALLOWED_RESIDUES = {
    CliffordCase.R2N: {3},
    CliffordCase.R2N_MINUS_1: {1, 3},
    CliffordCase.R2N_MINUS_2: {2, 3},
}


def generator_set(n: int, case: CliffordCase | str) -> ElementSet:
    check_dim(n)
    case = CliffordCase(case)
    if n % 4 not in _ALLOWED_RESIDUES[case]:
        raise ValueError(f"Cl_(0,{case.value}) generators are listed only for n mod 4 in "
                         f"{sorted(_ALLOWED_RESIDUES[case])}, got n={n}")
    singles = [e(i) for i in range(1, n + 1)]
    if case is CliffordCase.R2N:
        return ElementSet(n, singles + [e_bar(i, n) for i in range(1, n + 1)])
    last = n if case is CliffordCase.R2N_MINUS_1 else n - 1
    return ElementSet(n, singles + [e(1) ^ e(j) for j in range(2, last + 1)])


def generators_from_set(a: ElementSet) -> ElementSet:
    """Translate a Hurwitzian-type set so it contains 0 and drop 0.

    For a set whose pairwise sums avoid weights divisible by 4 the result
    satisfies the Clifford relations, so an [r, 2^n, 2^n] identity yields
    r - 1 generators.
    """
    if not len(a):
        return a
    t = a.members[0]
    return ElementSet(a.n, (x ^ t for x in a if x != t))


def verify_clifford_rep(n: int, a: ElementSet, matrix_check: bool | None = None) -> bool:
    """G_x^2 = -Id for x in A and pairwise anticommutation.

    The bit-level predicates are always evaluated; for n <= 6 (or when asked)
    the relations are re-checked on the matrices themselves.
    """
    check_dim(n)
    if a.n != n:
        raise ValueError("dimension mismatch")
    members = list(a)
    ok = all(alpha(x) == 1 for x in members) and all(
        anticommute(n, x, y) for x, y in combinations(members, 2)
    )
    if matrix_check is None:
        matrix_check = n <= MATRIX_CHECK_DIM
    if not matrix_check:
        return ok
    minus_id = -SignedPermMatrix.identity(n)
    gs = {x: build_G(n, x) for x in members}
    mat_ok = all(g @ g == minus_id for g in gs.values()) and all(
        gs[x] @ gs[y] == -(gs[y] @ gs[x]) for x, y in combinations(members, 2)
    )
    if mat_ok != ok:
        raise AssertionError("bit-level and matrix-level Clifford checks disagree")
    return ok
