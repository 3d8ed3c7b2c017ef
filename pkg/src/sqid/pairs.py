"""Multiplicative pairs (A, B), sumsets, Hurwitzian sets and the subset
constructions that trim B to shrink the sumset A + B.
"""

from __future__ import annotations

import os
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .gf2n import (
    BoundExceeded,
    TwistKind,
    assert_alpha_table,
    check_dim,
    check_element,
    e,
    e_bar,
    e_pair,
    full,
    twist_function,
)

DEFAULT_WORK_BOUND = 1 << 24
MAX_SEARCH_DIM = 6


def work_bound() -> int:
    """Quadruple work bound; the SQID_WORK_BOUND environment variable overrides."""
    raw = os.environ.get("SQID_WORK_BOUND")
    if raw is None:
        return DEFAULT_WORK_BOUND
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"SQID_WORK_BOUND must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError("SQID_WORK_BOUND must be positive")
    return value


@dataclass(frozen=True)
class ElementSet:
    """A subset of (Z/2Z)^n, kept sorted by integer encoding."""

    n: int
    members: tuple[int, ...]
    _lookup: frozenset[int] = field(init=False, repr=False, compare=False)

    def __init__(self, n: int, members: Iterable[int] = ()):
        check_dim(n)
        ms = tuple(sorted(set(members)))
        for x in ms:
            check_element(x, n)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "members", ms)
        object.__setattr__(self, "_lookup", frozenset(ms))

    @classmethod
    def whole(cls, n: int) -> ElementSet:
        return cls(n, range(1 << n))

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: object) -> bool:
        return x in self._lookup

    def __repr__(self) -> str:
        return f"ElementSet(n={self.n}, members={list(self.members)})"

    def as_set(self) -> frozenset[int]:
        return self._lookup

    def complement(self) -> ElementSet:
        return ElementSet(self.n, (x for x in range(1 << self.n) if x not in self._lookup))

    def translate(self, t: int) -> ElementSet:
        return ElementSet(self.n, (x ^ t for x in self.members))

    def union(self, other: ElementSet) -> ElementSet:
        _same_dim(self, other)
        return ElementSet(self.n, self._lookup | other._lookup)

    def difference(self, other: ElementSet) -> ElementSet:
        _same_dim(self, other)
        return ElementSet(self.n, self._lookup - other._lookup)


def _same_dim(a: ElementSet, b: ElementSet) -> None:
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} != {b.n}")


def sumset(a: ElementSet, b: ElementSet) -> ElementSet:
    _same_dim(a, b)
    return ElementSet(a.n, {x ^ y for x in a for y in b})


def difference_set(a: ElementSet) -> set[int]:
    """Nonzero elements of A + A."""
    return {x ^ z for x in a for z in a if x != z}


# ---------------------------------------------------------------------------
# multiplicativity


@dataclass(frozen=True)
class PairReport:
    multiplicative: bool
    witness: tuple[int, int, int, int] | None = None
    quadruples_checked: int = 0

    def __bool__(self) -> bool:
        return self.multiplicative


def _buckets(a: ElementSet, b: ElementSet) -> dict[int, list[tuple[int, int]]]:
    out: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for x in a:
        for y in b:
            out[x ^ y].append((x, y))
    return out


def is_multiplicative(
    twist: TwistKind | str,
    a: ElementSet,
    b: ElementSet,
    bound: int | None = None,
) -> PairReport:
    """Check f(x,y) + f(z,t) + f(x,t) + f(z,y) = 1 on every admissible quadruple.

    Quadruples x != z in A, y != t in B with x + y = z + t are found by
    bucketing A x B on x + y.  Each quadruple shows up in two buckets (x + y
    and x + t); only the one with the smaller key is evaluated.
    """
    _same_dim(a, b)
    bound = work_bound() if bound is None else bound
    if len(a) * len(b) > bound:
        raise BoundExceeded(f"card(A)*card(B) = {len(a) * len(b)} exceeds {bound}")
    f = twist_function(twist)
    checked = 0
    for z, terms in sorted(_buckets(a, b).items()):
        for p in range(len(terms)):
            x, y = terms[p]
            for q in range(p + 1, len(terms)):
                x2, y2 = terms[q]
                if x ^ y2 < z:
                    continue
                checked += 1
                if not f(x, y) ^ f(x2, y2) ^ f(x, y2) ^ f(x2, y):
                    return PairReport(False, (x, y, x2, y2), checked)
    return PairReport(True, None, checked)


def is_multiplicative_weight(a: ElementSet, b: ElementSet) -> bool:
    """Weight criterion for the octonion twist: no nonzero w in (A+A) & (B+B)
    may have weight divisible by 4."""
    _same_dim(a, b)
    common = difference_set(a) & difference_set(b)
    return all(w.bit_count() % 4 for w in common)


# ---------------------------------------------------------------------------
# Hurwitzian sets


def hurwitzian_set(n: int, full_set: bool = True) -> ElementSet:
    """The Hurwitzian set from the n mod 4 table.

    n = 0, 2 mod 4: {e_i, e_1 + e_i}        (2n elements, contains 0 and e_1)
    n = 1 mod 4:    {e_i, e_bar_i}           (2n)
    n = 3 mod 4:    {0, e_bar_0, e_i, e_bar_i} (2n + 2)

    With ``full_set=False`` and n = 3 mod 4 the two extremes 0 and e_bar_0
    are dropped, giving the 2n-element set used by the r = 2n families.
    """
    check_dim(n)
    assert_alpha_table(n)
    idx = range(1, n + 1)
    if n % 2 == 0:
        members = [e(i) for i in idx] + [e(1) ^ e(i) for i in idx]
    else:
        members = [e(i) for i in idx] + [e_bar(i, n) for i in idx]
        if n % 4 == 3 and full_set:
            members += [0, full(n)]
    return ElementSet(n, members)


def max_hurwitzian_search(n: int) -> ElementSet:
    """Largest S with |x + z| not divisible by 4 for all distinct x, z in S.

    Exact branch and bound over the 2^n group elements.  Among all maximum
    sets the lexicographically least sorted tuple is returned.
    """
    check_dim(n)
    if n > MAX_SEARCH_DIM:
        raise BoundExceeded(f"clique search limited to n <= {MAX_SEARCH_DIM}")
    size = 1 << n
    adj = [0] * size
    for x in range(size):
        for z in range(size):
            if x != z and (x ^ z).bit_count() % 4:
                adj[x] |= 1 << z
    return ElementSet(n, _max_clique(adj))


def _color_bound(cand: int, adj: list[int]) -> int:
    # greedy colouring of the candidate set; the colour count bounds any clique in it
    colors = 0
    rest = cand
    while rest:
        colors += 1
        avail = rest
        while avail:
            v = (avail & -avail).bit_length() - 1
            rest &= ~(1 << v)
            avail &= ~adj[v] & ~(1 << v)
    return colors


def _max_clique(adj: list[int]) -> list[int]:
    best: list[int] = []
    current: list[int] = []

    def expand(cand: int) -> None:
        nonlocal best
        if not cand:
            if len(current) > len(best):
                best = list(current)
            return
        if len(current) + _color_bound(cand, adj) <= len(best):
            return
        while cand:
            if len(current) + cand.bit_count() <= len(best):
                return
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            current.append(v)
            expand(cand & adj[v])
            current.pop()

    expand((1 << len(adj)) - 1)
    return best


# ---------------------------------------------------------------------------
# B-set constructions


def build_B_complement(n: int, full_set: bool = True) -> ElementSet:
    """B = (Z/2Z)^n minus H; the sumset misses exactly two elements."""
    if n < 4:
        raise ValueError("complement construction needs n >= 4 (H is the whole group below)")
    return hurwitzian_set(n, full_set).complement()


def build_B_border(n: int) -> ElementSet:
    """B = everything except weights 1, 3, n-3, n-1 (odd n, paired with the 2n-set)."""
    if n % 2 == 0:
        raise ValueError("border construction needs odd n")
    if n < 5:
        raise ValueError("border construction is empty for n < 5")
    drop = {1, 3, n - 3, n - 1}
    return ElementSet(n, (x for x in range(1 << n) if x.bit_count() not in drop))


def colex_pairs(l: int, k: int) -> list[tuple[int, int]]:
    """Pairs (i, j), i < j, up to and including (l, k) in colexicographic order."""
    return [(i, j) for j in range(2, k + 1) for i in range(1, j) if j < k or i <= l]


def build_B_thm1(n: int, l: int, k: int, full_set: bool = False) -> ElementSet:
    """B = complement of H united with the translates H + e_ij for (i, j) <= (l, k).

    ``full_set=True`` (n = 3 mod 4 only) starts from the (2n + 2)-element set.
    """
    check_dim(n)
    if not 1 <= l < k <= n:
        raise ValueError(f"need 1 <= l < k <= n, got l={l}, k={k}, n={n}")
    if full_set and n % 4 != 3:
        raise ValueError("the extended first family exists only for n = 3 mod 4")
    h = hurwitzian_set(n, full_set)
    removed = set(h)
    for i, j in colex_pairs(l, k):
        shift = e_pair(i, j)
        removed.update(x ^ shift for x in h)
    return ElementSet(n, (x for x in range(1 << n) if x not in removed))


def build_B_thm2(n: int, kappa: int) -> ElementSet:
    """Weight band m - kappa <= |x| <= m + kappa + 1 for n = 2m + 1.

    ``kappa`` is the zero-based band parameter; the theorem's k is kappa + 1.
    """
    check_dim(n)
    if n % 2 == 0:
        raise ValueError("second family needs odd n")
    m = (n - 1) // 2
    if not 0 <= kappa <= m - 1:
        raise ValueError(f"kappa must be in [0, {m - 1}], got {kappa}")
    lo, hi = m - kappa, m + kappa + 1
    return ElementSet(n, (x for x in range(1 << n) if lo <= x.bit_count() <= hi))


# ---------------------------------------------------------------------------
# named constructions

CONSTRUCTIONS = ("hurwitz-radon", "complement", "border", "thm1", "thm2")


@dataclass(frozen=True)
class Construction:
    name: str
    n: int
    params: dict
    A: ElementSet
    B: ElementSet

    @property
    def degenerate(self) -> bool:
        """True when B has shrunk to at most two elements below card(A).

        Such pairs still give valid identities; they are reported, not rejected.
        """
        return len(self.B) <= 2 < len(self.A)

    @property
    def label(self) -> str:
        extra = ",".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.name}(n={self.n}{',' if extra else ''}{extra})"


def build_pair(name: str, n: int, **params) -> Construction:
    """Build the (A, B) pair of a named construction.

    hurwitz-radon: full_set
    complement:    full_set (default True)
    border:        (none)
    thm1:          l, k, full_set (default False; True gives the n = 3 mod 4 variant)
    thm2:          kappa (zero-based), full_set (default True)
    """
    check_dim(n)
    if name == "hurwitz-radon":
        fs = params.get("full_set", True)
        a = hurwitzian_set(n, fs)
        b = ElementSet.whole(n)
    elif name == "complement":
        fs = params.get("full_set", True)
        a = hurwitzian_set(n, fs)
        b = build_B_complement(n, fs)
    elif name == "border":
        a = hurwitzian_set(n, full_set=False)
        b = build_B_border(n)
    elif name == "thm1":
        fs = params.get("full_set", False)
        a = hurwitzian_set(n, fs)
        b = build_B_thm1(n, params["l"], params["k"], fs)
    elif name == "thm2":
        fs = params.get("full_set", True)
        a = hurwitzian_set(n, fs)
        b = build_B_thm2(n, params["kappa"])
    else:
        raise ValueError(f"unknown construction {name!r}; choose from {CONSTRUCTIONS}")
    return Construction(name, n, dict(params), a, b)
