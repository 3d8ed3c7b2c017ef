"""Square identities built from multiplicative pairs, and their verification.

For a pair (A, B) the identity is

    (sum_{x in A} a_x^2) (sum_{y in B} b_y^2) = sum_{z in A+B} c_z^2,
    c_z = sum_{x + y = z} (-1)^f(x, y) a_x b_y.

Only indices and signs are stored; the indeterminates are materialized as
random integers in :func:`verify_numeric` and nowhere else.
"""

from __future__ import annotations

import json
import random
from collections import defaultdict
from dataclasses import dataclass
from math import comb
from typing import Any, NamedTuple

from .gf2n import TwistKind, check_dim, twist_function
from .pairs import ElementSet, _same_dim, sumset

Term = tuple[int, int, int]  # (x, y, sign)


class Triple(NamedTuple):
    r: int
    s: int
    N: int

    def __str__(self) -> str:
        return f"[{self.r},{self.s},{self.N}]"


@dataclass(frozen=True)
class Identity:
    n: int
    twist: TwistKind
    A: ElementSet
    B: ElementSet
    sumset: ElementSet
    coeffs: tuple[tuple[int, tuple[Term, ...]], ...]

    @property
    def triple(self) -> Triple:
        return triple_of(self)

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "twist": self.twist.value,
            "A": list(self.A),
            "B": list(self.B),
            "triple": self.triple._asdict(),
            "coeffs": [
                {"z": z, "terms": [{"x": x, "y": y, "sign": s} for x, y, s in terms]}
                for z, terms in self.coeffs
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":")) + "\n"

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Identity:
        n = data["n"]
        a = ElementSet(n, data["A"])
        b = ElementSet(n, data["B"])
        coeffs = tuple(
            (c["z"], tuple((t["x"], t["y"], t["sign"]) for t in c["terms"]))
            for c in data["coeffs"]
        )
        return cls(
            n=n,
            twist=TwistKind(data["twist"]),
            A=a,
            B=b,
            sumset=ElementSet(n, (z for z, _ in coeffs)),
            coeffs=coeffs,
        )

    def with_flipped_sign(self, bucket: int, term: int) -> Identity:
        """Copy with the sign of one term negated (for mutation testing)."""
        coeffs = list(self.coeffs)
        z, terms = coeffs[bucket]
        terms = list(terms)
        x, y, s = terms[term]
        terms[term] = (x, y, -s)
        coeffs[bucket] = (z, tuple(terms))
        return Identity(self.n, self.twist, self.A, self.B, self.sumset, tuple(coeffs))


def build_identity(twist: TwistKind | str, a: ElementSet, b: ElementSet) -> Identity:
    _same_dim(a, b)
    twist = TwistKind(twist)
    f = twist_function(twist)
    buckets: dict[int, list[Term]] = defaultdict(list)
    for x in a:
        for y in b:
            buckets[x ^ y].append((x, y, -1 if f(x, y) else 1))
    coeffs = tuple((z, tuple(buckets[z])) for z in sorted(buckets))
    return Identity(a.n, twist, a, b, sumset(a, b), coeffs)


def triple_of(identity: Identity) -> Triple:
    return Triple(len(identity.A), len(identity.B), len(identity.sumset))


# ---------------------------------------------------------------------------
# verification


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    quadruples_checked: int = 0
    failing_quadruple: tuple[int, int, int, int] | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _structure_error(identity: Identity) -> str:
    """Empty string if every (x, y) in A x B sits exactly once in bucket x + y."""
    a, b = identity.A, identity.B
    seen: set[tuple[int, int]] = set()
    zs = [z for z, _ in identity.coeffs]
    if len(set(zs)) != len(zs):
        return "repeated bucket"
    if set(zs) != identity.sumset.as_set():
        return "buckets do not match the stored sumset"
    for z, terms in identity.coeffs:
        if not terms:
            return f"empty bucket {z}"
        for x, y, s in terms:
            if s not in (1, -1):
                return f"sign {s!r} is not +-1"
            if x not in a or y not in b:
                return f"term ({x}, {y}) outside A x B"
            if x ^ y != z:
                return f"term ({x}, {y}) filed under z={z}"
            if (x, y) in seen:
                return f"term ({x}, {y}) repeated"
            seen.add((x, y))
    if len(seen) != len(a) * len(b):
        return "some (x, y) in A x B is missing"
    return ""


def verify_symbolic(identity: Identity) -> VerificationReport:
    """Formal proof that sum c_z^2 = (sum a_x^2)(sum b_y^2) for the stored table.

    Squaring the c_z gives the diagonal terms a_x^2 b_y^2, which reproduce
    the left side exactly when A x B is partitioned by the buckets with signs
    +-1.  Every other monomial a_x a_x' b_y b_y' (x != x', y != y') arises
    from exactly two bucket pairs, {(x,y),(x',y')} in bucket x+y and
    {(x,y'),(x',y)} in bucket x+y', and vanishes iff their sign products are
    opposite.  Signs are read from the table, never recomputed.
    """
    reason = _structure_error(identity)
    if reason:
        return VerificationReport(False, 0, None, reason)
    n = identity.n
    sign = {(x << n) | y: s for _, terms in identity.coeffs for x, y, s in terms}
    checked = 0
    for z, terms in identity.coeffs:
        m = len(terms)
        for p in range(m):
            x, y, s1 = terms[p]
            for q in range(p + 1, m):
                x2, y2, s2 = terms[q]
                if x ^ y2 < z:
                    continue
                checked += 1
                if s1 * s2 == sign[(x << n) | y2] * sign[(x2 << n) | y]:
                    return VerificationReport(False, checked, (x, y, x2, y2), "cross term survives")
    return VerificationReport(True, checked)


def verify_numeric(identity: Identity, trials: int = 32, seed: int = 0) -> bool:
    """Substitute random integers in [-1000, 1000] and compare both sides exactly."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    for _ in range(trials):
        a = {x: rng.randint(-1000, 1000) for x in identity.A}
        b = {y: rng.randint(-1000, 1000) for y in identity.B}
        lhs = sum(v * v for v in a.values()) * sum(v * v for v in b.values())
        rhs = 0
        for _, terms in identity.coeffs:
            c = sum(s * a[x] * b[y] for x, y, s in terms)
            rhs += c * c
        if lhs != rhs:
            return False
    return True


# ---------------------------------------------------------------------------
# predicted sizes


def predicted_triple_thm1(n: int, l: int, k: int, extended: bool = False) -> Triple:
    """Closed form of the first family; ``extended`` gives [r + 2, s - 2, N]
    (only for n = 3 mod 4)."""
    check_dim(n)
    if not 1 <= l < k <= n:
        raise ValueError(f"need 1 <= l < k <= n, got l={l}, k={k}, n={n}")
    removed = comb(k - 1, 2) + l + 1
    r = 2 * n
    s = 2**n - 2 * removed * n + 4 * comb(k, 3) + 2 * k * l
    big_n = 2**n - 2 * removed
    if extended:
        if n % 4 != 3:
            raise ValueError("the extended first family exists only for n = 3 mod 4")
        return Triple(r + 2, s - 2, big_n)
    return Triple(r, s, big_n)


def predicted_triple_thm2(n: int, k: int) -> Triple:
    """Second family for odd n = 2m + 1 and 1 <= k <= m."""
    check_dim(n)
    if n % 2 == 0:
        raise ValueError("second family needs odd n")
    m = (n - 1) // 2
    if not 1 <= k <= m:
        raise ValueError(f"k must be in [1, {m}], got {k}")
    s = sum(2 * comb(n, m - i) for i in range(k))
    big_n = sum(2 * comb(n, m - i) for i in range(k + 1))
    r = 2 * n + 2 if n % 4 == 3 else 2 * n
    return Triple(r, s, big_n)


def predicted_triple_complement(n: int) -> Triple:
    r = 2 * n + 2 if n % 4 == 3 else 2 * n
    return Triple(r, 2**n - r, 2**n - 2)


def predicted_triple_border(n: int) -> Triple:
    return Triple(2 * n, 2**n - 2 * (n + comb(n, 3)), 2**n - 2 * comb(n, 2) - 2)


def predicted_triple_hurwitz_radon(n: int) -> Triple:
    r = 2 * n + 2 if n % 4 == 3 else 2 * n
    return Triple(r, 2**n, 2**n)


def rho(big_n: int) -> int:
    """Hurwitz-Radon function: with N = 2^n (2k + 1), the largest r with an
    [r, N, N] identity."""
    if big_n < 1:
        raise ValueError("N must be a positive integer")
    n = (big_n & -big_n).bit_length() - 1
    return {0: 2 * n + 1, 1: 2 * n, 2: 2 * n, 3: 2 * n + 2}[n % 4]
