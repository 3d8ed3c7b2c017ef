"""Elements of (Z/2Z)^n and the two twisting functions.

An element x = (x_1, ..., x_n) is stored as a plain Python int whose bit
(i - 1) holds the coordinate x_i.  Group addition is XOR and the weight is
the popcount, so no wrapper class is needed on the hot paths.
"""

from __future__ import annotations

import enum
import itertools
from math import comb
from typing import Callable, Iterator

MAX_DIM = 63
DEFAULT_BRUTE_FORCE_BOUND = 8


class BoundExceeded(ValueError):
    """Raised when a brute-force routine is asked to run beyond its bound."""


class TwistKind(enum.Enum):
    CLIFFORD = "clifford"
    OCTONION = "octonion"

    def __str__(self) -> str:
        return self.value


def check_dim(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= MAX_DIM:
        raise ValueError(f"dimension must be an int in [1, {MAX_DIM}], got {n!r}")


def check_element(x: int, n: int) -> None:
    if not isinstance(x, int) or x < 0 or x >> n:
        raise ValueError(f"{x!r} is not an element of (Z/2Z)^{n}")


def full(n: int) -> int:
    """The all-ones element (usually written with a bar over e_0)."""
    return (1 << n) - 1


def e(i: int) -> int:
    """Basis vector e_i, 1-based; e(0) is the zero element."""
    return 0 if i == 0 else 1 << (i - 1)


def e_bar(i: int, n: int) -> int:
    """All ones except coordinate i; e_bar(0, n) is the all-ones element."""
    return full(n) ^ e(i)


def e_pair(i: int, j: int) -> int:
    return e(i) ^ e(j)


def weight(x: int) -> int:
    return x.bit_count()


def elements(n: int) -> range:
    return range(1 << n)


def coords(x: int, n: int) -> list[int]:
    """Coordinates (x_1, ..., x_n) as a list of 0/1."""
    return [(x >> i) & 1 for i in range(n)]


# ---------------------------------------------------------------------------
# twisting functions


def f_clifford_naive(x: int, y: int, n: int | None = None) -> int:
    """Sum over 1 <= i <= j <= n of x_i y_j, mod 2, by a double loop."""
    if n is None:
        n = max(x.bit_length(), y.bit_length())
    xs, ys = coords(x, n), coords(y, n)
    total = 0
    for i in range(n):
        for j in range(i, n):
            total += xs[i] * ys[j]
    return total & 1


def _prefix_parity(x: int) -> int:
    # bit j of the result is x_1 + ... + x_{j+1} mod 2
    for shift in (1, 2, 4, 8, 16, 32):
        x ^= x << shift
    return x


def f_clifford(x: int, y: int) -> int:
    """Same value as :func:`f_clifford_naive` via prefix parities of ``x``."""
    return (y & _prefix_parity(x)).bit_count() & 1


def f_octonion_naive(x: int, y: int, n: int | None = None) -> int:
    """The cubic twisting function of O_n, evaluated term by term (O(n^3))."""
    if n is None:
        n = max(x.bit_length(), y.bit_length())
    xs, ys = coords(x, n), coords(y, n)
    total = 0
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                total += xs[i] * xs[j] * ys[k]
                total += xs[i] * ys[j] * xs[k]
                total += ys[i] * xs[j] * xs[k]
    for i in range(n):
        for j in range(i, n):
            total += xs[i] * ys[j]
    return total & 1


def f_octonion(x: int, y: int) -> int:
    """Fast form of :func:`f_octonion_naive`.

    In each cubic monomial the y-index k is one of three distinct indices and
    the other two carry x, so for fixed k the cubic part counts the pairs of
    set bits of x away from k: C(|x| - x_k, 2).  Summing over the set bits of
    y splits into the k inside x and the k outside x.
    """
    w = x.bit_count()
    inside = (x & y).bit_count()
    outside = y.bit_count() - inside
    cubic = inside * comb(w - 1, 2) + outside * comb(w, 2) if w else 0
    return (cubic + (y & _prefix_parity(x)).bit_count()) & 1


_TWISTS: dict[TwistKind, Callable[[int, int], int]] = {
    TwistKind.CLIFFORD: f_clifford,
    TwistKind.OCTONION: f_octonion,
}

_NAIVE_TWISTS = {
    TwistKind.CLIFFORD: f_clifford_naive,
    TwistKind.OCTONION: f_octonion_naive,
}


def twist_function(twist: TwistKind | str) -> Callable[[int, int], int]:
    return _TWISTS[TwistKind(twist)]


def naive_twist_function(twist: TwistKind | str) -> Callable[..., int]:
    return _NAIVE_TWISTS[TwistKind(twist)]


def alpha(x: int) -> int:
    """Generating function of O_n: alpha(x) = f_O(x, x)."""
    return f_octonion(x, x)


def alpha_by_weight(x: int) -> int:
    return 0 if x.bit_count() % 4 == 0 else 1


def assert_alpha_table(n: int) -> None:
    """Check f_O(x, x) against the weight-mod-4 table for every x in (Z/2Z)^n.

    Called once per dimension before any construction relies on the table.
    """
    check_dim(n)
    if n > 20:
        # the closed form only depends on |x|; one representative per weight
        xs: Iterator[int] = (full(w) for w in range(n + 1))
    else:
        xs = iter(elements(n))
    for x in xs:
        if alpha(x) != alpha_by_weight(x):
            raise AssertionError(f"alpha mismatch at x={x:#b}")


# ---------------------------------------------------------------------------
# generating-function conditions


def cocycle_defect(twist: TwistKind | str, x: int, y: int, z: int) -> int:
    """delta f(x, y, z); zero everywhere iff the twisted algebra is associative."""
    f = twist_function(twist)
    return f(y, z) ^ f(x ^ y, z) ^ f(x, y ^ z) ^ f(x, y)


def check_generating_function(
    twist: TwistKind | str,
    n: int,
    bound: int = DEFAULT_BRUTE_FORCE_BOUND,
) -> bool:
    """Exhaustively test conditions (i) and (ii) with alpha(x) := f(x, x).

    (i)  f(x,y) + f(y,x) = alpha(x+y) + alpha(x) + alpha(y)
    (ii) delta f(x,y,z)  = seven-term alternating sum of alpha
    """
    check_dim(n)
    if n > bound:
        raise BoundExceeded(f"n={n} exceeds brute-force bound {bound}")
    f = twist_function(twist)
    size = 1 << n
    a = [f(x, x) for x in range(size)]
    table = [[f(x, y) for y in range(size)] for x in range(size)]
    for x in range(size):
        row = table[x]
        for y in range(x, size):
            if row[y] ^ table[y][x] != a[x ^ y] ^ a[x] ^ a[y]:
                return False
    for x, y in itertools.product(range(size), repeat=2):
        fxy = table[x][y]
        xy = x ^ y
        for z in range(size):
            lhs = table[y][z] ^ table[xy][z] ^ table[x][y ^ z] ^ fxy
            rhs = (
                a[xy ^ z] ^ a[xy] ^ a[x ^ z] ^ a[y ^ z] ^ a[x] ^ a[y] ^ a[z]
            )
            if lhs != rhs:
                return False
    return True


def quadruple_defect(twist: TwistKind | str, x: int, y: int, z: int, t: int) -> int:
    """f(x,y) + f(z,t) + f(x,t) + f(z,y); requires x + y + z + t = 0."""
    if x ^ y ^ z ^ t:
        raise ValueError("quadruple must satisfy x + y + z + t = 0")
    f = twist_function(twist)
    return f(x, y) ^ f(z, t) ^ f(x, t) ^ f(z, y)
