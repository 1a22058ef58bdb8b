"""Parity arithmetic and formal mod-2 sums.

Scalars over F2 are plain ints 0/1.  A formal F2-sum of basis terms is
represented as a frozenset of the terms: addition is symmetric
difference, so a term appearing twice cancels and the empty set is
zero.  Every algebra element in this package is built on top of this
representation.
"""

from __future__ import annotations

from typing import Iterable, TypeVar

T = TypeVar("T")


def binom_mod2(n: int, k: int) -> int:
    """Binomial coefficient C(n, k) reduced mod 2.

    Out-of-range arguments (negative, or k > n) give 0 by convention.
    Uses Lucas' criterion: C(n, k) is odd iff every bit of k is also
    set in n.
    """
    if k < 0 or n < 0 or k > n:
        return 0
    return 1 if n & k == k else 0


def adem_coeff(a: int, b: int, c: int) -> int:
    """Coefficient of Sq^(a+b-c) Sq^c in the Adem expansion of Sq^a Sq^b.

    Equals C(b-c-1, a-2c) mod 2; degenerate indices give 0, so the
    function is total even though it is only meaningful for a < 2b and
    0 <= c <= a // 2.
    """
    return binom_mod2(b - c - 1, a - 2 * c)


def sum_add(x: Iterable[T], y: Iterable[T]) -> frozenset[T]:
    """Add two formal F2-sums: symmetric difference of the term sets."""
    return frozenset(x) ^ frozenset(y)
