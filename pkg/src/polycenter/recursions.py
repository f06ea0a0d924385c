"""Closed-form right-hand sides of the central-component recursions.

Each function evaluates a recursion or summation formula exactly; the
matching left-hand sides live in :mod:`polycenter.sequences` and the
brute-force checks in :mod:`polycenter.enumeration`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

from .model import placement_count
from .sequences import ballot_T, catalan, kangulation_count, quadrangulation_count


def bounded_partitions(
    total: int, parts: int, smallest: int, largest: int, residue: int = 0, mod: int = 1
) -> Iterator:
    """Nondecreasing tuples of ``parts`` values in [smallest, largest] summing to ``total``.

    With ``mod`` > 1 only values = residue (mod mod) are produced, which lets
    callers skip summands that are identically zero.
    """
    if parts == 0:
        if total == 0:
            yield ()
        return
    start = smallest + (residue - smallest) % mod
    for first in range(start, min(largest, total // parts) + 1, mod):
        for rest in bounded_partitions(total - first, parts - 1, first, largest, residue, mod):
            yield (first, *rest)


def central_recursion_rhs(n: int) -> int:
    """Triangulation count of an n-gon by central component.

    Diameter term (n/2) * C(n/2-1)^2 for even n, plus the sum over sorted
    triples i <= j <= k < n/2 with i+j+k = n of the placement multiplicity
    times C(i-1) C(j-1) C(k-1).  Equals catalan(n-2).
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    total = (n // 2) * catalan(n // 2 - 1) ** 2 if n % 2 == 0 else 0
    for i, j, k in bounded_partitions(n, 3, 1, (n - 1) // 2):
        total += (
            placement_count((i, j, k), n)
            * catalan(i - 1)
            * catalan(j - 1)
            * catalan(k - 1)
        )
    return total


def quad_recursion_rhs(n: int) -> int:
    """Quadrangulation count of a (2n+2)-gon by central component.

    Diameter term (n+1) * Q(n/2)^2 (zero for odd n by the half-integer
    convention) plus the sum over sorted quadruples of side lengths < n+1
    summing to 2n+2.  Even side lengths contribute zero and are skipped.
    Equals quadrangulation_count(n).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    total = (n + 1) * quadrangulation_count(Fraction(n, 2)) ** 2
    big_n = 2 * n + 2
    for part in bounded_partitions(big_n, 4, 1, n, residue=1, mod=2):
        prod = 1
        for i in part:
            prod *= quadrangulation_count((i - 1) // 2)
            if prod == 0:
                break
        if prod:
            total += placement_count(part, big_n) * prod
    return total


def kang_recursion_rhs(n: int, k: int = 3) -> int:
    """k-angulation count of an n-gon by central component.

    Diameter term (n/2) * f(n/2+1)^2 (squared factor; the unsquared variant
    is already wrong at n=6, k=3) plus the sum over sorted k-tuples of side
    lengths < n/2 summing to n.  Terms whose side lengths cannot bound a
    k-angulable sub-polygon vanish and are skipped.  Requires n > k with
    n = 2 (mod k-2); equals kangulation_count(n, k).
    """
    if k < 3:
        raise ValueError("k must be >= 3")
    if (n - 2) % (k - 2):
        raise ValueError(f"n={n} violates n = 2 (mod {k - 2})")
    if n <= k:
        raise ValueError("recursion domain is n > k; use kangulation_count for n = k")
    total = 0
    if n % 2 == 0:
        total += (n // 2) * kangulation_count(n // 2 + 1, k) ** 2
    mod = k - 2 if k > 3 else 1
    for part in bounded_partitions(n, k, 1, (n - 1) // 2, residue=1 % mod, mod=mod):
        prod = 1
        for i in part:
            f = kangulation_count(i + 1, k)
            if f == 0:
                prod = 0
                break
            prod *= f
        if prod:
            total += placement_count(part, n) * prod
    return total


def fixed_vertex_outside(n: int) -> int:
    """Closed form for triangulations of an n-gon with vertex 0 outside the
    central component: sum of C(m) C(n-2-m) for 1 <= m <= floor(n/2) - 1."""
    if n < 3:
        raise ValueError("n must be >= 3")
    return sum(catalan(m) * catalan(n - 2 - m) for m in range(1, n // 2))


def fixed_vertex_outside_double_sum(n: int) -> int:
    """Same count, grouped by the cyclic length l of the shortest diagonal
    separating vertex 0 from the center and the position of its near endpoint."""
    if n < 3:
        raise ValueError("n must be >= 3")
    total = 0
    for length in range(2, n // 2 + 1):
        for j in range(1, length):
            total += catalan(n - length - 1) * catalan(length - j - 1) * catalan(j - 1)
    return total


def dyck_formula(m: int) -> int:
    """Ballot-number form: sum of T(m,k) T(m,k+1) over 0 <= k < m/2."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return sum(ballot_T(m, k) * ballot_T(m, k + 1) for k in range(0, (m + 1) // 2))


def dyck_midpoint_uu_bruteforce(s: int) -> int:
    """Count Dyck paths of semilength s whose two middle steps are both up.

    Exhaustive: walks every Dyck path of 2s steps and tests steps s and s+1
    (1-indexed).
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    steps = 2 * s
    count = 0
    path: list = []

    def rec(height: int) -> None:
        nonlocal count
        pos = len(path)
        if pos == steps:
            if path[s - 1] and path[s]:
                count += 1
            return
        rem = steps - pos - 1
        if height + 1 <= rem:
            path.append(True)
            rec(height + 1)
            path.pop()
        if height >= 1 and height - 1 <= rem:
            path.append(False)
            rec(height - 1)
            path.pop()

    rec(0)
    return count
