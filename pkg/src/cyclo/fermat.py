"""Exhaustive desk-scale search for Case I Fermat counterexamples.

For an odd prime p, searches x^p + y^p = z^p over 1 <= x <= y <= bound with
gcd(xyz, p) = 1.  Because p is odd, any solution in integers with xyz != 0
maps under sign flips and rearrangement to one in this box (negating a
variable negates its p-th power, so every sign pattern rearranges to a sum
of two positive p-th powers equal to a third), so the box search is
exhaustive up to the bound.

The optional pruning filter uses t^p = t (mod p): any solution has
z = z^p = x^p + y^p = x + y (mod p), so pairs with p | x + y would force
p | z and cannot yield a coprime solution.  The search is partitionable
over disjoint x-ranges with a deterministic merge.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .regularity import is_regular_prime
from .errors import IrregularPrimeError
from .ntheory import is_prime

__all__ = [
    "SearchReport",
    "case_i_search",
    "check_regular_and_search",
    "little_fermat_filter",
    "merge_reports",
    "perfect_pth_root",
]


@dataclass(frozen=True)
class SearchReport:
    p: int
    bound: int
    candidates_examined: int
    pruned_by_filter: int
    solutions: tuple[tuple[int, int, int], ...]


def perfect_pth_root(s: int, p: int):
    """The integer z with z^p = s, or None; binary search, exact only."""
    if s < 1:
        raise ValueError("s must be >= 1")
    lo, hi = 1, 1 << (s.bit_length() // p + 1)
    while lo <= hi:
        mid = (lo + hi) // 2
        v = mid**p
        if v == s:
            return mid
        if v < s:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


def little_fermat_filter(p: int, x: int, y: int, z: int) -> bool:
    """Keep/prune test for a triple with gcd(xyz, p) = 1: False (prune)
    unless x + y = z (mod p), a necessary condition for x^p + y^p = z^p."""
    return (x + y - z) % p == 0


def _validate_odd_prime(p):
    if p == 2 or not is_prime(p):
        raise ValueError("odd prime required")


def case_i_search(p: int, bound: int, use_filter: bool = True, x_range=None) -> SearchReport:
    """Search the box 1 <= x <= y <= bound for x^p + y^p = z^p with
    gcd(xyz, p) = 1.  `x_range = (lo, hi)` restricts x to a chunk for
    partitioned runs; every (x, y) pair in the box counts as a candidate
    whether or not it survives the coprimality screen or the filter.
    """
    _validate_odd_prime(p)
    if bound < 0:
        raise ValueError("bound must be >= 0")
    lo, hi = x_range if x_range is not None else (1, bound)
    lo, hi = max(lo, 1), min(hi, bound)
    candidates = 0
    pruned = 0
    solutions = []
    pth = {v: v**p for v in range(lo, bound + 1)}
    for x in range(lo, hi + 1):
        xp = pth[x]
        for y in range(x, bound + 1):
            candidates += 1
            if x % p == 0 or y % p == 0:
                continue
            if use_filter and (x + y) % p == 0:
                # any z with z^p = x^p + y^p satisfies z = x + y = 0 (mod p)
                pruned += 1
                continue
            s = xp + pth[y]
            z = perfect_pth_root(s, p)
            if z is None or z % p == 0:
                continue
            if x**p + y**p == z**p and math.gcd(x * y * z, p) == 1 and x * y * z != 0:
                solutions.append((x, y, z))
    return SearchReport(
        p=p,
        bound=bound,
        candidates_examined=candidates,
        pruned_by_filter=pruned,
        solutions=tuple(sorted(solutions)),
    )


def merge_reports(reports) -> SearchReport:
    """Combine chunked reports from the same (p, bound) search."""
    reports = list(reports)
    if not reports:
        raise ValueError("nothing to merge")
    p, bound = reports[0].p, reports[0].bound
    if any(r.p != p or r.bound != bound for r in reports):
        raise ValueError("reports come from different searches")
    sols = sorted(t for r in reports for t in r.solutions)
    return SearchReport(
        p=p,
        bound=bound,
        candidates_examined=sum(r.candidates_examined for r in reports),
        pruned_by_filter=sum(r.pruned_by_filter for r in reports),
        solutions=tuple(sols),
    )


def check_regular_and_search(p: int, bound: int, use_filter: bool = True) -> SearchReport:
    """The regularity-gated pipeline: verify p is an odd regular prime,
    then run the box search; irregular primes are rejected with their
    irregular pairs named."""
    _validate_odd_prime(p)
    report = is_regular_prime(p)
    if not report.regular:
        raise IrregularPrimeError(p, report.pairs)
    return case_i_search(p, bound, use_filter=use_filter)
