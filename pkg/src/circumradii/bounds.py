"""Exact integer values of the bound formulas for n_k and m_k.

The bounds are inequalities in l = |G| < k; the right-hand sides increase
with l, so the closed forms below plug in the worst case l = k - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

SMALL_CASES = {4: 9, 5: 37}


class KTooSmall(ValueError):
    pass


def _check_k(k: int) -> None:
    if k < 4:
        raise KTooSmall(f"bounds are defined for k >= 4, got {k}")


def erdos_claimed_bound(k: int) -> int:
    """2 C(k-1,2) C(k-1,3) + k."""
    _check_k(k)
    return 2 * comb(k - 1, 2) * comb(k - 1, 3) + k


def circle_case_count(l: int) -> int:
    """Points lying on a circle through 2 chosen points with a chosen radius."""
    return 2 * comb(l, 2) * comb(l, 3)


def lemma_m_bound(k: int) -> int:
    """Points on a fixed irreducible sextic guaranteeing k with distinct radii."""
    _check_k(k)
    if k in SMALL_CASES:
        return SMALL_CASES[k]
    l = k - 1
    return max(37, k + circle_case_count(l) + 36 * comb(comb(l, 2), 2))


def main_n_bound(k: int) -> int:
    _check_k(k)
    if k in SMALL_CASES:
        return SMALL_CASES[k]
    l = k - 1
    return k + circle_case_count(l) + comb(comb(l, 2), 2) * lemma_m_bound(l)


@dataclass(frozen=True)
class BoundRow:
    k: int
    erdos_claimed: int
    small_case: Optional[int]
    lemma_m: int
    main_n: int

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "erdos_claimed": self.erdos_claimed,
            "small_case": self.small_case,
            "lemma_m": self.lemma_m,
            "main_n": self.main_n,
        }


def bound_row(k: int) -> BoundRow:
    return BoundRow(k, erdos_claimed_bound(k), SMALL_CASES.get(k), lemma_m_bound(k), main_n_bound(k))


def bound_table(k_min: int, k_max: int) -> list[BoundRow]:
    return [bound_row(k) for k in range(k_min, k_max + 1)]


def asymptotic_ratio_check(k_max: int) -> Fraction:
    """max over 10 <= k <= k_max of main_n_bound(k) / k^9.

    Also asserts that lemma_m_bound(k) / k^5 stays within twice its value at
    k = 10 over the same range.
    """
    if k_max < 10:
        raise ValueError("k_max must be at least 10")
    cap = 2 * Fraction(lemma_m_bound(10), 10**5)
    worst = Fraction(0)
    for k in range(10, k_max + 1):
        m_ratio = Fraction(lemma_m_bound(k), k**5)
        if m_ratio > cap:
            raise AssertionError(f"lemma_m_bound({k})/k^5 = {float(m_ratio)} exceeds {float(cap)}")
        worst = max(worst, Fraction(main_n_bound(k), k**9))
    return worst
