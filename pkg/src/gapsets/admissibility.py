"""When does a compact form (sigma, e) describe an actual gapset?

:func:`is_admissible` evaluates the general linear criterion on prefix
sums of ``e``.  :func:`is_admissible_m3` and :func:`is_admissible_m4` are
the closed-form characterizations for multiplicities 3 and 4.
"""

from __future__ import annotations

from itertools import permutations, product

from gapsets.compact import CompactForm, expand
from gapsets.core import is_gapset
from gapsets.filtration import gapset_of


def admissibility_conditions(sigma, m):
    """Yield ``(i, j, k, slack)`` for every inequality the criterion imposes.

    The condition reads ``e_j + ... + e_{k-1} <= e_0 + ... + e_{i-1} + slack``.
    """
    for i in range(1, m):
        si = sigma[i - 1]
        for j in range(i, m):
            total = si + sigma[j - 1]
            if total == m:
                # sums land in mℕ, which is always inside S
                continue
            for k in range(j + 1, m):
                sk = sigma[k - 1]
                if total == sk:
                    yield i, j, k, 0
                elif total == sk + m:
                    yield i, j, k, 1


def is_admissible(c: CompactForm) -> bool:
    m = c.m
    if m <= 2:
        return True
    pre = c.prefix_sums()
    for i, j, k, slack in admissibility_conditions(c.sigma, m):
        if pre[k] - pre[j] > pre[i] + slack:
            return False
    return True


def is_admissible_m3(family: str, r: int, s: int) -> bool:
    """``(12)^r(2)^s`` needs s <= r; ``(12)^r(1)^s`` needs s <= r + 1."""
    if r < 1 or s < 0:
        raise ValueError(f"need r >= 1 and s >= 0, got r={r}, s={s}")
    if family == "2":
        return s <= r
    if family == "1":
        return s <= r + 1
    raise ValueError(f"family must be '1' or '2', got {family!r}")


def is_admissible_m4(sigma, a: int, b: int, c: int) -> bool:
    if a < 1 or b < 0 or c < 0:
        raise ValueError(f"need a >= 1 and b, c >= 0, got {(a, b, c)}")
    sigma = tuple(sigma)
    if sigma == (1, 2, 3):
        return b <= a and c <= a
    if sigma == (1, 3, 2):
        return b + c <= a
    if sigma == (2, 1, 3):
        return c <= a
    if sigma == (2, 3, 1):
        return c <= a + 1
    if sigma == (3, 1, 2):
        return b + c <= a + 1 and c <= a + b
    if sigma == (3, 2, 1):
        return b <= a + 1 and c <= a + 1
    raise ValueError(f"{sigma} is not a permutation of (1, 2, 3)")


def m3_compact(family: str, r: int, s: int) -> CompactForm:
    """``(12)^r(2)^s`` removes 1 first, ``(12)^r(1)^s`` removes 2 first."""
    sigma = (1, 2) if family == "2" else (2, 1)
    return CompactForm(3, sigma, (r, s))


def iter_compact_forms(m: int, max_sum: int):
    """All (sigma, e) with e_0 >= 1 and e_0 + ... + e_{m-2} <= max_sum, sigma unrestricted."""
    if m < 2:
        return
    for e in product(range(max_sum + 1), repeat=m - 1):
        if e[0] < 1 or sum(e) > max_sum:
            continue
        for sigma in permutations(range(1, m)):
            yield CompactForm(m, sigma, e)


def criterion_discrepancies(max_m: int, max_sum: int):
    """Compare the criterion against a direct gapset check.

    Returns ``(checked, mismatches)`` where each mismatch is
    ``(form, criterion_says, brute_force_says)``.
    """
    checked = 0
    bad = []
    for m in range(2, max_m + 1):
        for form in iter_compact_forms(m, max_sum):
            checked += 1
            fast = is_admissible(form)
            slow = is_gapset(gapset_of(expand(form)))
            if fast != slow:
                bad.append((form, fast, slow))
    return checked, bad
