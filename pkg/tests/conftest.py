"""Shared brute-force oracles.

Nothing in here imports the enumeration, filtration or compact code, so
the oracles stay independent of the paths they check.
"""

from itertools import combinations

import pytest

ACCEPTANCE_LINES = []


def naive_is_gapset(s):
    """Literal definition: each decomposition z = x + y has a summand in s."""
    s = set(s)
    return all(x in s or z - x in s for z in s for x in range(1, z // 2 + 1))


def naive_semigroup_closure(generators, limit):
    """Elements of the semigroup spanned by ``generators`` up to ``limit``."""
    members = {0}
    for x in range(1, limit + 1):
        if any(x - a in members for a in generators if a <= x):
            members.add(x)
    return members


def naive_gapsets(genus):
    """All gapsets of the given genus; the Frobenius number is below 2g."""
    if genus == 0:
        return [()]
    out = []
    for combo in combinations(range(1, 2 * genus), genus):
        if naive_is_gapset(combo):
            out.append(combo)
    return out


def naive_multiplicity(gaps):
    m = 1
    while m in gaps:
        m += 1
    return m


def record(criterion, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'}  {criterion}" + (f"  ({detail})" if detail else "")
    ACCEPTANCE_LINES.append(line)
    return ok


@pytest.fixture
def acceptance():
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
