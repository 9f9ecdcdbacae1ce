"""Counting numerical semigroups by genus and multiplicity, two ways.

The semigroup tree walks from ℕ downwards: the children of S are the sets
``S - {x}`` for each minimal generator ``x`` above the Frobenius number.
Each semigroup of genus g appears exactly once at depth g.  This path
uses nothing but integer bitmasks and never touches filtrations.

The compact path lists every (sigma, e) of a given multiplicity and genus,
keeps the admissible ones and collects their expanded filtrations.

The two are compared in the test suite.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from gapsets.admissibility import is_admissible
from gapsets.compact import CompactForm, expand
from gapsets.core import NumericalSemigroup
from gapsets.filtration import MFiltration

DEFAULT_GENUS_CAP = 35
GENUS_CAP_ENV = "GAPSETS_MAX_GENUS"


class ResourceLimitError(RuntimeError):
    """Requested genus is above the configured cap."""


def genus_cap() -> int:
    raw = os.environ.get(GENUS_CAP_ENV)
    if raw is None:
        return DEFAULT_GENUS_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{GENUS_CAP_ENV} must be an integer, got {raw!r}") from None


def check_genus(max_genus: int, cap: int | None = None) -> None:
    if max_genus < 0:
        raise ValueError(f"genus must be nonnegative, got {max_genus}")
    cap = genus_cap() if cap is None else cap
    if max_genus > cap:
        raise ResourceLimitError(
            f"genus {max_genus} exceeds the cap of {cap}; raise it with "
            f"{GENUS_CAP_ENV} or --genus-cap if you really mean it"
        )


# ---------------------------------------------------------------------------
# semigroup tree

# A tree node is (gaps bitmask, frobenius, multiplicity).
_ROOT = (0, -1, 1)


def _children(node):
    gaps, frob, m = node
    out = []
    lo = max(frob + 1, 1)
    hi = max(frob + m, m)
    for x in range(lo, hi + 1):
        # x > frob, so x is a member; it is a generator iff no a + (x - a) splits it
        for a in range(m, x // 2 + 1):
            if not (gaps >> a & 1) and not (gaps >> (x - a) & 1):
                break
        else:
            child_m = m + 1 if x == m else m
            out.append((gaps | 1 << x, x, child_m))
    return out


def _expand_chunk(nodes):
    return [child for node in nodes for child in _children(node)]


def _node_key(node):
    gaps, frob, _ = node
    return tuple(x for x in range(frob + 2) if not gaps >> x & 1)


def _tree_levels(max_genus: int, jobs: int = 1) -> Iterator[list]:
    level = [_ROOT]
    yield level
    if max_genus == 0:
        return
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        for _ in range(max_genus):
            if pool is None or len(level) < 4 * jobs:
                nxt = _expand_chunk(level)
            else:
                size = -(-len(level) // (4 * jobs))
                chunks = [level[i:i + size] for i in range(0, len(level), size)]
                nxt = [n for part in pool.map(_expand_chunk, chunks) for n in part]
            nxt.sort(key=_node_key)
            level = nxt
            yield level
    finally:
        if pool is not None:
            pool.shutdown()


def _node_semigroup(node) -> NumericalSemigroup:
    return NumericalSemigroup(_node_key(node))


def enumerate_tree(
    max_genus: int, jobs: int = 1, cap: int | None = None
) -> Iterator[tuple[int, list[NumericalSemigroup]]]:
    """Yield ``(g, semigroups of genus g)`` for g = 0..max_genus.

    Within a genus, semigroups are sorted by their small elements, whatever
    the value of ``jobs``.  ``cap`` overrides the genus cap.
    """
    check_genus(max_genus, cap)
    for g, level in enumerate(_tree_levels(max_genus, jobs)):
        yield g, [_node_semigroup(n) for n in level]


@dataclass
class TreeCounts:
    by_multiplicity: dict[tuple[int, int], int] = field(default_factory=dict)
    total: list[int] = field(default_factory=list)
    generic: list[int] = field(default_factory=list)


def tree_counts(max_genus: int, jobs: int = 1, cap: int | None = None) -> TreeCounts:
    """n_g, n'_g (semigroups with c <= 3m) and n_{g,m}, all from the tree."""
    check_genus(max_genus, cap)
    out = TreeCounts()
    for g, level in enumerate(_tree_levels(max_genus, jobs)):
        out.total.append(len(level))
        generic = 0
        for gaps, frob, m in level:
            key = (g, m)
            out.by_multiplicity[key] = out.by_multiplicity.get(key, 0) + 1
            if frob + 1 <= 3 * m:
                generic += 1
        out.generic.append(generic)
    return out


# ---------------------------------------------------------------------------
# compact enumeration


def exponent_vectors(m: int, genus: int) -> Iterator[tuple[int, ...]]:
    """All e with e_0 >= 1 and sum e_i * (m-1-i) == genus, in colex order."""
    if m < 2:
        return
    n = m - 1

    def rec(i, remaining):
        # fills positions n-1 down to i; colex = last coordinate varies slowest
        weight = n - i
        if i == 0:
            if remaining % weight == 0 and remaining // weight >= 1:
                yield (remaining // weight,)
            return
        for x in range(min(remaining // weight, genus) + 1):
            for head in rec(i - 1, remaining - x * weight):
                yield head + (x,)

    yield from rec(n - 1, genus)


def _block_sizes(m: int, e: tuple[int, ...]) -> list[int]:
    nz = [i for i, x in enumerate(e) if x > 0]
    sizes = [k - j for j, k in zip(nz, nz[1:])]
    sizes.append(m - 1 - nz[-1])
    return sizes


def _ordered_blocks(pool: tuple[int, ...], sizes: list[int]):
    if not sizes:
        yield ()
        return
    first, rest = sizes[0], sizes[1:]
    for chosen in combinations(pool, first):
        left = tuple(x for x in pool if x not in chosen)
        for tail in _ordered_blocks(left, rest):
            yield chosen + tail


def canonical_sigmas(m: int, e: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Permutations that are ascending inside every run of deletions.

    These are exactly the sigma that :func:`compact_form` would return, so
    each m-filtration with exponent vector ``e`` is produced once.
    """
    yield from _ordered_blocks(tuple(range(1, m)), _block_sizes(m, e))


def _filtration_key(f: MFiltration):
    return tuple(tuple(sorted(p)) for p in f.sets)


def enumerate_compact(m: int, genus: int) -> list[MFiltration]:
    """All gapset filtrations of multiplicity m and the given genus, sorted."""
    if m < 1 or genus < 0:
        raise ValueError(f"need m >= 1 and genus >= 0, got m={m}, genus={genus}")
    if m == 1:
        return [MFiltration(1, ())] if genus == 0 else []
    seen: dict[tuple[int, ...], MFiltration] = {}
    for e in exponent_vectors(m, genus):
        for sigma in canonical_sigmas(m, e):
            form = CompactForm(m, sigma, e)
            if is_admissible(form):
                f = expand(form)
                seen.setdefault(f.parts, f)
    return sorted(seen.values(), key=_filtration_key)


def count_compact(m: int, genus: int) -> int:
    return len(enumerate_compact(m, genus))


# ---------------------------------------------------------------------------
# count tables


@dataclass
class CountTable:
    """n_{g,m} for g <= max_genus, m <= max_multiplicity, plus n_g and n'_g."""

    max_genus: int
    max_multiplicity: int
    rows: dict[tuple[int, int], int]
    total: list[int]
    generic: list[int]

    def count(self, g: int, m: int) -> int:
        return self.rows.get((g, m), 0)

    def row(self, m: int) -> list[int]:
        return [self.count(g, m) for g in range(self.max_genus + 1)]

    def multiplicity_csv(self, multiplicities=None) -> str:
        ms = multiplicities or range(1, self.max_multiplicity + 1)
        lines = ["genus,multiplicity,count"]
        for m in ms:
            for g in range(self.max_genus + 1):
                lines.append(f"{g},{m},{self.count(g, m)}")
        return "\n".join(lines) + "\n"

    def totals_csv(self) -> str:
        lines = ["genus,n_g,n_prime_g"]
        for g, (n, n1) in enumerate(zip(self.total, self.generic)):
            lines.append(f"{g},{n},{n1}")
        return "\n".join(lines) + "\n"

    def to_dict(self, multiplicities=None) -> dict:
        ms = multiplicities or range(1, self.max_multiplicity + 1)
        return {
            "max_genus": self.max_genus,
            "n_g": list(self.total),
            "n_prime_g": list(self.generic),
            "n_gm": {str(m): self.row(m) for m in ms},
        }

    def to_json(self, multiplicities=None) -> str:
        return json.dumps(self.to_dict(multiplicities), indent=2) + "\n"

    def to_text(self, multiplicities=None) -> str:
        ms = list(multiplicities or range(1, self.max_multiplicity + 1))
        gs = range(self.max_genus + 1)
        cells = [["g", *map(str, gs)]]
        for m in ms:
            cells.append([f"m={m}", *(str(self.count(g, m)) for g in gs)])
        if not multiplicities:
            cells.append(["n_g", *map(str, self.total)])
            cells.append(["n'_g", *map(str, self.generic)])
        widths = [max(len(row[i]) for row in cells) for i in range(len(cells[0]))]
        lines = []
        for idx, row in enumerate(cells):
            head = row[0].rjust(widths[0])
            rest = " ".join(cell.rjust(w) for cell, w in zip(row[1:], widths[1:]))
            lines.append(f"{head} | {rest}")
            if idx == 0:
                lines.append("-" * len(lines[0]))
        return "\n".join(lines) + "\n"


def count_table(
    max_genus: int, max_multiplicity: int | None = None, jobs: int = 1, cap: int | None = None
) -> CountTable:
    """Tabulate n_{g,m} by compact enumeration and n_g, n'_g from the tree."""
    check_genus(max_genus, cap)
    if max_multiplicity is None:
        max_multiplicity = max_genus + 1
    tree = tree_counts(max_genus, jobs, cap)
    rows = {}
    for m in range(1, max_multiplicity + 1):
        # n_{g,m} = 0 once m >= g + 2
        for g in range(max(m - 1, 0), max_genus + 1):
            n = count_compact(m, g)
            if n:
                rows[(g, m)] = n
    return CountTable(max_genus, max_multiplicity, rows, tree.total, tree.generic)
