"""Run-length (sigma, e) encoding of m-filtrations, and Kunz coordinates.

``sigma`` is a permutation of ``[1, m-1]`` in window notation and ``e`` an
exponent vector ``(e_0, ..., e_{m-2})`` with ``e_0 >= 1``.  The encoded
filtration repeats ``F'_0 = [1, m-1]`` e_0 times, then
``F'_1 = F'_0 - {sigma(1)}`` e_1 times, and so on.

Several ``sigma`` can encode the same filtration when some ``e_i`` vanish,
so two compact forms compare equal when their expansions do.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate

from gapsets.core import NumericalSemigroup
from gapsets.filtration import MFiltration, full_mask


@dataclass(frozen=True, eq=False)
class CompactForm:
    m: int
    sigma: tuple[int, ...]
    e: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sigma", tuple(self.sigma))
        object.__setattr__(self, "e", tuple(self.e))
        m = self.m
        if m < 1:
            raise ValueError(f"multiplicity must be positive, got {m}")
        if sorted(self.sigma) != list(range(1, m)):
            raise ValueError(f"sigma={self.sigma} is not a permutation of [1, {m - 1}]")
        if len(self.e) != m - 1:
            raise ValueError(f"e needs {m - 1} entries, got {len(self.e)}")
        if any(x < 0 for x in self.e):
            raise ValueError(f"exponents must be nonnegative: {self.e}")
        if m > 1 and self.e[0] < 1:
            raise ValueError("e_0 must be at least 1")

    @property
    def genus(self) -> int:
        m = self.m
        return sum(x * (m - 1 - i) for i, x in enumerate(self.e))

    def prefix_sums(self) -> tuple[int, ...]:
        """``P[i] = e_0 + ... + e_{i-1}`` for i in [0, m-1]."""
        return (0, *accumulate(self.e))

    def __eq__(self, other):
        if not isinstance(other, CompactForm):
            return NotImplemented
        return expand(self) == expand(other)

    def __hash__(self):
        return hash(expand(self))

    def __str__(self):
        return format_compact(self)

    def __repr__(self):
        return f"CompactForm(m={self.m}, sigma={self.sigma}, e={self.e})"


@dataclass(frozen=True)
class KunzVector:
    """Kunz coordinates ``k_1, ..., k_{m-1}`` stored in residue order."""

    m: int
    k: tuple[int, ...]

    def __getitem__(self, r: int) -> int:
        if not 1 <= r <= self.m - 1:
            raise IndexError(f"residue {r} outside [1, {self.m - 1}]")
        return self.k[r - 1]

    def csv_header(self) -> list[str]:
        return [f"k_{r}" for r in range(1, self.m)]


def expand(c: CompactForm) -> MFiltration:
    m = c.m
    if m == 1:
        return MFiltration(1, ())
    level = full_mask(m)
    parts: list[int] = []
    for i, reps in enumerate(c.e):
        if i > 0:
            level &= ~(1 << c.sigma[i - 1])
        parts.extend([level] * reps)
    return MFiltration(m, tuple(parts))


def compact_form(f: MFiltration) -> CompactForm:
    """Encode a filtration; sigma is the lexicographically smallest valid one.

    ``e_i`` counts the parts of size ``m-1-i``.  Between consecutive distinct
    levels the removed residues may be deleted in any order, so ascending
    order within each such block gives the smallest window.
    """
    m = f.m
    if m == 1:
        return CompactForm(1, (), ())
    e = [0] * (m - 1)
    for p in f.parts:
        e[m - 1 - p.bit_count()] += 1
    sigma: list[int] = []
    levels = sorted(set(f.parts), key=lambda p: -p.bit_count())
    for hi, lo in zip(levels, levels[1:] + [0]):
        removed = hi & ~lo
        sigma.extend(r for r in range(1, m) if removed >> r & 1)
    return CompactForm(m, tuple(sigma), tuple(e))


def apery_elements(c: CompactForm) -> dict[int, int]:
    """Smallest element of S(sigma, e) in each residue class; 0 for residue 0."""
    m = c.m
    pre = c.prefix_sums()
    w = {0: 0}
    for i in range(1, m):
        r = c.sigma[i - 1]
        w[r] = r + m * pre[i]
    return w


def semigroup_of(c: CompactForm) -> NumericalSemigroup:
    """Complement of the extension of F(sigma, e), read off residue by residue."""
    m = c.m
    if m == 1:
        return NumericalSemigroup((0,))
    w = apery_elements(c)
    cond = max(w.values()) - m + 1
    return NumericalSemigroup(tuple(x for x in range(cond + 1) if x >= w[x % m]))


def kunz_coordinates(c: CompactForm) -> KunzVector:
    m = c.m
    pre = c.prefix_sums()
    k = [0] * (m - 1)
    for i in range(1, m):
        k[c.sigma[i - 1] - 1] = pre[i]
    return KunzVector(m, tuple(k))


def kunz_of_semigroup(s: NumericalSemigroup) -> KunzVector:
    m = s.multiplicity
    cond = s.conductor
    w: dict[int, int] = {}
    for x in s.small_elements:
        r = x % m
        if r and r not in w:
            w[r] = x
    for r in range(1, m):
        if r not in w:
            # beyond the conductor every integer is a member
            x = cond + (r - cond) % m
            w[r] = x
    return KunzVector(m, tuple((w[r] - r) // m for r in range(1, m)))


def format_compact(c: CompactForm) -> str:
    sigma = ",".join(map(str, c.sigma))
    e = ",".join(map(str, c.e))
    return f"m={c.m};sigma={sigma};e={e}"


def parse_compact(text: str) -> CompactForm:
    fields = {}
    for chunk in text.strip().split(";"):
        key, sep, value = chunk.partition("=")
        if not sep:
            raise ValueError(f"bad compact form field {chunk!r}")
        fields[key.strip()] = value.strip()
    try:
        m = int(fields["m"])
        sigma = tuple(int(x) for x in fields["sigma"].split(",") if x)
        e = tuple(int(x) for x in fields["e"].split(",") if x)
    except KeyError as exc:
        raise ValueError(f"compact form is missing {exc.args[0]!r}") from None
    return CompactForm(m, sigma, e)
