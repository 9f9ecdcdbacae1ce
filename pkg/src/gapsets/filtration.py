"""m-extensions, m-filtrations and the slicing bijection between them.

An m-filtration is a nonincreasing chain ``[1, m-1] = F_0 ⊇ F_1 ⊇ ... ⊇ F_t``
of subsets of ``[1, m-1]``.  Parts are stored as bitmasks (bit ``r`` stands
for residue ``r``).  Trailing empty parts are not allowed, so the number of
parts is the depth.  For ``m = 1`` the only filtration has no parts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from gapsets.core import Gapset, _bits, _to_mask, is_gapset, multiplicity


def full_mask(m: int) -> int:
    """Bitmask of [1, m-1]."""
    return ((1 << m) - 1) & ~1 if m > 1 else 0


@dataclass(frozen=True)
class MFiltration:
    m: int
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        m = self.m
        if m < 1:
            raise ValueError(f"multiplicity must be positive, got {m}")
        if m == 1:
            if parts:
                raise ValueError("the 1-filtration has no parts")
            return
        full = full_mask(m)
        if not parts or parts[0] != full:
            raise ValueError(f"first part must be [1, {m - 1}]")
        for prev, cur in zip(parts, parts[1:]):
            if cur & ~prev:
                raise ValueError("parts must be nonincreasing")
        if parts[-1] == 0:
            raise ValueError("trailing empty parts are not allowed")

    @classmethod
    def from_sets(cls, m: int, sets: Iterable[Iterable[int]]) -> "MFiltration":
        parts = []
        for s in sets:
            s = tuple(s)
            if any(not 1 <= r <= m - 1 for r in s):
                raise ValueError(f"part {set(s)} is not inside [1, {m - 1}]")
            parts.append(_to_mask(s))
        while parts and parts[-1] == 0:
            parts.pop()
        return cls(m, tuple(parts))

    @property
    def sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(_bits(p)) for p in self.parts)

    @property
    def genus(self) -> int:
        return sum(p.bit_count() for p in self.parts)

    @property
    def depth(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return format_filtration(self)


@dataclass(frozen=True)
class MExtension:
    m: int
    elements: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "elements", frozenset(self.elements))
        if not is_m_extension(self.elements, self.m):
            raise ValueError(f"not a {self.m}-extension: {sorted(self.elements)}")

    def as_gapset(self) -> Gapset:
        return Gapset(tuple(self.elements))


class FiltrationInvariants(NamedTuple):
    m: int
    genus: int
    depth: int
    frobenius: int
    conductor: int


def _slices(s: Iterable[int], m: int) -> list[int] | None:
    """Residue bitmasks of A_i = A ∩ [im+1, (i+1)m-1]; None if A meets mℕ."""
    slices: list[int] = []
    for x in s:
        i, r = divmod(x, m)
        if r == 0 or x < 1:
            return None
        while len(slices) <= i:
            slices.append(0)
        slices[i] |= 1 << r
    return slices


def is_m_extension(s: Iterable[int], m: int) -> bool:
    if m < 1:
        return False
    slices = _slices(s, m)
    if slices is None:
        return False
    if m == 1:
        return not slices
    if not slices or slices[0] != full_mask(m):
        return False
    return all(not (cur & ~prev) for prev, cur in zip(slices, slices[1:]))


def phi(a: MExtension | Iterable[int], m: int | None = None) -> MFiltration:
    """Shift each slice of an m-extension down to [1, m-1]."""
    if isinstance(a, MExtension):
        m, elems = a.m, a.elements
    else:
        if m is None:
            raise TypeError("m is required when passing a plain set")
        elems = frozenset(a)
        if not is_m_extension(elems, m):
            raise ValueError(f"not a {m}-extension: {sorted(elems)}")
    slices = _slices(elems, m) or []
    while slices and slices[-1] == 0:
        slices.pop()
    return MFiltration(m, tuple(slices))


def tau(f: MFiltration) -> MExtension:
    m = f.m
    elems = frozenset(i * m + r for i, p in enumerate(f.parts) for r in _bits(p))
    return MExtension(m, elems)


def gapset_of(f: MFiltration) -> Gapset:
    return Gapset(tuple(i * f.m + r for i, p in enumerate(f.parts) for r in _bits(p)))


def gapset_filtration(g) -> MFiltration:
    """The filtration associated to a gapset (its own multiplicity is used)."""
    g = g if isinstance(g, Gapset) else Gapset(tuple(g))
    return phi(g.elements, multiplicity(g))


def filtration_invariants(f: MFiltration) -> FiltrationInvariants:
    if not f.parts:
        return FiltrationInvariants(1, 0, 0, -1, 0)
    m = f.m
    q = f.depth
    frob = (q - 1) * m + (f.parts[-1].bit_length() - 1)
    return FiltrationInvariants(m, f.genus, q, frob, frob + 1)


def is_gapset_filtration(f: MFiltration) -> bool:
    return is_gapset(gapset_of(f))


def iter_m_filtrations(m: int, max_genus: int) -> Iterator[MFiltration]:
    """Every m-filtration of genus at most ``max_genus``, depth first."""
    if m == 1:
        yield MFiltration(1, ())
        return
    full = full_mask(m)
    if m - 1 > max_genus:
        return

    def extend(parts, budget):
        yield MFiltration(m, tuple(parts))
        last = parts[-1]
        sub = last
        while sub:
            size = sub.bit_count()
            if size <= budget:
                parts.append(sub)
                yield from extend(parts, budget - size)
                parts.pop()
            sub = (sub - 1) & last

    yield from extend([full], max_genus - (m - 1))


def _part_text(mask: int, wide: bool) -> str:
    sep = "," if wide else ""
    return sep.join(str(r) for r in _bits(mask))


def format_filtration(f: MFiltration) -> str:
    """``1234|12|1``; comma-separated parts once m exceeds 10."""
    wide = f.m > 10
    return "|".join(_part_text(p, wide) for p in f.parts)


def parse_filtration(text: str, m: int | None = None) -> MFiltration:
    text = text.strip()
    if not text:
        return MFiltration(1, ())
    raw = text.split("|")
    wide = "," in raw[0]
    sets = []
    for part in raw:
        if wide:
            sets.append([int(tok) for tok in part.split(",") if tok])
        else:
            sets.append([int(ch) for ch in part])
    if m is None:
        m = max(sets[0]) + 1
    return MFiltration.from_sets(m, sets)
