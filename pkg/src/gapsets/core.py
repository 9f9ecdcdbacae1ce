"""Gapsets and numerical semigroups.

A gapset is a finite set ``G`` of positive integers such that whenever
``z = x + y`` with ``z`` in ``G`` and ``x, y >= 1``, at least one of ``x``,
``y`` lies in ``G``.  Its complement in the nonnegative integers is a
numerical semigroup, and every numerical semigroup arises this way.

Values here are plain immutable containers.  A :class:`Gapset` does not
check the gapset property on construction; use :func:`is_gapset` for that.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

#: Practical genus ceiling for everything in this package.  Enumeration
#: cost grows roughly like 1.618**g, so the default CLI cap sits below it.
MAX_SUPPORTED_GENUS = 60


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _to_mask(elements: Iterable[int]) -> int:
    mask = 0
    for x in elements:
        mask |= 1 << x
    return mask


@dataclass(frozen=True)
class Gapset:
    """Finite set of positive integers, stored sorted."""

    elements: tuple[int, ...] = ()

    def __post_init__(self):
        elems = tuple(sorted(self.elements))
        for a, b in zip(elems, elems[1:]):
            if a == b:
                raise ValueError(f"duplicate element {a}")
        if elems and elems[0] < 1:
            raise ValueError(f"gaps must be positive, got {elems[0]}")
        object.__setattr__(self, "elements", elems)

    @classmethod
    def of(cls, *elements: int) -> "Gapset":
        return cls(tuple(elements))

    @property
    def mask(self) -> int:
        return _to_mask(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self.elements

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __str__(self) -> str:
        return format_gapset(self)


@dataclass(frozen=True)
class NumericalSemigroup:
    """Semigroup given by its elements up to and including the conductor.

    Every integer at or above ``small_elements[-1]`` is implicitly a member.
    """

    small_elements: tuple[int, ...] = (0,)

    def __post_init__(self):
        elems = tuple(sorted(set(self.small_elements)))
        if not elems or elems[0] != 0:
            raise ValueError("a numerical semigroup must contain 0")
        c = elems[-1]
        if c > 0 and c - 1 in elems:
            # normalise so that the last stored element is the conductor
            gaps = set(range(c + 1)) - set(elems)
            c = max(gaps) + 1 if gaps else 0
            elems = tuple(x for x in elems if x <= c)
        object.__setattr__(self, "small_elements", elems)

    @property
    def conductor(self) -> int:
        return self.small_elements[-1]

    @property
    def multiplicity(self) -> int:
        if len(self.small_elements) == 1:
            return 1
        return self.small_elements[1]

    def __contains__(self, x: object) -> bool:
        if not isinstance(x, int) or x < 0:
            return False
        return x >= self.conductor or x in self.small_elements

    def gaps(self) -> Gapset:
        members = set(self.small_elements)
        return Gapset(tuple(x for x in range(1, self.conductor) if x not in members))

    def is_addition_stable(self) -> bool:
        """Check closure under addition on the pairs that can matter (sums below the conductor)."""
        c = self.conductor
        elems = self.small_elements
        members = set(elems)
        for i, a in enumerate(elems[1:], start=1):
            for b in elems[i:]:
                s = a + b
                if s >= c:
                    break
                if s not in members:
                    return False
        return True


@dataclass(frozen=True)
class CanonicalPartition:
    m: int
    parts: tuple[frozenset[int], ...]

    @property
    def depth(self) -> int:
        return len(self.parts)


def is_gapset(s: Iterable[int]) -> bool:
    """Return True when every two-part decomposition of a member has a member summand."""
    gaps = s.mask if isinstance(s, Gapset) else _to_mask(s)
    if gaps & 1:
        raise ValueError("gapset elements must be positive")
    if not gaps:
        return True
    top = gaps.bit_length() - 1
    # positive non-gaps strictly below max(G); a bad z = x + y needs x, y among them
    holes = ~gaps & ((1 << top) - 1) & ~1
    for x in _bits(holes):
        if gaps & (holes << x):
            return False
    return True


def _as_gapset(g) -> Gapset:
    return g if isinstance(g, Gapset) else Gapset(tuple(g))


def multiplicity(g) -> int:
    elems = set(_as_gapset(g).elements)
    m = 1
    while m in elems:
        m += 1
    return m


def frobenius(g) -> int:
    elems = _as_gapset(g).elements
    return elems[-1] if elems else -1


def conductor(g) -> int:
    return frobenius(g) + 1


def genus(g) -> int:
    return len(_as_gapset(g).elements)


def depth(g) -> int:
    c = conductor(g)
    m = multiplicity(g)
    return -(-c // m)


def canonical_partition(g) -> CanonicalPartition:
    """Slice a gapset of multiplicity m into G_i = G ∩ [im+1, (i+1)m-1]."""
    g = _as_gapset(g)
    m = multiplicity(g)
    q = depth(g)
    parts = [set() for _ in range(q)]
    for x in g.elements:
        i, r = divmod(x, m)
        if r == 0:
            raise ValueError(f"{x} is a multiple of the multiplicity {m}")
        parts[i].add(x)
    return CanonicalPartition(m, tuple(frozenset(p) for p in parts))


def complement(g) -> NumericalSemigroup:
    g = _as_gapset(g)
    c = conductor(g)
    members = set(g.elements)
    return NumericalSemigroup(tuple(x for x in range(c + 1) if x not in members))


def minimal_generators(s: NumericalSemigroup) -> frozenset[int]:
    """Minimal generating set, found by sieving out sums of two nonzero elements.

    Every minimal generator is at most ``c + m``, so the sieve stops there.
    """
    c = s.conductor
    m = s.multiplicity
    top = c + m
    nonzero = [x for x in range(1, top + 1) if x in s]
    decomposable = set()
    for i, a in enumerate(nonzero):
        for b in nonzero[i:]:
            if a + b > top:
                break
            decomposable.add(a + b)
    return frozenset(x for x in nonzero if x not in decomposable)


def embedding_dimension(s: NumericalSemigroup) -> int:
    return len(minimal_generators(s))


def parse_gapset(text: str) -> Gapset:
    """Parse ``"1,2,3,4,6,7,11"``; the empty string is the empty gapset."""
    text = text.strip()
    if not text:
        return Gapset()
    try:
        return Gapset(tuple(int(tok) for tok in text.split(",")))
    except ValueError as exc:
        raise ValueError(f"bad gapset text {text!r}: {exc}") from None


def format_gapset(g) -> str:
    return ",".join(str(x) for x in _as_gapset(g).elements)
