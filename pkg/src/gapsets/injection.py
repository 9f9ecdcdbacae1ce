"""Insertion maps and the genus-raising injections for multiplicities 3 and 4.

``insert(F, i)`` puts residue ``i`` into the first part of ``F`` that lacks
it, or appends ``{i}`` when every part already has it.  For m = 3 the map
``f_1`` is used when g mod 3 is 0 or 2 and ``f_2`` otherwise; for m = 4,
``f_1`` for even g and ``f_3`` for odd g.  Images are always re-checked,
so a wrong claim surfaces as :class:`InjectionContractError`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from gapsets.enumeration import enumerate_compact
from gapsets.filtration import MFiltration, format_filtration, is_gapset_filtration


class InjectionContractError(RuntimeError):
    """An insertion map sent a gapset filtration outside the gapset filtrations."""

    def __init__(self, source: MFiltration, image: MFiltration, residue: int):
        self.source = source
        self.image = image
        self.residue = residue
        super().__init__(
            f"f_{residue}({format_filtration(source)}) = {format_filtration(image)} "
            "is not a gapset filtration"
        )


def insert(f: MFiltration, i: int) -> MFiltration:
    m = f.m
    if not 1 <= i <= m - 1:
        raise ValueError(f"residue {i} outside [1, {m - 1}]")
    bit = 1 << i
    parts = list(f.parts)
    for j, p in enumerate(parts):
        if not p & bit:
            parts[j] = p | bit
            break
    else:
        parts.append(bit)
    return MFiltration(m, tuple(parts))


def residue_for(m: int, genus: int) -> int:
    """Which insertion map the injection uses at this genus."""
    if m == 3:
        return 1 if genus % 3 in (0, 2) else 2
    if m == 4:
        return 1 if genus % 2 == 0 else 3
    raise ValueError(f"no injection is defined for multiplicity {m}")


def _inject(f: MFiltration, m: int) -> MFiltration:
    if f.m != m:
        raise ValueError(f"expected a {m}-filtration, got multiplicity {f.m}")
    if not is_gapset_filtration(f):
        raise ValueError(f"{format_filtration(f)} is not a gapset filtration")
    i = residue_for(m, f.genus)
    image = insert(f, i)
    if not is_gapset_filtration(image):
        raise InjectionContractError(f, image, i)
    return image


def inject_m3(f: MFiltration) -> MFiltration:
    return _inject(f, 3)


def inject_m4(f: MFiltration) -> MFiltration:
    return _inject(f, 4)


@dataclass
class InjectionReport:
    genus: int
    multiplicity: int
    map_used: str
    domain_size: int
    image_size: int
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and self.image_size == self.domain_size

    def to_dict(self) -> dict:
        return {
            "m": self.multiplicity,
            "g": self.genus,
            "map": self.map_used,
            "domain": self.domain_size,
            "image": self.image_size,
            "failures": list(self.failures),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def failure_set(domain, i: int) -> list[MFiltration]:
    """Members of ``domain`` that ``insert(., i)`` sends outside the gapset filtrations."""
    return [f for f in domain if not is_gapset_filtration(insert(f, i))]


def verify_injection(m: int, genus: int) -> InjectionReport:
    """Apply the injection to every gapset filtration of (genus, m) and check the images."""
    i = residue_for(m, genus)
    domain = enumerate_compact(m, genus)
    failures = []
    images = set()
    for f in domain:
        image = insert(f, i)
        if image.genus != genus + 1 or not is_gapset_filtration(image):
            failures.append(format_filtration(f))
        images.add(image.parts)
    return InjectionReport(genus, m, f"f_{i}", len(domain), len(images), failures)
