"""Gapsets of numerical semigroups, gapset filtrations and their compact encoding."""

from gapsets.admissibility import is_admissible, is_admissible_m3, is_admissible_m4
from gapsets.compact import (
    CompactForm,
    KunzVector,
    compact_form,
    expand,
    kunz_coordinates,
    kunz_of_semigroup,
    semigroup_of,
)
from gapsets.core import (
    CanonicalPartition,
    Gapset,
    NumericalSemigroup,
    canonical_partition,
    complement,
    conductor,
    depth,
    frobenius,
    genus,
    is_gapset,
    minimal_generators,
    multiplicity,
)
from gapsets.enumeration import CountTable, count_table, enumerate_compact, enumerate_tree
from gapsets.filtration import (
    MExtension,
    MFiltration,
    filtration_invariants,
    is_gapset_filtration,
    is_m_extension,
    phi,
    tau,
)
from gapsets.injection import InjectionReport, inject_m3, inject_m4, insert, verify_injection

__version__ = "0.1.0"
