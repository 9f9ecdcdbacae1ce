from collections import Counter
from itertools import permutations, product

import pytest

from gapsets.admissibility import is_admissible
from gapsets.compact import CompactForm, expand
from gapsets.enumeration import (
    ResourceLimitError,
    canonical_sigmas,
    count_compact,
    count_table,
    enumerate_compact,
    enumerate_tree,
    exponent_vectors,
    tree_counts,
)
from gapsets.filtration import MFiltration, format_filtration
from gapsets.tables import N_G, N_GM, N_PRIME_G

from conftest import naive_gapsets, naive_multiplicity


def F(m, *sets):
    return MFiltration.from_sets(m, sets)


def test_tree_first_levels():
    levels = dict(enumerate_tree(2))
    assert [s.small_elements for s in levels[0]] == [(0,)]
    assert [s.small_elements for s in levels[1]] == [(0, 2)]
    # <2,5> = {0,2,4,...} and <3,4,5> = {0,3,...}, sorted by small elements
    assert [s.small_elements for s in levels[2]] == [(0, 2, 4), (0, 3)]


def test_tree_counts_match_published():
    t = tree_counts(15)
    assert t.total == list(N_G)
    assert t.generic == list(N_PRIME_G)
    assert [t.by_multiplicity.get((g, 4), 0) for g in range(2, 6)] == [0, 1, 3, 4]
    assert [t.by_multiplicity.get((4, m), 0) for m in range(2, 6)] == [1, 2, 3, 1]


@pytest.mark.parametrize("g", range(0, 10))
def test_tree_matches_subset_brute_force(g):
    levels = dict(enumerate_tree(g))
    tree = sorted(s.gaps().elements for s in levels[g])
    brute = sorted(naive_gapsets(g))
    assert tree == brute


def test_tree_each_semigroup_once_and_sorted():
    for g, level in enumerate_tree(12):
        keys = [s.small_elements for s in level]
        assert keys == sorted(keys)
        assert len(set(keys)) == len(keys)
        assert all(len(s.gaps()) == g for s in level)


def test_tree_parallel_is_deterministic():
    serial = [(g, [s.small_elements for s in lvl]) for g, lvl in enumerate_tree(13)]
    parallel = [(g, [s.small_elements for s in lvl]) for g, lvl in enumerate_tree(13, jobs=3)]
    assert serial == parallel


def test_resource_cap(monkeypatch):
    with pytest.raises(ResourceLimitError):
        next(enumerate_tree(36))
    monkeypatch.setenv("GAPSETS_MAX_GENUS", "5")
    with pytest.raises(ResourceLimitError):
        tree_counts(6)
    assert tree_counts(5).total == list(N_G[:6])


def test_exponent_vectors_against_product():
    for m in range(2, 6):
        for g in range(0, 11):
            weights = [m - 1 - i for i in range(m - 1)]
            brute = {
                e for e in product(range(g + 1), repeat=m - 1)
                if e[0] >= 1 and sum(x * w for x, w in zip(e, weights)) == g
            }
            got = list(exponent_vectors(m, g))
            assert len(got) == len(set(got))
            assert set(got) == brute
            # colex: compare reversed tuples
            assert [e[::-1] for e in got] == sorted(e[::-1] for e in got)


def test_canonical_sigmas_cover_every_filtration_once():
    for m in range(2, 6):
        for e in product(range(3), repeat=m - 1):
            if e[0] < 1:
                continue
            canon = [expand(CompactForm(m, s, e)) for s in canonical_sigmas(m, e)]
            every = {expand(CompactForm(m, s, e)) for s in permutations(range(1, m))}
            assert len(canon) == len(set(canon))
            assert set(canon) == every


def test_compact_enumeration_equals_full_permutation_scan():
    for m in range(2, 6):
        for g in range(0, 11):
            full = set()
            for e in exponent_vectors(m, g):
                for sigma in permutations(range(1, m)):
                    c = CompactForm(m, sigma, e)
                    if is_admissible(c):
                        full.add(expand(c))
            assert set(enumerate_compact(m, g)) == full


def test_compact_examples():
    assert enumerate_compact(4, 4) == [F(4, {1, 2, 3}, {1}), F(4, {1, 2, 3}, {2}), F(4, {1, 2, 3}, {3})]
    assert [format_filtration(f) for f in enumerate_compact(3, 6)] == ["12|12|1|1", "12|12|12", "12|12|2|2"]
    for g in range(1, 12):
        assert enumerate_compact(2, g) == [F(2, *[{1}] * g)]
    assert enumerate_compact(1, 0) == [MFiltration(1, ())]
    assert enumerate_compact(1, 3) == []
    assert enumerate_compact(5, 3) == []


def test_cross_method_agreement():
    tree = tree_counts(15).by_multiplicity
    for m in range(1, 8):
        for g in range(0, 16):
            assert count_compact(m, g) == tree.get((g, m), 0), (g, m)


def test_compact_matches_brute_force_sets():
    from gapsets.filtration import gapset_of

    for g in range(0, 9):
        by_m = Counter(naive_multiplicity(gaps) for gaps in naive_gapsets(g))
        for m in range(1, g + 2):
            got = {gapset_of(f).elements for f in enumerate_compact(m, g)}
            want = {gaps for gaps in naive_gapsets(g) if naive_multiplicity(gaps) == m}
            assert got == want
            assert len(got) == by_m.get(m, 0)


def test_count_table():
    t = count_table(14, 6)
    for m, row in N_GM.items():
        assert t.row(m) == list(row)
    assert t.count(14, 6) == 106
    full = count_table(15)
    for g in range(16):
        assert sum(full.count(g, m) for m in range(1, g + 2)) == full.total[g]
        for m in range(g + 2, 17):
            assert full.count(g, m) == 0


def test_monotone_for_m3_m4():
    for m in (3, 4):
        counts = [count_compact(m, g) for g in range(32)]
        assert all(a <= b for a, b in zip(counts, counts[1:]))


def test_table_emitters():
    t = count_table(3, 3)
    assert t.multiplicity_csv([3]) == "genus,multiplicity,count\n0,3,0\n1,3,0\n2,3,1\n3,3,2\n"
    assert t.totals_csv() == "genus,n_g,n_prime_g\n0,1,1\n1,1,1\n2,2,2\n3,4,4\n"
    d = t.to_dict()
    assert d["n_g"] == [1, 1, 2, 4]
    assert d["n_gm"]["2"] == [0, 1, 1, 1]
    assert "n'_g" in t.to_text()
