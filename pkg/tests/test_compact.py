from itertools import permutations, product

import pytest
from hypothesis import given, strategies as st

from gapsets.compact import (
    CompactForm,
    compact_form,
    expand,
    format_compact,
    kunz_coordinates,
    kunz_of_semigroup,
    parse_compact,
    semigroup_of,
)
from gapsets.core import complement
from gapsets.filtration import MFiltration, gapset_of, iter_m_filtrations

EX4 = CompactForm(5, (3, 4, 2, 1), (1, 0, 1, 1))
EX_FILT = MFiltration.from_sets(5, [{1, 2, 3, 4}, {1, 2}, {1}])


def F(m, *sets):
    return MFiltration.from_sets(m, sets)


def test_expand_worked_example():
    assert expand(EX4) == EX_FILT
    assert expand(CompactForm(5, (4, 3, 2, 1), (1, 0, 1, 1))) == EX_FILT
    assert CompactForm(5, (4, 3, 2, 1), (1, 0, 1, 1)) == EX4


@pytest.mark.parametrize("r, s", [(1, 0), (2, 3), (4, 1)])
def test_expand_m3(r, s):
    assert expand(CompactForm(3, (1, 2), (r, s))) == F(3, *[{1, 2}] * r, *[{2}] * s)


def test_compact_form_examples():
    c = compact_form(EX_FILT)
    assert (c.sigma, c.e) == ((3, 4, 2, 1), (1, 0, 1, 1))
    c = compact_form(F(3, {1, 2}))
    assert (c.sigma, c.e) == ((1, 2), (1, 0))
    c = compact_form(F(4, {1, 2, 3}, {2}))
    assert (c.sigma, c.e) == ((1, 3, 2), (1, 0, 1))
    c = compact_form(MFiltration(1, ()))
    assert (c.m, c.sigma, c.e) == (1, (), ())


def test_compact_form_is_lexicographically_smallest():
    for m in range(2, 6):
        for f in iter_m_filtrations(m, 9):
            c = compact_form(f)
            valid = [s for s in permutations(range(1, m)) if expand(CompactForm(m, s, c.e)) == f]
            assert c.sigma == min(valid)


def test_round_trip_and_genus():
    for m in range(1, 7):
        for f in iter_m_filtrations(m, 12):
            c = compact_form(f)
            assert expand(c) == f
            assert c.genus == f.genus


def test_semigroup_examples():
    assert semigroup_of(EX4).small_elements == (0, 5, 8, 9, 10, 12)
    for g in range(1, 7):
        s = semigroup_of(CompactForm(2, (1,), (g,)))
        assert s.small_elements == tuple(range(0, 2 * g + 1, 2))
    assert semigroup_of(CompactForm(3, (1, 2), (1, 0))).small_elements == (0, 3)
    assert semigroup_of(CompactForm(1, (), ())).small_elements == (0,)


def _forms(max_m, max_sum):
    for m in range(2, max_m + 1):
        for e in product(range(max_sum + 1), repeat=m - 1):
            if e[0] >= 1 and sum(e) <= max_sum:
                for sigma in permutations(range(1, m)):
                    yield CompactForm(m, sigma, e)


def test_complement_formula_and_kunz_agree_with_direct_computation():
    for c in _forms(6, 6):
        s = semigroup_of(c)
        assert s == complement(gapset_of(expand(c)))
        assert kunz_of_semigroup(s) == kunz_coordinates(c)


def test_kunz_examples():
    k = kunz_coordinates(EX4)
    assert (k[3], k[4], k[2], k[1]) == (1, 1, 2, 3)
    assert k.k == (3, 2, 1, 1)
    assert kunz_of_semigroup(semigroup_of(EX4)) == k
    assert kunz_coordinates(CompactForm(3, (1, 2), (1, 0))).k == (1, 1)
    for a, b, c in product(range(1, 4), range(3), range(3)):
        assert kunz_coordinates(CompactForm(4, (1, 2, 3), (a, b, c))).k == (a, a + b, a + b + c)
    assert kunz_of_semigroup(complement(())).k == ()


def test_sigma_ambiguity_does_not_change_derived_values():
    for m in range(3, 6):
        for e in product(range(3), repeat=m - 1):
            if e[0] < 1:
                continue
            groups = {}
            for sigma in permutations(range(1, m)):
                c = CompactForm(m, sigma, e)
                groups.setdefault(expand(c), []).append(c)
            for forms in groups.values():
                values = {(semigroup_of(c), kunz_coordinates(c), c.genus) for c in forms}
                assert len(values) == 1


def test_validation():
    with pytest.raises(ValueError):
        CompactForm(4, (1, 2, 3), (0, 1, 1))
    with pytest.raises(ValueError):
        CompactForm(4, (1, 2, 2), (1, 1, 1))
    with pytest.raises(ValueError):
        CompactForm(4, (1, 2, 3), (1, 1))


def test_text_format():
    assert format_compact(EX4) == "m=5;sigma=3,4,2,1;e=1,0,1,1"
    c = parse_compact("m=5;sigma=3,4,2,1;e=1,0,1,1")
    assert (c.m, c.sigma, c.e) == (5, (3, 4, 2, 1), (1, 0, 1, 1))
    with pytest.raises(ValueError):
        parse_compact("m=5;sigma=3,4,2,1")


@given(st.integers(2, 7).flatmap(lambda m: st.tuples(
    st.just(m),
    st.permutations(list(range(1, m))),
    st.lists(st.integers(0, 4), min_size=m - 2, max_size=m - 2),
    st.integers(1, 4),
)))
def test_expand_then_compact_is_stable(args):
    m, sigma, tail, e0 = args
    c = CompactForm(m, tuple(sigma), (e0, *tail))
    canon = compact_form(expand(c))
    assert canon == c
    assert canon.e == c.e
    assert compact_form(expand(canon)).sigma == canon.sigma
