import pytest

from cycleshuffles.lacunar import (
    enumerate_lacunar,
    fibonacci,
    format_subset,
    is_lacunar,
    lacunar_masks,
    locate_interval,
    m_value,
    m_vector,
    non_shadow,
)


def test_fibonacci_convention():
    assert [fibonacci(m) for m in range(10)] == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34]


def test_is_lacunar_examples():
    assert is_lacunar({1, 4, 6})
    assert not is_lacunar({1, 4, 5})
    assert is_lacunar(set())


def test_lacunar_predicate_matches_shift_characterization():
    # lacunar iff the set misses its own shift by one
    for n in range(1, 13):
        for mask in range(1 << (n - 1)):
            members = {i + 1 for i in range(n - 1) if mask >> i & 1}
            assert is_lacunar(members) == (not members & {i - 1 for i in members})


def test_counts_match_fibonacci():
    for n in range(1, 21):
        assert len(lacunar_masks(n)) == fibonacci(n + 1)
        assert len(enumerate_lacunar(n)) == fibonacci(n + 1)


def test_catalog_order_small_n():
    assert [sorted(s) for s in enumerate_lacunar(4).sets] == [[], [1], [2], [3], [1, 3]]
    assert [sorted(s) for s in enumerate_lacunar(5).sets] == [
        [], [1], [2], [3], [4], [1, 3], [1, 4], [2, 4]]
    sets6 = [sorted(s) for s in enumerate_lacunar(6).sets]
    assert len(sets6) == 13
    assert sets6[-1] == [1, 3, 5]
    assert sets6 == [
        [], [1], [2], [3], [4], [1, 3], [5], [1, 4], [1, 5], [2, 4], [2, 5], [3, 5], [1, 3, 5]]


def test_catalog_sums_weakly_increase():
    for n in range(1, 15):
        sums = [sum(s) for s in enumerate_lacunar(n).sets]
        assert sums == sorted(sums)


def test_catalog_index_lookup():
    catalog = enumerate_lacunar(5)
    assert catalog[1] == frozenset()
    assert catalog.index_of({1, 3}) == 6
    with pytest.raises(ValueError):
        catalog.index_of({1, 2})
    with pytest.raises(IndexError):
        catalog[9]


def test_m_value_examples():
    assert m_vector({2, 3}, 5) == (1, 0, 0, 2, 1)
    for n in range(1, 8):
        assert m_vector(set(), n) == tuple(n + 1 - ell for ell in range(1, n + 1))
    for ell in (2, 3):
        assert m_value({2, 3}, 5, ell) == 0
    with pytest.raises(ValueError):
        m_value({1}, 4, 5)


def test_m_value_range():
    for n in range(1, 9):
        for mask in range(1 << n):
            members = {i + 1 for i in range(n) if mask >> i & 1}
            for ell in range(1, n + 1):
                assert 0 <= m_value(members, n, ell) <= n + 1 - ell


def test_non_shadow_examples():
    assert non_shadow({2, 3}, 5) == frozenset({4})
    assert non_shadow({1}, 4) == frozenset({2, 3})
    for n in range(1, 8):
        assert non_shadow(set(), n) == frozenset(range(1, n))


def test_locate_interval_examples():
    assert locate_interval({1, 2}, 4) == frozenset({3})
    assert locate_interval({1, 2, 3}, 4) == frozenset()
    assert locate_interval(set(), 4) == frozenset({1, 3})


def test_locate_interval_unique_everywhere_small():
    for n in range(1, 10):
        for mask in range(1 << (n - 1)):
            members = {i + 1 for i in range(n - 1) if mask >> i & 1}
            found = locate_interval(members, n, check_unique=True)
            assert non_shadow(found, n) <= members
            assert not members & found


def test_locate_interval_rejects_oversized_subsets():
    with pytest.raises(ValueError):
        locate_interval({4}, 4)


def test_format_subset():
    assert format_subset({3, 1}) == "{1,3}"
    assert format_subset(set()) == "{}"
