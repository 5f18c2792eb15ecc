import math

import pytest

from bipyramid.errors import LimitExceededError
from bipyramid.services.decomposition import signature_sizes
from bipyramid.services.enumeration import (
    census_rows,
    enumerate_crossings,
    extremal_stats,
    is_reflection_representative,
    verify_classification,
)
from bipyramid.services.realization import admissible_sequences, realize
from bipyramid.services.volume import V_OCT, bound_table, maxvol
from bipyramid.workers.census import census_partition, run_census_partitions


def _counts(census):
    return {entry.signature: entry.count for entry in census.entries}


def test_census_n2():
    census = enumerate_crossings(2)
    assert census.total == 1
    assert _counts(census) == {(4,): 1}


def test_census_n3():
    census = enumerate_crossings(3)
    assert census.total == 2
    assert _counts(census) == {(4, 4): 2}
    assert census.reflection_classes == 1


def test_census_n4():
    census = enumerate_crossings(4)
    assert census.total == 6
    assert _counts(census) == {(4, 4, 4): 4, (4, 8, 4): 2}
    assert census.reflection_classes == 3
    levels = {entry.signature: entry.levels for entry in census.entries}
    assert levels[(4, 8, 4)] == [(1, 3, 2, 4), (1, 4, 2, 3)]


def test_census_n4_folded():
    census = enumerate_crossings(4, fold_reflections=True)
    assert census.folded
    assert census.total == 6
    assert sum(entry.count for entry in census.entries) == census.reflection_classes == 3
    assert _counts(census) == {(4, 4, 4): 2, (4, 8, 4): 1}


@pytest.mark.parametrize("n", range(2, 8))
def test_census_total_is_factorial(n):
    census = enumerate_crossings(n)
    assert census.total == math.factorial(n - 1)
    assert sum(entry.count for entry in census.entries) == census.total


def test_census_rows_are_lexicographic():
    rows = census_rows(enumerate_crossings(5))
    assert len(rows) == 24
    assert [levels for levels, _ in rows] == sorted(levels for levels, _ in rows)
    assert ((1, 3, 5, 2, 4), (4, 8, 8, 4)) in rows


def test_reflection_representative():
    assert is_reflection_representative((1, 2, 3, 4))
    assert not is_reflection_representative((1, 4, 3, 2))
    assert is_reflection_representative((1, 3, 2, 4))


@pytest.mark.parametrize("n", [1, 13])
def test_census_limits(n):
    with pytest.raises(LimitExceededError):
        enumerate_crossings(n)


def test_census_cap_from_environment(monkeypatch):
    monkeypatch.setenv("BIPYR_CENSUS_MAX_N", "5")
    with pytest.raises(LimitExceededError, match="BIPYR_CENSUS_MAX_N"):
        enumerate_crossings(6)


# ==================== 分類 ====================

@pytest.mark.parametrize("n", range(2, 9))
def test_classification(n):
    report = verify_classification(n)
    assert report.ok
    assert report.achieved == report.admissible


def test_classification_n5():
    report = verify_classification(5)
    assert set(report.achieved) == {(4, 4, 4, 4), (4, 8, 4, 4), (4, 4, 8, 4), (4, 8, 8, 4)}


@pytest.mark.parametrize("n", range(2, 13))
def test_identity_levels_give_all_fours(n):
    assert signature_sizes(tuple(range(1, n + 1))) == (4,) * (n - 1)


@pytest.mark.parametrize("n", range(2, 9))
def test_realized_witness_appears_in_census(n):
    witnesses = {entry.signature: set(entry.levels) for entry in enumerate_crossings(n).entries}
    for sequence in admissible_sequences(n - 1):
        assert realize(sequence).levels in witnesses[sequence]


@pytest.mark.parametrize("n", range(2, 9))
def test_every_crossing_within_octahedral_bound(n):
    census = enumerate_crossings(n)
    ceiling = math.comb(n, 2) * V_OCT
    assert sum(len(entry.levels) for entry in census.entries) == math.factorial(n - 1)
    for entry in census.entries:
        assert math.fsum(maxvol(m) for m in entry.signature) <= ceiling + 1e-9


# ==================== 極値 ====================

@pytest.mark.parametrize("n", range(3, 8))
def test_extremal_stats(n):
    report = extremal_stats(n)
    assert report.min_mccb == pytest.approx((n - 1) * V_OCT)
    assert report.max_mccb == pytest.approx(bound_table([n])[0].worst_mccb)


def test_extremal_n5_maximum():
    report = extremal_stats(5)
    assert (1, 3, 5, 2, 4) in report.max_levels
    assert (1, 2, 3, 4, 5) in report.min_levels
    assert report.max_mccb == pytest.approx(23.0377, abs=1e-2)


# ==================== ワーカー ====================

def test_partition_covers_second_level():
    rows = census_partition(4, 3)
    assert [levels for levels, _ in rows] == [(1, 3, 2, 4), (1, 3, 4, 2)]


@pytest.mark.slow
def test_parallel_matches_serial():
    assert run_census_partitions(7, workers=2) == run_census_partitions(7, workers=1)


def test_parallel_census_from_settings(monkeypatch):
    monkeypatch.setenv("BIPYR_CENSUS_WORKERS", "2")
    assert enumerate_crossings(5) == enumerate_crossings(5, workers=1)
