import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bipyramid.errors import InvariantViolation
from bipyramid.schemas.diagram import Crossing
from bipyramid.services.decomposition import (
    canonical_levels,
    corner_contribution,
    corner_sum,
    crossing_signature,
    crossing_tetrahedron_count,
    dual_consistency_check,
    face_sizes,
    flip_levels,
    reflect_levels,
    signature_by_count,
    signature_sizes,
)
from bipyramid.services.examples import builtin_examples, get_example
from tests.conftest import random_diagram


@st.composite
def level_sequences(draw, min_size=2, max_size=9):
    n = draw(st.integers(min_size, max_size))
    return tuple(draw(st.permutations(range(1, n + 1))))


# ==================== クロッシング中心 ====================

@pytest.mark.parametrize(
    "levels, sizes",
    [
        ((1, 2), (4,)),
        ((1, 2, 3), (4, 4)),
        ((1, 3, 2), (4, 4)),
        ((1, 3, 2, 4), (4, 8, 4)),
        ((1, 4, 2, 3), (4, 8, 4)),
        ((1, 2, 3, 4), (4, 4, 4)),
        ((1, 3, 5, 2, 4), (4, 8, 8, 4)),
    ],
)
def test_signature_examples(levels, sizes):
    assert crossing_signature(Crossing(id=0, levels=levels)).sizes == sizes
    assert signature_by_count(levels) == sizes


@pytest.mark.parametrize(
    "levels, count",
    [
        ((1, 2), 4),
        ((1, 3, 2, 4), 16),
        ((1, 3, 5, 2, 4), 24),
    ],
)
def test_tetrahedron_count(levels, count):
    assert crossing_tetrahedron_count(Crossing(id=0, levels=levels)) == count


def test_degenerate_seed_has_empty_signature():
    assert signature_sizes((1,)) == ()


def test_verification_catches_wrong_form(monkeypatch):
    monkeypatch.setattr(
        "bipyramid.services.decomposition.signature_by_count",
        lambda levels: tuple(0 for _ in levels[1:]),
    )
    with pytest.raises(InvariantViolation, match="direct count"):
        crossing_signature(Crossing(id=3, levels=(1, 2, 3)))


def test_verification_can_be_switched_off(monkeypatch):
    monkeypatch.setenv("BIPYR_VERIFY_CONSTRUCTIONS", "false")
    monkeypatch.setattr(
        "bipyramid.services.decomposition.signature_by_count",
        lambda levels: pytest.fail("literal count should not run"),
    )
    assert crossing_signature(Crossing(id=0, levels=(1, 2, 3))).sizes == (4, 4)


@pytest.mark.property_based
@given(level_sequences())
@settings(max_examples=200)
def test_signature_properties(levels):
    sizes = signature_sizes(levels)
    n = len(levels)
    assert len(sizes) == n - 1
    assert sizes == signature_by_count(levels)
    assert sizes[0] == 4 and sizes[-1] == 4
    assert all(m > 0 and m % 2 == 0 for m in sizes)
    assert sum(sizes) == corner_sum(levels)


@pytest.mark.property_based
@given(level_sequences(), st.integers(0, 20))
@settings(max_examples=100)
def test_signature_invariant_under_rotation(levels, offset):
    n = len(levels)
    rotated = tuple(levels[(k + offset) % n] for k in range(n))
    assert signature_sizes(rotated) == signature_sizes(levels)
    assert canonical_levels(rotated) == canonical_levels(levels)


@pytest.mark.property_based
@given(level_sequences())
@settings(max_examples=100)
def test_reflection_keeps_signature_and_flip_reverses_it(levels):
    sizes = signature_sizes(levels)
    assert signature_sizes(reflect_levels(levels)) == sizes
    assert signature_sizes(flip_levels(levels)) == sizes[::-1]
    assert reflect_levels(reflect_levels(levels)) == canonical_levels(levels)


# ==================== 面中心 ====================

def test_corner_contribution():
    crossing = Crossing(id=0, levels=(1, 3, 5, 2, 4))
    assert corner_contribution(crossing, 2) == 3
    assert corner_contribution(crossing, 4) == 3
    # 最後のスロットの次は 0
    assert corner_contribution(crossing, 9) == 3
    assert corner_contribution(crossing, 0) == 2


@pytest.mark.parametrize(
    "name, sizes",
    [
        ("trefoil", [2, 2, 2, 3, 3]),
        ("figure-eight", [2, 2, 3, 3, 3, 3]),
        ("fig8-ubercrossing", [2, 2, 2, 3, 3, 12]),
        ("square-weave", [4, 4, 4, 4]),
        ("triple-weave", [4, 4, 4, 4]),
        ("right-triangle-weave", [4, 4, 4, 4]),
        ("unknot-curl", [1, 1, 2]),
    ],
)
def test_face_sizes(name, sizes):
    records = face_sizes(get_example(name))
    assert sorted(r.size for r in records) == sizes
    assert all(r.size == sum(r.contributions) for r in records)


@pytest.mark.parametrize(
    "name, total",
    [
        ("trefoil", 12),
        ("fig8-ubercrossing", 24),
        ("square-weave", 16),
        ("triple-weave", 16),
        ("right-triangle-weave", 16),
        ("unknot-curl", 4),
    ],
)
def test_dual_totals(name, total):
    report = dual_consistency_check(get_example(name))
    assert report.face_total == total
    assert report.crossing_total == total


def test_dual_conservation_on_examples():
    for d in builtin_examples().values():
        report = dual_consistency_check(d)
        assert report.face_total == report.crossing_total
        assert all(b.corner_sum == b.signature_sum for b in report.per_crossing)


@pytest.mark.parametrize("seed", range(100))
def test_dual_conservation_on_random_diagrams(seed):
    d = random_diagram(seed)
    report = dual_consistency_check(d)
    assert report.face_total == report.crossing_total
    assert sum(r.size for r in face_sizes(d)) == report.face_total


def test_dual_mismatch_names_the_crossing(monkeypatch):
    monkeypatch.setattr(
        "bipyramid.services.decomposition.corner_contribution",
        lambda crossing, arrival: 0,
    )
    with pytest.raises(InvariantViolation, match="crossing 0"):
        dual_consistency_check(get_example("trefoil"))
