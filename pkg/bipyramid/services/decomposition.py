"""
双対な2つの双角錐分解

面中心: |B_F| = Σ_{角} |l(s_i, c_i) - l(s_{i+1}, c_i)|
クロッシング中心: |B_{c,i}| = 2·#{ j : min(l_j, l_{j+1}) < i + 1/2 < max(l_j, l_{j+1}) }

どちらも同じ四面体の集合を分割するので
Σ_F |B_F| = Σ_c Σ_i |B_{c,i}| = Σ_c 2 Σ_j |l_j - l_{j+1}|
"""
import logging
from itertools import accumulate
from typing import List, Optional, Sequence, Tuple

from bipyramid.config import get_settings
from bipyramid.errors import InvariantViolation
from bipyramid.schemas.diagram import Crossing, Face, MulticrossingDiagram
from bipyramid.schemas.report import (
    CrossingBookkeeping,
    DualityReport,
    FaceSizeRecord,
    Signature,
)
from bipyramid.services.diagram import canonical_rotation, rotate_levels, trace_faces

logger = logging.getLogger(__name__)


# ==================== 高さ列の操作 ====================

def canonical_levels(levels: Sequence[int]) -> Tuple[int, ...]:
    return rotate_levels(levels, canonical_rotation(levels))


def reflect_levels(levels: Sequence[int]) -> Tuple[int, ...]:
    """巡回順を逆にする（鏡映）"""
    levels = canonical_levels(levels)
    return (levels[0],) + tuple(reversed(levels[1:]))


def flip_levels(levels: Sequence[int]) -> Tuple[int, ...]:
    """上下反転 l -> n+1-l"""
    n = len(levels)
    return canonical_levels([n + 1 - level for level in levels])


def adjacent_pairs(levels: Sequence[int]):
    n = len(levels)
    for j in range(n):
        yield levels[j], levels[(j + 1) % n]


# ==================== クロッシング中心 ====================

def signature_sizes(levels: Sequence[int]) -> Tuple[int, ...]:
    """
    クロッシング中心の双角錐サイズ列（差分配列による線形時間版）

    区間 [min, max] は i = min..max-1 の双角錐にそれぞれ 2 ずつ寄与する。
    1本だけの縮退クロッシングでは空の列を返す。
    """
    n = len(levels)
    diff = [0] * (n + 1)
    for a, b in adjacent_pairs(levels):
        lo, hi = (a, b) if a < b else (b, a)
        diff[lo] += 2
        diff[hi] -= 2
    return tuple(accumulate(diff))[1:n]


def signature_by_count(levels: Sequence[int]) -> Tuple[int, ...]:
    """定義どおり区間を数える版（検証用）"""
    n = len(levels)
    sizes = []
    for i in range(1, n):
        mid = i + 0.5
        count = sum(1 for a, b in adjacent_pairs(levels) if min(a, b) < mid < max(a, b))
        sizes.append(2 * count)
    return tuple(sizes)


def corner_sum(levels: Sequence[int]) -> int:
    """2 Σ_j |l_j - l_{j+1}|（クロッシングの周りの角寄与の合計）"""
    return 2 * sum(abs(a - b) for a, b in adjacent_pairs(levels))


def crossing_signature(crossing: Crossing) -> Signature:
    sizes = signature_sizes(crossing.levels)
    if get_settings().verify_constructions:
        expected = signature_by_count(crossing.levels)
        if sizes != expected:
            logger.error(f"Signature mismatch at crossing {crossing.id}: {sizes} != {expected}")
            raise InvariantViolation(
                f"crossing {crossing.id}: difference form {sizes} != direct count {expected}"
            )
    return Signature(sizes=sizes, crossing=crossing.id)


def crossing_tetrahedron_count(crossing: Crossing) -> int:
    """クロッシング中心の双角錐を構成する四面体の数"""
    by_signature = sum(crossing_signature(crossing).sizes)
    by_corners = corner_sum(crossing.levels)
    if by_signature != by_corners:
        logger.error(f"Tetrahedron count mismatch at crossing {crossing.id}")
        raise InvariantViolation(
            f"crossing {crossing.id}: Σ signature = {by_signature} but 2Σ|l_j - l_(j+1)| = {by_corners}"
        )
    return by_signature


# ==================== 面中心 ====================

def corner_contribution(crossing: Crossing, arrival: int) -> int:
    """到着スロットと次のスロットの高さの差"""
    return abs(crossing.level_at_slot(arrival) - crossing.level_at_slot(arrival + 1))


def face_sizes(
    diagram: MulticrossingDiagram,
    faces: Optional[List[Face]] = None,
) -> List[FaceSizeRecord]:
    """各面の面中心双角錐のサイズ |B_F|"""
    if faces is None:
        faces = trace_faces(diagram)
    crossings = diagram.crossing_map()

    records = []
    for face in faces:
        contributions = tuple(
            corner_contribution(crossings[corner.crossing], corner.arrival)
            for corner in face.corners
        )
        records.append(FaceSizeRecord(face=face.index, size=sum(contributions), contributions=contributions))
    return records


def dual_consistency_check(
    diagram: MulticrossingDiagram,
    faces: Optional[List[Face]] = None,
) -> DualityReport:
    """
    両分解の四面体数の一致を確認

    Raises:
        InvariantViolation: 角寄与の和がシグネチャの和と一致しないクロッシングがある
    """
    if faces is None:
        faces = trace_faces(diagram)
    crossings = diagram.crossing_map()

    corner_sums = {c.id: 0 for c in diagram.crossings}
    for face in faces:
        for corner in face.corners:
            corner_sums[corner.crossing] += corner_contribution(crossings[corner.crossing], corner.arrival)

    bookkeeping = []
    for crossing in diagram.crossings:
        signature_sum = crossing_tetrahedron_count(crossing)
        if corner_sums[crossing.id] != signature_sum:
            logger.error(f"Dual mismatch in {diagram.name} at crossing {crossing.id}")
            raise InvariantViolation(
                f"crossing {crossing.id}: face corners give {corner_sums[crossing.id]} "
                f"tetrahedra but its signature gives {signature_sum}"
            )
        bookkeeping.append(
            CrossingBookkeeping(
                crossing=crossing.id,
                corner_sum=corner_sums[crossing.id],
                signature_sum=signature_sum,
            )
        )

    face_total = sum(corner_sums.values())
    crossing_total = sum(b.signature_sum for b in bookkeeping)
    return DualityReport(face_total=face_total, crossing_total=crossing_total, per_crossing=bookkeeping)
