"""
n-クロッシングの全列挙

正規形（levels[0] = 1）は (n-1)! 個。鏡映（巡回順の反転）で同一視するかは任意。
"""
import logging
import math
from typing import Dict, List, Optional, Tuple

from bipyramid.config import get_settings
from bipyramid.errors import InvariantViolation, LimitExceededError
from bipyramid.schemas.report import Census, CensusEntry, ClassificationReport, ExtremalReport
from bipyramid.services.decomposition import reflect_levels
from bipyramid.services.realization import admissible_sequences
from bipyramid.services.volume import V_OCT, bipyramid_volumes, bound_table
from bipyramid.workers.census import run_census_partitions

logger = logging.getLogger(__name__)

_TOLERANCE = 1e-9


def _check_n(n: int) -> None:
    cap = get_settings().census_max_n
    if n < 2:
        raise LimitExceededError(f"crossing size must be at least 2, got {n}")
    if n > cap:
        raise LimitExceededError(f"n = {n} exceeds the census cap {cap} (BIPYR_CENSUS_MAX_N)")


def is_reflection_representative(levels: Tuple[int, ...]) -> bool:
    return levels <= reflect_levels(levels)


def enumerate_crossings(
    n: int,
    fold_reflections: bool = False,
    workers: Optional[int] = None,
) -> Census:
    """
    全正規形のシグネチャを計算してまとめる

    Args:
        n: クロッシングのサイズ（2 ≤ n ≤ census_max_n）
        fold_reflections: 鏡映の組は辞書順で小さい方だけ残す
        workers: プロセス数（None なら設定値）
    """
    _check_n(n)
    if workers is None:
        workers = get_settings().census_workers

    rows = run_census_partitions(n, workers)

    grouped: Dict[Tuple[int, ...], List[Tuple[int, ...]]] = {}
    classes = 0
    for levels, signature in rows:
        representative = is_reflection_representative(levels)
        if representative:
            classes += 1
        if fold_reflections and not representative:
            continue
        grouped.setdefault(signature, []).append(levels)

    entries = [
        CensusEntry(signature=signature, count=len(levels), levels=levels)
        for signature, levels in sorted(grouped.items())
    ]
    logger.info(f"Census n={n}: {len(rows)} configurations, {len(entries)} signatures")
    return Census(
        n=n,
        total=len(rows),
        folded=fold_reflections,
        reflection_classes=classes,
        entries=entries,
    )


def census_rows(census: Census) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """(levels, signature) を高さ列の辞書順で"""
    rows = [(levels, entry.signature) for entry in census.entries for levels in entry.levels]
    return sorted(rows)


def verify_classification(n: int, census: Optional[Census] = None) -> ClassificationReport:
    """
    達成されるシグネチャの集合と許容列の集合が一致するか確認

    Returns:
        missing（許容だが未達成）/ unexpected（達成したが非許容）を含むレポート
    """
    if census is None:
        census = enumerate_crossings(n)
    achieved = sorted(entry.signature for entry in census.entries)
    admissible = admissible_sequences(n - 1)

    achieved_set, admissible_set = set(achieved), set(admissible)
    report = ClassificationReport(
        n=n,
        achieved=achieved,
        admissible=admissible,
        missing=sorted(admissible_set - achieved_set),
        unexpected=sorted(achieved_set - admissible_set),
    )
    if not report.ok:
        logger.error(f"Classification mismatch at n={n}: missing={report.missing}, unexpected={report.unexpected}")
    return report


def extremal_stats(n: int, census: Optional[Census] = None) -> ExtremalReport:
    """センサス上の MCCB 寄与の最小・最大とそれを与える高さ列"""
    if census is None:
        census = enumerate_crossings(n)

    values = {entry.signature: math.fsum(bipyramid_volumes(entry.signature)) for entry in census.entries}
    low, high = min(values.values()), max(values.values())

    min_levels = sorted(
        levels for entry in census.entries if abs(values[entry.signature] - low) < _TOLERANCE for levels in entry.levels
    )
    max_levels = sorted(
        levels for entry in census.entries if abs(values[entry.signature] - high) < _TOLERANCE for levels in entry.levels
    )

    best = (n - 1) * V_OCT
    if abs(low - best) > _TOLERANCE * max(1.0, best):
        raise InvariantViolation(f"n={n}: census minimum {low} differs from (n-1)·v_oct = {best}")
    if n >= 3:
        worst = bound_table([n])[0].worst_mccb
        if abs(high - worst) > _TOLERANCE * max(1.0, worst):
            raise InvariantViolation(f"n={n}: census maximum {high} differs from the worst case {worst}")

    return ExtremalReport(n=n, min_mccb=low, min_levels=min_levels, max_mccb=high, max_levels=max_levels)
