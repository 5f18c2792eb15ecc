"""
センサスの並列実行

置換空間を巡回位置 1 の高さ（2..n）で分割し、各分割を独立に列挙する。
結果は分割の順に連結するので、全体は高さ列の辞書順になる。
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import permutations
from typing import List, Tuple

from bipyramid.services.decomposition import signature_sizes

logger = logging.getLogger(__name__)

CensusRow = Tuple[Tuple[int, ...], Tuple[int, ...]]


def census_partition(n: int, second: int) -> List[CensusRow]:
    """levels[0] = 1, levels[1] = second の正規形をすべて列挙"""
    remaining = [level for level in range(2, n + 1) if level != second]
    rows = []
    for rest in permutations(remaining):
        levels = (1, second) + rest
        rows.append((levels, signature_sizes(levels)))
    return rows


def run_census_partitions(n: int, workers: int = 1) -> List[CensusRow]:
    """
    全分割を実行して決定的な順序で結合

    Args:
        n: クロッシングのサイズ
        workers: プロセス数（1 以下ならプロセスプールを使わない）
    """
    seconds = list(range(2, n + 1))
    if workers <= 1 or len(seconds) <= 1:
        parts = [census_partition(n, second) for second in seconds]
    else:
        logger.info(f"Running census n={n} on {workers} workers ({len(seconds)} partitions)")
        with ProcessPoolExecutor(max_workers=workers) as executor:
            parts = list(executor.map(census_partition, [n] * len(seconds), seconds))

    rows = []
    for part in parts:
        rows.extend(part)
    return rows
