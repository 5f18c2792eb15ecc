"""
双角錐サイズ列の実現

許容条件: m_1 = m_k = 4、隣接差 |m_i - m_{i+1}| ∈ {0, 4}
構成:
- add4: 旧最下段の時計回り隣に新しい最上段、そのさらに隣に新しい最下段を入れる
        (m_1..m_{n-1}) -> (4, m_1+4, ..., m_{n-1}+4, 4)
- concatenate: c1 の最下段と c2 の最上段を取り除き、c2 の残りを c1 の最下段の
        すぐ時計回りの位置に挿入する
        (p_1..p_{u-1}) ⊕ (q_1..q_{v-1}) -> (p_1, ..., p_{u-1}, q_2, ..., q_{v-1})
構成した高さ列は毎回シグネチャを計算し直して検算する。
"""
import logging
from typing import Iterator, List, Optional, Sequence, Tuple

from bipyramid.config import get_settings
from bipyramid.errors import InadmissibleSequenceError, InvariantViolation, LimitExceededError
from bipyramid.schemas.diagram import Crossing
from bipyramid.schemas.report import AdmissibilityResult, RealizeOutput
from bipyramid.services.decomposition import canonical_levels, signature_sizes

logger = logging.getLogger(__name__)

Levels = Tuple[int, ...]

# 1本だけの縮退クロッシング（シグネチャは空列）。add4 で (4, 4) になる
SEED_LEVELS: Levels = (1,)


# ==================== 許容性 ====================

def is_admissible(sequence: Sequence[int]) -> AdmissibilityResult:
    """
    許容条件を満たすか判定

    Returns:
        admissible=False のとき reason / index に最初に破れた条件
    """
    if len(sequence) == 0:
        raise InadmissibleSequenceError("empty sequence")

    if sequence[0] != 4:
        return AdmissibilityResult(admissible=False, reason="first entry ≠ 4", index=0)
    if sequence[-1] != 4:
        return AdmissibilityResult(admissible=False, reason="last entry ≠ 4", index=len(sequence) - 1)
    for i, m in enumerate(sequence):
        if m <= 0:
            return AdmissibilityResult(admissible=False, reason=f"entry at index {i} is not positive", index=i)
    for i in range(1, len(sequence)):
        gap = abs(sequence[i] - sequence[i - 1])
        if gap not in (0, 4):
            return AdmissibilityResult(admissible=False, reason=f"gap at index {i} is {gap}", index=i)

    return AdmissibilityResult(admissible=True)


def _tail_minimum(height: int) -> int:
    """高さ height から 4 ずつ下って 4 に戻るまでに最低限加わる和"""
    steps = (height - 4) // 4
    return sum(height - 4 * k for k in range(1, steps + 1))


def _extend(prefix: List[int], total: int, length: Optional[int], max_sum: Optional[int]) -> Iterator[Tuple[int, ...]]:
    h = prefix[-1]
    if h == 4 and (length is None or len(prefix) == length):
        yield tuple(prefix)
    if length is not None and len(prefix) >= length:
        return
    for gap in (-4, 0, 4):
        nxt = h + gap
        if nxt < 4:
            continue
        if length is not None and (nxt - 4) > 4 * (length - len(prefix) - 1):
            continue
        if max_sum is not None and total + nxt + _tail_minimum(nxt) > max_sum:
            continue
        prefix.append(nxt)
        yield from _extend(prefix, total + nxt, length, max_sum)
        prefix.pop()


def admissible_sequences(length: int) -> List[Tuple[int, ...]]:
    """長さ length の許容列を辞書順で全列挙（隣接差 {-4, 0, +4} の上の探索）"""
    if length < 1:
        return []
    return sorted(_extend([4], 4, length, None))


def admissible_sequences_up_to(max_sum: int) -> List[Tuple[int, ...]]:
    """和が max_sum 以下の許容列を全列挙"""
    if max_sum < 4:
        return []
    return sorted(_extend([4], 4, None, max_sum), key=lambda s: (len(s), s))


# ==================== 構成 ====================

def _add4_levels(levels: Sequence[int]) -> Levels:
    n = len(levels)
    under = list(levels).index(n)
    lifted = [level + 1 for level in levels]
    lifted.insert(under + 1, 1)
    lifted.insert(under + 2, n + 2)
    return canonical_levels(lifted)


def _verified_add4(levels: Sequence[int]) -> Levels:
    result = _add4_levels(levels)
    expected = (4,) + tuple(m + 4 for m in signature_sizes(levels)) + (4,)
    actual = signature_sizes(result)
    if actual != expected:
        logger.error(f"add4 produced {result} with signature {actual}, expected {expected}")
        raise InvariantViolation(f"add4 placement failed for levels {tuple(levels)}")
    return result


def _shifted_rest(second: Sequence[int], u: int) -> List[int]:
    """c2 の最上段の次から時計回りに並べ、高さを u-2 だけ下げた列"""
    v = len(second)
    top = list(second).index(1)
    return [second[(top + k) % v] + u - 2 for k in range(1, v)]


def _concatenate_candidates(first: Sequence[int], second: Sequence[int]) -> List[Levels]:
    u = len(first)
    bottom = list(first).index(u)
    rest = _shifted_rest(second, u)
    head, tail = list(first[:bottom]), list(first[bottom + 1:])
    primary = canonical_levels(head + rest + tail)
    mirrored = canonical_levels(head + rest[::-1] + tail)
    return [primary, mirrored]


def _verified_concatenate(first: Sequence[int], second: Sequence[int]) -> Levels:
    p, q = signature_sizes(first), signature_sizes(second)
    expected = p + q[1:]
    candidates = _concatenate_candidates(first, second)
    for attempt, levels in enumerate(candidates):
        if signature_sizes(levels) == expected:
            if attempt > 0:
                logger.warning(f"concatenate fell back to mirrored interleaving for {tuple(first)} ⊕ {tuple(second)}")
            return levels
    logger.error(f"concatenate failed for {tuple(first)} ⊕ {tuple(second)}")
    raise InvariantViolation(f"no interleaving realizes {expected}")


def add4(crossing: Crossing) -> Crossing:
    """(m_1..m_{n-1}) を実現する n-クロッシングから (4, m+4, 4) を実現する (n+2)-クロッシングを作る"""
    return Crossing(id=crossing.id, levels=_verified_add4(crossing.levels))


def concatenate(first: Crossing, second: Crossing) -> Crossing:
    """シグネチャを共有する端の 4 で繋いだ (u+v-2)-クロッシング"""
    return Crossing(id=first.id, levels=_verified_concatenate(first.levels, second.levels))


def _split_interior_fours(sequence: Tuple[int, ...]) -> List[Tuple[int, ...]]:
    blocks = []
    start = 0
    for i in range(1, len(sequence) - 1):
        if sequence[i] == 4:
            blocks.append(sequence[start:i + 1])
            start = i
    blocks.append(sequence[start:])
    return blocks


def _fold_blocks(blocks: List[Tuple[int, ...]]) -> Levels:
    """
    ブロックを左から順に concatenate する

    累積側の最下段の位置を持ち回り、各ステップはブロックの長さ分の差し替えだけで済ませる。
    途中では検算せず、realize が最後にシグネチャを一度だけ確認する。
    """
    levels = list(_realize_levels(blocks[0]))
    bottom = levels.index(len(levels))
    for block in blocks[1:]:
        second = _realize_levels(block)
        u, v = len(levels), len(second)
        rest = _shifted_rest(second, u)
        levels[bottom:bottom + 1] = rest
        # 新しい最下段は c2 の最下段 v が u+v-2 に移ったもの
        bottom += rest.index(u + v - 2)
    return canonical_levels(levels)


def _realize_levels(sequence: Tuple[int, ...]) -> Levels:
    if len(sequence) == 0:
        return SEED_LEVELS
    if sequence == (4,):
        return (1, 2)

    blocks = _split_interior_fours(sequence)
    if len(blocks) > 1:
        return _fold_blocks(blocks)

    inner = tuple(m - 4 for m in sequence[1:-1])
    return _verified_add4(_realize_levels(inner))


def realize(sequence: Sequence[int], max_sum: Optional[int] = None) -> Crossing:
    """
    許容列をシグネチャとして持つクロッシングを構成する

    Raises:
        InadmissibleSequenceError: 許容条件を満たさない
        LimitExceededError: Σm_i が上限を超える
    """
    sequence = tuple(int(m) for m in sequence)
    result = is_admissible(sequence)
    if not result.admissible:
        raise InadmissibleSequenceError(result.reason, result.index)

    if max_sum is None:
        max_sum = get_settings().max_sum
    if sum(sequence) > max_sum:
        raise LimitExceededError(f"sequence sum {sum(sequence)} exceeds the cap {max_sum} (BIPYR_MAX_SUM)")

    levels = _realize_levels(sequence)
    if signature_sizes(levels) != sequence:
        logger.error(f"realized levels carry signature {signature_sizes(levels)}, expected {sequence}")
        raise InvariantViolation(f"realized levels {levels} do not carry signature {sequence}")

    logger.info(f"Realized {len(sequence)}-term sequence with a {len(levels)}-crossing")
    return Crossing(id=0, levels=levels)


def realize_output(sequence: Sequence[int]) -> RealizeOutput:
    crossing = realize(sequence)
    sizes = signature_sizes(crossing.levels)
    return RealizeOutput(
        sequence=tuple(sequence),
        levels=crossing.levels,
        signature=sizes,
        tetrahedra=sum(sizes),
    )
