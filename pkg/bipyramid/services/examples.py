"""
組み込みのサンプルダイアグラム

2-クロッシングのスロット: 0=NW, 1=NE, 2=SE, 3=SW（ストランド0 = NW-SE）
トーラス上のウィーブ商は格子で割った基本領域の回転系をそのまま書き下したもの。
"""
from functools import lru_cache
from typing import Dict, Tuple

from bipyramid.schemas.diagram import MulticrossingDiagram, Surface
from bipyramid.services.diagram import build_diagram


def _trefoil() -> MulticrossingDiagram:
    # 2本の組みひも σ1^3 の閉包
    return build_diagram(
        "trefoil",
        [(0, [1, 2]), (1, [1, 2]), (2, [1, 2])],
        [
            ((0, 3), (1, 0)), ((0, 2), (1, 1)),
            ((1, 3), (2, 0)), ((1, 2), (2, 1)),
            ((2, 3), (0, 0)), ((2, 2), (0, 1)),
        ],
        surface=Surface.SPHERE,
    )


def _figure_eight() -> MulticrossingDiagram:
    # 3本の組みひも σ1 σ2^-1 σ1 σ2^-1 の閉包
    return build_diagram(
        "figure-eight",
        [(0, [1, 2]), (1, [2, 1]), (2, [1, 2]), (3, [2, 1])],
        [
            ((0, 2), (1, 0)), ((0, 3), (2, 0)),
            ((1, 3), (2, 1)), ((2, 2), (3, 0)),
            ((1, 2), (3, 1)), ((2, 3), (0, 0)),
            ((3, 3), (0, 1)), ((3, 2), (1, 1)),
        ],
        surface=Surface.SPHERE,
    )


def _fig8_ubercrossing() -> MulticrossingDiagram:
    # ペタル射影: 隣り合う端点を花びらで結ぶ
    return build_diagram(
        "fig8-ubercrossing",
        [(0, [1, 3, 5, 2, 4])],
        [((0, 1), (0, 2)), ((0, 3), (0, 4)), ((0, 5), (0, 6)), ((0, 7), (0, 8)), ((0, 9), (0, 0))],
        surface=Surface.SPHERE,
    )


def _square_weave() -> MulticrossingDiagram:
    # 2x2 の正方格子。スロット 0=N, 1=E, 2=S, 3=W。交代的
    return build_diagram(
        "square-weave",
        [(0, [1, 2]), (1, [2, 1]), (2, [2, 1]), (3, [1, 2])],
        [
            ((0, 1), (1, 3)), ((1, 1), (0, 3)), ((2, 1), (3, 3)), ((3, 1), (2, 3)),
            ((0, 2), (2, 0)), ((2, 2), (0, 0)), ((1, 2), (3, 0)), ((3, 2), (1, 0)),
        ],
        surface=Surface.TORUS,
    )


def _triple_weave() -> MulticrossingDiagram:
    # 三角格子を a, 2b で割る。スロット 0=b, 1=a, 2=a-b, 3=-b, 4=-a, 5=b-a
    # 行ごとに 123 と 132（[3,2,1] は回転すると 132）
    return build_diagram(
        "triple-weave",
        [(0, [1, 2, 3]), (1, [3, 2, 1])],
        [
            ((0, 0), (1, 3)), ((1, 0), (0, 3)),
            ((0, 1), (0, 4)), ((1, 1), (1, 4)),
            ((0, 2), (1, 5)), ((1, 2), (0, 5)),
        ],
        surface=Surface.TORUS,
    )


def _right_triangle_weave() -> MulticrossingDiagram:
    # 4-クロッシング: スロット 0=N, 1=NE, 2=E, 3=SE, 4=S, 5=SW, 6=W, 7=NW
    # 2-クロッシング（正方形の中心）: 0=NE, 1=SE, 2=SW, 3=NW
    # 4-クロッシングの最上段（/）は 2-クロッシングを下で、最下段（\）は上で通る
    return build_diagram(
        "right-triangle-weave",
        [(0, [3, 1, 2, 4]), (1, [2, 1])],
        [
            ((0, 0), (0, 4)), ((0, 2), (0, 6)),
            ((0, 1), (1, 2)), ((0, 3), (1, 3)),
            ((0, 5), (1, 0)), ((0, 7), (1, 1)),
        ],
        surface=Surface.TORUS,
    )


def _unknot_curl() -> MulticrossingDiagram:
    return build_diagram(
        "unknot-curl",
        [(0, [1, 2])],
        [((0, 0), (0, 1)), ((0, 2), (0, 3))],
        surface=Surface.SPHERE,
    )


@lru_cache
def _all_examples() -> Tuple[MulticrossingDiagram, ...]:
    return (
        _trefoil(),
        _figure_eight(),
        _fig8_ubercrossing(),
        _square_weave(),
        _triple_weave(),
        _right_triangle_weave(),
        _unknot_curl(),
    )


def builtin_examples() -> Dict[str, MulticrossingDiagram]:
    """名前 → ダイアグラム"""
    return {d.name: d for d in _all_examples()}


def get_example(name: str) -> MulticrossingDiagram:
    examples = builtin_examples()
    if name not in examples:
        raise KeyError(f"unknown example {name!r}; choose from {', '.join(examples)}")
    return examples[name]
