import json
import random

import pytest

from bipyramid.config import get_settings
from bipyramid.schemas.diagram import MulticrossingDiagram, Surface
from bipyramid.services.diagram import build_diagram


@pytest.fixture(autouse=True)
def fresh_settings():
    """環境変数を変えたテストの後に設定キャッシュを残さない"""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


def random_diagram(seed: int, max_crossings: int = 8) -> MulticrossingDiagram:
    """サイズ 2..6 のクロッシングとスロットのランダムな完全マッチング"""
    rng = random.Random(seed)
    count = rng.randint(1, max_crossings)
    crossings = []
    slots = []
    for cid in range(count):
        n = rng.randint(2, 6)
        levels = list(range(1, n + 1))
        rng.shuffle(levels)
        crossings.append((cid, levels))
        slots.extend((cid, s) for s in range(2 * n))
    rng.shuffle(slots)
    edges = [(slots[i], slots[i + 1]) for i in range(0, len(slots), 2)]
    return build_diagram(f"random-{seed}", crossings, edges, surface=Surface.AUTO)


@pytest.fixture
def trefoil_text() -> str:
    return json.dumps(
        {
            "name": "trefoil",
            "surface": "sphere",
            "crossings": [
                {"id": 0, "levels": [1, 2]},
                {"id": 1, "levels": [1, 2]},
                {"id": 2, "levels": [1, 2]},
            ],
            "edges": [
                [[0, 3], [1, 0]],
                [[0, 2], [1, 1]],
                [[1, 3], [2, 0]],
                [[1, 2], [2, 1]],
                [[2, 3], [0, 0]],
                [[2, 2], [0, 1]],
            ],
        },
        indent=2,
    )
