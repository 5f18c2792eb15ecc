"""
マルチクロッシング・ダイアグラムの読み込み・検証・面の追跡

スロット規約:
- n-クロッシングのスロットは 0..2n-1（上から見て時計回り）
- スロット k はストランド k mod n に属し、ストランド j の両端は j と j+n
- 面の追跡: スロット s に到着 → (s+1) mod 2n から出発 → その辺を辿って次の到着
"""
import json
import logging
from collections import deque
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from bipyramid.errors import DiagramError, SurfaceMismatchError
from bipyramid.schemas.diagram import (
    Corner,
    Crossing,
    DiagramFile,
    Face,
    MulticrossingDiagram,
    SlotRef,
    Surface,
)

logger = logging.getLogger(__name__)

SlotKey = Tuple[int, int]


def canonical_rotation(levels: Sequence[int]) -> int:
    """最上段（level 1）のストランドの巡回位置"""
    return list(levels).index(1)


def rotate_levels(levels: Sequence[int], offset: int) -> Tuple[int, ...]:
    n = len(levels)
    return tuple(levels[(k + offset) % n] for k in range(n))


def _format_loc(loc: Iterable) -> str:
    out = ""
    for part in loc:
        if isinstance(part, int):
            out += f"[{part}]"
        else:
            out += f".{part}" if out else str(part)
    return out


def _slot_label(cid: int, slot: int, rotation: int, slot_count: int) -> str:
    """入力のスロット番号。回転したクロッシングでは正規形の番号も添える"""
    label = f"crossing {cid} slot {slot}"
    if rotation:
        label += f" (canonical slot {(slot - rotation) % slot_count}, rotated by {rotation})"
    return label


def build_diagram(
    name: str,
    crossings: Sequence[Tuple[int, Sequence[int]]],
    edges: Sequence[Tuple[SlotKey, SlotKey]],
    surface: Surface = Surface.AUTO,
) -> MulticrossingDiagram:
    """
    クロッシングと辺からダイアグラムを構築し、正規化・検証する

    Args:
        name: ダイアグラム名
        crossings: (id, levels) のリスト。levels は任意の回転でよい
        edges: ((crossing, slot), (crossing, slot)) のリスト
        surface: 宣言された曲面

    Returns:
        正規形（各クロッシングで levels[0] = 1）のダイアグラム
    """
    rotations: Dict[int, int] = {}
    built: Dict[int, Crossing] = {}

    for i, (cid, levels) in enumerate(crossings):
        if cid in built:
            raise DiagramError(f"duplicate crossing id {cid}", location=f"crossings[{i}].id")
        levels = tuple(levels)
        if len(levels) < 2:
            raise DiagramError("crossing needs at least 2 strands", location=f"crossings[{i}].levels")
        if sorted(levels) != list(range(1, len(levels) + 1)):
            raise DiagramError("levels not a permutation", location=f"crossings[{i}].levels")
        r = canonical_rotation(levels)
        rotations[cid] = r
        built[cid] = Crossing(id=cid, levels=rotate_levels(levels, r))

    seen: Dict[SlotKey, int] = {}
    canonical_edges = []
    for k, edge in enumerate(edges):
        ends = []
        for end in edge:
            cid, slot = int(end[0]), int(end[1])
            if cid not in built:
                raise DiagramError(f"unknown crossing id {cid}", location=f"edges[{k}]")
            n2 = built[cid].slot_count
            if not 0 <= slot < n2:
                raise DiagramError(
                    f"slot index out of range: crossing {cid} slot {slot} (expected 0..{n2 - 1})",
                    location=f"edges[{k}]",
                )
            if (cid, slot) in seen:
                raise DiagramError(
                    f"slot matched twice: {_slot_label(cid, slot, rotations[cid], n2)}"
                    f" (also in edges[{seen[(cid, slot)]}])",
                    location=f"edges[{k}]",
                )
            seen[(cid, slot)] = k
            # 正規化後のスロット番号
            ends.append(SlotRef(crossing=cid, slot=(slot - rotations[cid]) % n2))
        ends.sort(key=lambda ref: ref.as_key())
        canonical_edges.append((ends[0], ends[1]))

    for cid in sorted(built):
        n2 = built[cid].slot_count
        for slot in range(n2):
            if (cid, slot) not in seen:
                raise DiagramError(
                    f"slot never matched: {_slot_label(cid, slot, rotations[cid], n2)}", location="edges"
                )

    canonical_edges.sort(key=lambda e: (e[0].as_key(), e[1].as_key()))
    diagram = MulticrossingDiagram(
        name=name,
        declared_surface=surface,
        crossings=tuple(built[cid] for cid in sorted(built)),
        edges=tuple(canonical_edges),
    )

    check_surface(diagram)
    logger.info(
        f"Built diagram {name}: V={diagram.vertex_count}, E={diagram.edge_count}, surface={surface.value}"
    )
    return diagram


def parse_diagram(text: str, source: Optional[str] = None) -> MulticrossingDiagram:
    """JSON テキストからダイアグラムを読み込む"""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DiagramError(e.msg, line=e.lineno, column=e.colno, source=source) from e

    try:
        raw = DiagramFile.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        raise DiagramError(first["msg"], location=_format_loc(first["loc"]), source=source) from e

    try:
        return build_diagram(
            raw.name,
            [(c.id, c.levels) for c in raw.crossings],
            [(tuple(a), tuple(b)) for a, b in raw.edges],
            surface=raw.surface,
        )
    except DiagramError as e:
        if source and not e.source:
            e.source = source
        raise


def load_diagram(path: str | Path) -> MulticrossingDiagram:
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    return parse_diagram(text, source=str(path))


def dump_diagram(diagram: MulticrossingDiagram) -> str:
    """正規形のダイアグラムファイルを出力"""
    lines = [
        "{",
        f'  "name": {json.dumps(diagram.name)},',
        f'  "surface": "{diagram.declared_surface.value}",',
        '  "crossings": [',
    ]
    for i, c in enumerate(diagram.crossings):
        sep = "," if i < len(diagram.crossings) - 1 else ""
        lines.append(f'    {{ "id": {c.id}, "levels": {json.dumps(list(c.levels))} }}{sep}')
    lines.append("  ],")
    lines.append('  "edges": [')
    for i, (a, b) in enumerate(diagram.edges):
        sep = "," if i < len(diagram.edges) - 1 else ""
        lines.append(f"    [[{a.crossing},{a.slot}],[{b.crossing},{b.slot}]]{sep}")
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ==================== 面・成分 ====================

def trace_faces(diagram: MulticrossingDiagram) -> List[Face]:
    """
    回転系から面を追跡する（外側の面も含む）

    到着スロット s → 出発スロット (s+1) mod 2n → 辺の反対側が次の到着。
    クロッシングID・スロットの昇順で未訪問の到着から開始するので順序は決定的。
    """
    crossings = diagram.crossing_map()
    partner = diagram.partner_map()
    visited = set()
    faces = []

    for crossing in diagram.crossings:
        for start in range(crossing.slot_count):
            if (crossing.id, start) in visited:
                continue
            corners = []
            current = (crossing.id, start)
            while current not in visited:
                visited.add(current)
                cid, arrival = current
                departure = (arrival + 1) % crossings[cid].slot_count
                corners.append(Corner(crossing=cid, arrival=arrival, departure=departure))
                current = partner[(cid, departure)]
            faces.append(Face(index=len(faces), corners=tuple(corners)))

    return faces


def link_components(diagram: MulticrossingDiagram) -> List[List[SlotKey]]:
    """
    リンクの成分（辺の追跡とクロッシング通過 s ↔ s+n の交互適用の軌道）

    Returns:
        成分ごとに通過したスロットのリスト
    """
    crossings = diagram.crossing_map()
    partner = diagram.partner_map()
    visited = set()
    components = []

    for crossing in diagram.crossings:
        for start in range(crossing.slot_count):
            if (crossing.id, start) in visited:
                continue
            orbit = []
            current = (crossing.id, start)
            while current not in visited:
                cid, slot = current
                n = crossings[cid].size
                through = (cid, (slot + n) % (2 * n))
                visited.add(current)
                visited.add(through)
                orbit.extend([current, through])
                current = partner[through]
            components.append(orbit)

    return components


def connected_components(diagram: MulticrossingDiagram) -> List[List[int]]:
    """射影グラフ G の連結成分（クロッシングIDのリスト）"""
    adjacency: Dict[int, set] = {c.id: set() for c in diagram.crossings}
    for a, b in diagram.edges:
        adjacency[a.crossing].add(b.crossing)
        adjacency[b.crossing].add(a.crossing)

    seen = set()
    components = []
    for crossing in diagram.crossings:
        if crossing.id in seen:
            continue
        queue = deque([crossing.id])
        seen.add(crossing.id)
        members = []
        while queue:
            cid = queue.popleft()
            members.append(cid)
            for other in adjacency[cid]:
                if other not in seen:
                    seen.add(other)
                    queue.append(other)
        components.append(sorted(members))
    return components


def component_genera(diagram: MulticrossingDiagram) -> List[int]:
    """連結成分ごとの種数 g = (2 - V + E - F) / 2"""
    faces = trace_faces(diagram)
    genera = []

    for members in connected_components(diagram):
        member_set = set(members)
        v = len(members)
        e = sum(1 for a, _ in diagram.edges if a.crossing in member_set)
        f = sum(1 for face in faces if face.corners[0].crossing in member_set)
        chi = v - e + f
        if chi % 2 != 0 or chi > 2:
            raise SurfaceMismatchError(
                f"inconsistent embedding: V - E + F = {chi} for component {members}"
            )
        genera.append((2 - chi) // 2)

    return genera


def check_surface(diagram: MulticrossingDiagram, genera: Optional[List[int]] = None) -> List[int]:
    """宣言された曲面と種数の整合性を確認"""
    if genera is None:
        genera = component_genera(diagram)

    declared = diagram.declared_surface
    if declared == Surface.SPHERE and any(g != 0 for g in genera):
        raise SurfaceMismatchError(f"declared sphere but component genera are {genera}")
    if declared == Surface.TORUS and sum(genera) != 1:
        raise SurfaceMismatchError(f"declared torus but component genera are {genera}")
    return genera


def genus(diagram: MulticrossingDiagram) -> int:
    """埋め込み曲面の種数（連結成分の和）"""
    return sum(check_surface(diagram))
