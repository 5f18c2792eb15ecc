from enum import Enum
from typing import Dict, List, Tuple

from pydantic import BaseModel, Field, field_validator


class Surface(str, Enum):
    SPHERE = "sphere"
    TORUS = "torus"
    AUTO = "auto"


class Crossing(BaseModel):
    """
    n-クロッシング

    levels[j] = 巡回位置 j のストランドの高さ（1 = 最上段）。
    位置は上から見て時計回り。スロット k はストランド k mod n に属する。
    """

    id: int = Field(..., ge=0, description="クロッシングID")
    levels: Tuple[int, ...] = Field(..., description="時計回りの高さ列")

    class Config:
        frozen = True

    @field_validator("levels")
    @classmethod
    def _check_permutation(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        if len(v) < 2:
            raise ValueError("crossing needs at least 2 strands")
        if sorted(v) != list(range(1, len(v) + 1)):
            raise ValueError("levels not a permutation")
        return v

    @property
    def size(self) -> int:
        return len(self.levels)

    @property
    def slot_count(self) -> int:
        return 2 * len(self.levels)

    def level_at_slot(self, slot: int) -> int:
        return self.levels[slot % len(self.levels)]


class SlotRef(BaseModel):
    crossing: int = Field(..., ge=0)
    slot: int = Field(..., ge=0)

    class Config:
        frozen = True

    def as_key(self) -> Tuple[int, int]:
        return (self.crossing, self.slot)


class Corner(BaseModel):
    crossing: int
    arrival: int
    departure: int

    class Config:
        frozen = True


class Face(BaseModel):
    index: int
    corners: Tuple[Corner, ...]

    class Config:
        frozen = True

    @property
    def degree(self) -> int:
        return len(self.corners)


class MulticrossingDiagram(BaseModel):
    name: str
    declared_surface: Surface = Surface.AUTO
    crossings: Tuple[Crossing, ...]
    edges: Tuple[Tuple[SlotRef, SlotRef], ...]

    class Config:
        frozen = True

    @property
    def vertex_count(self) -> int:
        return len(self.crossings)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def crossing_map(self) -> Dict[int, Crossing]:
        return {c.id: c for c in self.crossings}

    def partner_map(self) -> Dict[Tuple[int, int], Tuple[int, int]]:
        """スロット → 辺の反対側のスロット"""
        partner = {}
        for a, b in self.edges:
            partner[a.as_key()] = b.as_key()
            partner[b.as_key()] = a.as_key()
        return partner


# ==================== 入力ファイル ====================

class CrossingEntry(BaseModel):
    id: int = Field(..., ge=0)
    levels: List[int] = Field(..., min_length=1)


class DiagramFile(BaseModel):
    name: str = Field(..., description="ダイアグラム名")
    surface: Surface = Field(default=Surface.AUTO, description="sphere / torus / auto")
    crossings: List[CrossingEntry] = Field(..., min_length=1)
    edges: List[Tuple[Tuple[int, int], Tuple[int, int]]]
