from typing import List, Optional, Tuple

from pydantic import BaseModel, Field


# ==================== Decomposition ====================

class Signature(BaseModel):
    sizes: Tuple[int, ...] = Field(..., description="|B_{c,1}|, ..., |B_{c,n-1}|")
    crossing: Optional[int] = Field(None, description="クロッシングID（単独の列では None）")

    class Config:
        frozen = True

    @property
    def tetrahedra(self) -> int:
        return sum(self.sizes)


class FaceSizeRecord(BaseModel):
    face: int
    size: int = Field(..., description="|B_F|")
    contributions: Tuple[int, ...] = Field(..., description="角ごとの寄与 |l(s_i,c_i) - l(s_{i+1},c_i)|")

    class Config:
        frozen = True


class CrossingBookkeeping(BaseModel):
    crossing: int
    corner_sum: int = Field(..., description="このクロッシングの角寄与の合計")
    signature_sum: int = Field(..., description="Σ_i |B_{c,i}|")

    class Config:
        frozen = True


class DualityReport(BaseModel):
    face_total: int
    crossing_total: int
    per_crossing: List[CrossingBookkeeping]


# ==================== Realization ====================

class AdmissibilityResult(BaseModel):
    admissible: bool
    reason: Optional[str] = None
    index: Optional[int] = None


class RealizeOutput(BaseModel):
    sequence: Tuple[int, ...]
    levels: Tuple[int, ...]
    signature: Tuple[int, ...]
    tetrahedra: int


# ==================== Volume ====================

class CrossingVolume(BaseModel):
    crossing: int
    levels: Tuple[int, ...]
    sizes: Tuple[int, ...]
    volumes: Tuple[float, ...]
    total: float


class FaceVolume(BaseModel):
    face: int
    size: int
    volume: float


class DensityReport(BaseModel):
    crossing_count: int
    mccb_per_crossing: Optional[float] = None
    triple_crossing_count: int = 0
    triple_density_bound: Optional[float] = None
    triple_reference: Optional[float] = Field(None, description="2·v_oct")


class VolumeBoundReport(BaseModel):
    mccb: float
    mfcb: float
    octahedral: float
    tetrahedron_total: int
    per_crossing: List[CrossingVolume]
    per_face: List[FaceVolume]
    genus: int
    warnings: List[str] = Field(default_factory=list)


class BoundTableRow(BaseModel):
    n: int
    best_mccb: float
    worst_mccb: float
    octahedral: float


# ==================== Enumeration ====================

class CensusEntry(BaseModel):
    signature: Tuple[int, ...]
    count: int
    levels: List[Tuple[int, ...]]


class Census(BaseModel):
    n: int
    total: int = Field(..., description="列挙した正規形の数")
    folded: bool = False
    reflection_classes: int = Field(..., description="鏡映で同一視したときの類の数")
    entries: List[CensusEntry]


class ClassificationReport(BaseModel):
    n: int
    achieved: List[Tuple[int, ...]]
    admissible: List[Tuple[int, ...]]
    missing: List[Tuple[int, ...]] = Field(default_factory=list, description="許容だが未達成")
    unexpected: List[Tuple[int, ...]] = Field(default_factory=list, description="達成したが非許容")

    @property
    def ok(self) -> bool:
        return not self.missing and not self.unexpected


class ExtremalReport(BaseModel):
    n: int
    min_mccb: float
    min_levels: List[Tuple[int, ...]]
    max_mccb: float
    max_levels: List[Tuple[int, ...]]


# ==================== CLI ====================

class AnalyzeOutput(BaseModel):
    name: str
    surface: str
    genus: int
    component_genera: List[int]
    link_components: int
    signatures: List[Signature]
    faces: List[FaceSizeRecord]
    face_total: int
    crossing_total: int
    mccb: float
    mfcb: float
    octahedral: float
    density: DensityReport
    volume: VolumeBoundReport
    warnings: List[str] = Field(default_factory=list)
