from bipyramid.schemas.diagram import (
    Corner,
    Crossing,
    DiagramFile,
    Face,
    MulticrossingDiagram,
    SlotRef,
    Surface,
)
from bipyramid.schemas.report import (
    AdmissibilityResult,
    AnalyzeOutput,
    BoundTableRow,
    Census,
    CensusEntry,
    ClassificationReport,
    DensityReport,
    DualityReport,
    ExtremalReport,
    FaceSizeRecord,
    RealizeOutput,
    Signature,
    VolumeBoundReport,
)

__all__ = [
    "Corner",
    "Crossing",
    "DiagramFile",
    "Face",
    "MulticrossingDiagram",
    "SlotRef",
    "Surface",
    "AdmissibilityResult",
    "AnalyzeOutput",
    "BoundTableRow",
    "Census",
    "CensusEntry",
    "ClassificationReport",
    "DensityReport",
    "DualityReport",
    "ExtremalReport",
    "FaceSizeRecord",
    "RealizeOutput",
    "Signature",
    "VolumeBoundReport",
]
