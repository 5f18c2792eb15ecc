from bipyramid.services.analysis import AnalysisService
from bipyramid.services.volume import VolumeCalculator

__all__ = ["AnalysisService", "VolumeCalculator"]
