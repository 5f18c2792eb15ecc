import logging

from bipyramid.schemas.diagram import MulticrossingDiagram
from bipyramid.schemas.report import AnalyzeOutput
from bipyramid.services.decomposition import dual_consistency_check
from bipyramid.services.diagram import link_components, trace_faces
from bipyramid.services.volume import VolumeCalculator

logger = logging.getLogger(__name__)


class AnalysisService:

    @staticmethod
    def analyze(diagram: MulticrossingDiagram) -> AnalyzeOutput:
        """面追跡・両分解・体積上界をまとめたレポート"""
        faces = trace_faces(diagram)

        # 四面体数の保存（不一致なら InvariantViolation）
        duality = dual_consistency_check(diagram, faces)

        calculator = VolumeCalculator(diagram, faces)
        volume = calculator.calculate()

        output = AnalyzeOutput(
            name=diagram.name,
            surface=diagram.declared_surface.value,
            genus=calculator.genus,
            component_genera=calculator.genera,
            link_components=len(link_components(diagram)),
            signatures=calculator.signatures,
            faces=calculator.face_records,
            face_total=duality.face_total,
            crossing_total=duality.crossing_total,
            mccb=volume.mccb,
            mfcb=volume.mfcb,
            octahedral=volume.octahedral,
            density=calculator.density(),
            volume=volume,
            warnings=volume.warnings,
        )
        logger.info(f"Analyzed {diagram.name}: {len(faces)} faces, {output.face_total} tetrahedra")
        return output
