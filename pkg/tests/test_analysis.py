import pytest

from bipyramid.schemas.report import AnalyzeOutput
from bipyramid.services.analysis import AnalysisService
from bipyramid.services.examples import builtin_examples, get_example
from bipyramid.services.volume import V_OCT


def test_analyze_ubercrossing():
    output = AnalysisService.analyze(get_example("fig8-ubercrossing"))
    assert output.signatures[0].sizes == (4, 8, 8, 4)
    assert output.face_total == output.crossing_total == 24
    assert output.mccb == pytest.approx(23.0377, abs=1e-2)
    assert output.genus == 0
    assert output.link_components == 1
    assert output.warnings == ["3 degenerate face bipyramid(s) of size <= 2 assigned zero volume"]


def test_analyze_triple_weave():
    output = AnalysisService.analyze(get_example("triple-weave"))
    assert output.surface == "torus"
    assert output.genus == 1
    assert output.component_genera == [1]
    assert output.link_components == 4
    assert output.mccb == pytest.approx(4 * V_OCT)
    assert output.mfcb == pytest.approx(4 * V_OCT)
    assert output.density.triple_density_bound == pytest.approx(2 * V_OCT)
    assert any("genus-1" in w for w in output.warnings)


def test_analyze_output_round_trips_through_json():
    for d in builtin_examples().values():
        output = AnalysisService.analyze(d)
        again = AnalyzeOutput.model_validate_json(output.model_dump_json())
        assert again == output


def test_analyze_is_deterministic():
    d = get_example("figure-eight")
    assert AnalysisService.analyze(d).model_dump_json() == AnalysisService.analyze(d).model_dump_json()


def test_analyze_never_below_one_octahedron():
    for d in builtin_examples().values():
        assert AnalysisService.analyze(d).mccb >= V_OCT
