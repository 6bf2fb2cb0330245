import re

import pytest

from ews32 import boundary_value, render_figure, scenario_from_mapping
from ews32.figure import DEFAULT_SIZE, DEFAULT_WINDOW, MARGIN

from test_scenario import REFERENCE_DOC


@pytest.fixture
def reference_scenario():
    return scenario_from_mapping(dict(REFERENCE_DOC))


def pixel_y(u: float) -> float:
    (_, _), (uy0, uy1) = DEFAULT_WINDOW
    _, height = DEFAULT_SIZE
    return MARGIN + (uy1 - u) / (uy1 - uy0) * (height - 2.0 * MARGIN)


def test_render_is_deterministic(reference_scenario):
    assert render_figure(reference_scenario) == render_figure(reference_scenario)


def test_document_structure(reference_scenario):
    svg = render_figure(reference_scenario)
    assert svg.startswith("<svg ")
    assert svg.endswith("</svg>\n")
    assert "<title>reference</title>" in svg
    assert svg.count('class="anchor"') == 7
    assert svg.count('class="vector"') == 1
    # One label per boundary anchor.
    for name in ("R land 1", "R land 2", "R capital 1", "R capital 2", "R labor 1", "R labor 2"):
        assert name in svg


def test_vector_sits_above_the_boundary(reference_scenario):
    # The reference vector has u' above the boundary height at its s';
    # in pixel space that means a smaller y than the boundary's.
    svg = render_figure(reference_scenario)
    match = re.search(r'class="vector" cx="([0-9.]+)" cy="([0-9.]+)"', svg)
    assert match is not None
    cy = float(match.group(2))
    run = run_vector(reference_scenario)
    assert cy == pytest.approx(pixel_y(run[1]), abs=0.01)
    assert cy < pixel_y(boundary_value(run[0], reference_scenario.table))


def run_vector(scenario):
    from ews32 import epsilon_from_aes, ews_from_epsilon, ews_ratio_vector

    eps = epsilon_from_aes(scenario.aes, scenario.table)
    v = ews_ratio_vector(ews_from_epsilon(eps, scenario.table))
    return v.s_prime, v.u_prime


def test_file_output_matches_return(tmp_path, reference_scenario):
    out = tmp_path / "plane.svg"
    svg = render_figure(reference_scenario, out=out)
    assert out.read_text(encoding="utf-8") == svg


def test_window_override_changes_geometry(reference_scenario):
    wide = render_figure(reference_scenario, window=((-8.0, 8.0), (-12.0, 6.0)))
    assert wide != render_figure(reference_scenario)
    assert wide.count('class="anchor"') == 7
