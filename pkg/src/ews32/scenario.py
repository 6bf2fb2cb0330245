"""Scenario files and end-to-end reports.

A scenario is a JSON document carrying the share structure, an Allen
tensor (or the "cobb-douglas" preset), and optional shocks. A report
runs the whole pipeline on it: validation, aggregation, classification,
sign patterns, numeric elasticities, and the oracle cross-checks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import ParseError
from .geometry import Subregion, classify_subregion, line_coefficients
from .shares import RankingReport, ShareTable, build_share_table, check_intensity_ranking, require_ranking
from .statics import (
    DeltaReport,
    ResponseVector,
    ShockVector,
    SignPattern,
    assemble_system,
    determinant_delta,
    rybczynski_matrix,
    sign_pattern_from_values,
    sign_pattern_lookup,
    solve_responses,
    stolper_samuelson_matrix,
    strong_rybczynski,
)
from .substitution import (
    AesTensor,
    EwsMatrix,
    EwsRatioVector,
    ValidityReport,
    cobb_douglas_aes,
    epsilon_from_aes,
    ews_from_epsilon,
    ews_ratio_vector,
    require_valid_aes,
    validate_aes,
)

COBB_DOUGLAS_TAG = "cobb-douglas"


@dataclass(frozen=True)
class Scenario:
    """A named, fully validated model instance."""

    name: str
    table: ShareTable
    aes: AesTensor
    shocks: tuple[ShockVector, ...] = ()


@dataclass(frozen=True)
class Report:
    """Everything the pipeline derives from one scenario."""

    scenario_name: str
    ranking: RankingReport
    aes_validity: ValidityReport
    ews: EwsMatrix
    vector: EwsRatioVector
    subregion: Subregion
    strong_result: bool
    output_signs: SignPattern
    reward_signs: SignPattern
    rybczynski: np.ndarray
    stolper_samuelson: np.ndarray
    delta: DeltaReport
    signs_agree: bool
    max_residual: float
    responses: tuple[tuple[ShockVector, ResponseVector], ...]


def _as_float_grid(value, shape, what: str) -> np.ndarray:
    try:
        arr = np.array(value, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{what} must be numeric: {exc}") from exc
    if arr.shape != shape:
        raise ParseError(f"{what} must have shape {shape}, got {arr.shape}")
    return arr


def scenario_from_mapping(doc: dict, default_name: str = "scenario") -> Scenario:
    """Build and validate a Scenario from parsed JSON."""
    if not isinstance(doc, dict):
        raise ParseError("scenario document must be a JSON object")
    known = {"name", "theta", "theta_sector", "sigma", "shocks"}
    unknown = set(doc) - known
    if unknown:
        raise ParseError(f"unknown scenario keys: {sorted(unknown)}")
    for key in ("theta", "theta_sector", "sigma"):
        if key not in doc:
            raise ParseError(f"scenario is missing required key {key!r}")

    name = doc.get("name", default_name)
    if not isinstance(name, str) or not name:
        raise ParseError("scenario name must be a non-empty string")

    theta = _as_float_grid(doc["theta"], (3, 2), "theta")
    theta_sector = _as_float_grid(doc["theta_sector"], (2,), "theta_sector")
    table = build_share_table(theta, theta_sector)
    require_ranking(table)

    sigma = doc["sigma"]
    if isinstance(sigma, str):
        if sigma != COBB_DOUGLAS_TAG:
            raise ParseError(
                f"unknown sigma preset {sigma!r}; the only preset is {COBB_DOUGLAS_TAG!r}"
            )
        aes = cobb_douglas_aes(table)
    else:
        aes = AesTensor(sigma=_as_float_grid(sigma, (2, 3, 3), "sigma"))
    require_valid_aes(aes, table)

    shocks = []
    raw_shocks = doc.get("shocks", [])
    if not isinstance(raw_shocks, list):
        raise ParseError("shocks must be a list of objects")
    for k, raw in enumerate(raw_shocks):
        if not isinstance(raw, dict) or set(raw) - {"price", "endowments"}:
            raise ParseError(f"shock {k} must be an object with keys price/endowments")
        price = float(raw.get("price", 0.0))
        endow = _as_float_grid(raw.get("endowments", (0.0, 0.0, 0.0)), (3,), "endowments")
        shocks.append(
            ShockVector(price_shock=price, endowment_shocks=tuple(float(v) for v in endow))
        )
    return Scenario(name=name, table=table, aes=aes, shocks=tuple(shocks))


def load_scenario(path) -> Scenario:
    """Read, parse, and validate a scenario file."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"scenario file is not valid JSON: {exc}") from exc
    return scenario_from_mapping(doc, default_name=Path(path).stem)


def run_report(scenario: Scenario) -> Report:
    """Run the full pipeline and cross-check the two sign routes."""
    table = scenario.table
    ranking = check_intensity_ranking(table)
    validity = validate_aes(scenario.aes, table)
    eps = epsilon_from_aes(scenario.aes, table)
    ews = ews_from_epsilon(eps, table)
    vector = ews_ratio_vector(ews)
    lines = line_coefficients(table)
    region = classify_subregion(vector, lines, table)

    sys = assemble_system(table, ews)
    delta = determinant_delta(sys, table, ews)
    ryb = rybczynski_matrix(table, ews)
    ss = stolper_samuelson_matrix(table, ews, ryb)

    output_signs = sign_pattern_lookup(region, "rybczynski")
    reward_signs = sign_pattern_lookup(region, "stolper_samuelson")
    ryb_signs = sign_pattern_from_values(ryb, "rybczynski")
    ss_signs = sign_pattern_from_values(ss, "stolper_samuelson")
    signs_agree = (
        not ryb_signs.zero_flagged
        and not ss_signs.zero_flagged
        and ryb_signs.entries == output_signs.entries
        and ss_signs.entries == reward_signs.entries
    )

    responses = []
    max_residual = 0.0
    for shock in scenario.shocks:
        response = solve_responses(sys, shock)
        max_residual = max(max_residual, response.residual)
        responses.append((shock, response))

    return Report(
        scenario_name=scenario.name,
        ranking=ranking,
        aes_validity=validity,
        ews=ews,
        vector=vector,
        subregion=region,
        strong_result=strong_rybczynski(region),
        output_signs=output_signs,
        reward_signs=reward_signs,
        rybczynski=ryb,
        stolper_samuelson=ss,
        delta=delta,
        signs_agree=signs_agree,
        max_residual=max_residual,
        responses=tuple(responses),
    )


def _sign_row(row) -> str:
    return " ".join("+" if v > 0 else ("-" if v < 0 else "0") for v in row)


def _matrix_rows(arr: np.ndarray) -> list[str]:
    return ["  ".join(f"{v:+.6f}" for v in row) for row in np.asarray(arr)]


def format_report(report: Report) -> str:
    """Plain-text rendering of a report."""
    lines = [f"scenario: {report.scenario_name}"]
    lines.append(
        "ranking checks: intensity "
        + ("pass" if report.ranking.intensity_ok else "FAIL")
        + ", middle factor "
        + ("pass" if report.ranking.middle_ok else "FAIL")
    )
    lines.append(f"allen tensor valid: {'yes' if report.aes_validity.ok else 'NO'}")
    lines.append("economy-wide substitution (rows/cols land, capital, labor):")
    lines += ["  " + row for row in _matrix_rows(report.ews.g)]
    v = report.vector
    lines.append(
        f"ratio vector: s'={v.s_prime:.6f} u'={v.u_prime:.6f} "
        f"denominator sign {'+' if v.sign_t > 0 else '-'} (quadrant {v.quadrant})"
    )
    lines.append(f"subregion: {report.subregion.value}")
    lines.append(f"strong output response: {'yes' if report.strong_result else 'no'}")
    lines.append("output-response signs (sectors x factors):")
    lines += ["  " + _sign_row(r) for r in report.output_signs.entries]
    lines.append("real-reward signs (deflators x factors):")
    lines += ["  " + _sign_row(r) for r in report.reward_signs.entries]
    lines.append("output elasticities:")
    lines += ["  " + row for row in _matrix_rows(report.rybczynski)]
    lines.append("real-reward elasticities:")
    lines += ["  " + row for row in _matrix_rows(report.stolper_samuelson)]
    lines.append(f"system determinant: {report.delta.value:.9g}")
    lines.append(f"numeric and tabled signs agree: {'yes' if report.signs_agree else 'NO'}")
    if report.responses:
        lines.append(f"worst solve residual: {report.max_residual:.3e}")
        for shock, response in report.responses:
            lines.append(
                f"shock price={shock.price_shock:+.4f} "
                f"endowments=({', '.join(f'{e:+.4f}' for e in shock.endowment_shocks)})"
            )
            w = ", ".join(f"{x:+.6f}" for x in response.w_hat)
            x = ", ".join(f"{x:+.6f}" for x in response.x_hat)
            lines.append(f"  rewards ({w})  outputs ({x})")
    return "\n".join(lines) + "\n"
