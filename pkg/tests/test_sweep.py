import pytest

from ews32 import ParseError, parse_grid, scenario_from_mapping, sweep, format_csv
from ews32.sweep import CSV_COLUMNS, GRID_KEYS

from test_scenario import REFERENCE_DOC


@pytest.fixture
def reference_scenario():
    return scenario_from_mapping(dict(REFERENCE_DOC))


def test_parse_grid_single():
    grid = parse_grid("land_capital_1=-3:3:7")
    assert list(grid) == ["land_capital_1"]
    assert grid["land_capital_1"] == [-3.0, -2.0, -1.0, 0.0, 1.0, 2.0, 3.0]


def test_parse_grid_multiple_and_whitespace():
    grid = parse_grid(" land_labor_2 = 0.5:1.5:3 , capital_labor_1=1:1:1 ")
    assert grid["land_labor_2"] == [0.5, 1.0, 1.5]
    assert grid["capital_labor_1"] == [1.0]


def test_parse_grid_errors():
    for bad in (
        "",
        "land_capital_1",
        "own_1=-1:1:3",
        "land_capital_1=-1:1:3,land_capital_1=0:1:2",
        "land_capital_1=-1:1",
        "land_capital_1=a:1:3",
        "land_capital_1=-1:1:0",
    ):
        with pytest.raises(ParseError):
            parse_grid(bad)


def test_sweep_reference_line(reference_scenario):
    rows = sweep(reference_scenario, parse_grid("land_capital_1=-3:3:7"))
    assert len(rows) == 7
    # Strongly negative land-capital elasticities break curvature in the
    # first sector; the rows stay in the output with a reason.
    for row, value in zip(rows[:3], (-3.0, -2.0, -1.0)):
        assert row["land_capital_1"] == value
        assert row["status"] == "rejected (own-negativity/quasi-concavity)"
        assert row["subregion"] is None and row["s_prime"] is None
    for row in rows[3:]:
        assert row["status"] == "ok"
        assert row["sign_t"] in (-1, 1)
    # The grid passes through the all-unit tensor; that row must replay
    # the reference classification.
    unit = rows[4]
    assert unit["land_capital_1"] == 1.0
    assert unit["subregion"] == "P2"
    assert unit["strong_result"] is True
    assert unit["s_prime"] == pytest.approx(0.7093023255813954, rel=1e-12)


def test_sweep_untouched_entries_keep_template(reference_scenario):
    rows = sweep(reference_scenario, parse_grid("land_capital_1=0:0:1"))
    (row,) = rows
    # Every other off-diagonal still carries the template's value.
    for key in GRID_KEYS[1:]:
        assert row[key] == 1.0


def test_sweep_rejects_unknown_key(reference_scenario):
    with pytest.raises(ParseError):
        sweep(reference_scenario, {"diagonal_1": [1.0]})


def test_csv_layout(reference_scenario):
    rows = sweep(reference_scenario, parse_grid("land_capital_1=-3:3:7"))
    text = format_csv(rows)
    lines = text.splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == 8
    assert text.endswith("\n")
    rejected = lines[1].split(",")
    assert rejected[0] == "-3"
    assert rejected[6:11] == ["", "", "", "", ""]
    assert rejected[11] == "rejected (own-negativity/quasi-concavity)"
    unit = lines[5].split(",")
    assert unit[6] == "0.709302326"  # nine significant digits
    assert unit[8] == "+"
    assert unit[9] == "P2"
    assert unit[10] == "true"


def test_csv_deterministic(reference_scenario):
    grid = parse_grid("land_capital_1=-1:2:4,capital_labor_2=0.5:1.5:2")
    assert format_csv(sweep(reference_scenario, grid)) == format_csv(
        sweep(reference_scenario, grid)
    )
