"""Comparative statics of the two-sector economy.

The 5x5 linear system stacks two zero-profit rows (distributive shares)
on three full-employment rows (economy-wide substitution plus allocation
shares). Unknowns are the three factor prices deflated by the first
good's price and the two output changes; shocks are the relative goods
price and the three endowments. Everything here is computed twice: once
through the closed forms (determinant, cofactors, sign tables) and once
through a dense pivoted solve. The two routes must agree or we raise.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ClosedFormMismatch, SingularSystem
from .geometry import Subregion, line_coefficients
from .shares import CAPITAL, LABOR, LAND, ShareTable
from .substitution import EwsMatrix, ews_ratio_vector

# Closed forms vs dense linear algebra, relative.
CROSS_CHECK_TOL = 1e-9
# Solve residuals, absolute.
RESIDUAL_TOL = 1e-10
# Entries at most this size get sign 0 and a flag; the sign tables
# contain no zeros for interior vectors.
SIGN_ZERO_TOL = 1e-12

_FACTOR_ROWS = (LAND, CAPITAL, LABOR)


@dataclass(frozen=True)
class SystemMatrix:
    """Coefficient matrix of the comparative-statics system."""

    a: np.ndarray

    def __post_init__(self):
        arr = np.array(self.a, dtype=float)
        arr.flags.writeable = False
        object.__setattr__(self, "a", arr)


@dataclass(frozen=True)
class ShockVector:
    """Log-differential shocks: relative goods price and endowments."""

    price_shock: float = 0.0
    endowment_shocks: tuple[float, float, float] = (0.0, 0.0, 0.0)

    def right_hand_side(self) -> np.ndarray:
        return np.array(
            [0.0, -self.price_shock, *self.endowment_shocks], dtype=float
        )


@dataclass(frozen=True)
class ResponseVector:
    """Solution of the system: factor prices deflated by the first
    good's price, and the two output changes."""

    w_hat: tuple[float, float, float]
    x_hat: tuple[float, float]
    residual: float

    def as_array(self) -> np.ndarray:
        return np.array([*self.w_hat, *self.x_hat], dtype=float)


@dataclass(frozen=True)
class SignPattern:
    """A 2x3 sign grid; entries in {-1, 0, +1}, rows per orientation.

    For "rybczynski" rows are sectors and columns factors; for
    "stolper_samuelson" rows are the two price deflators. zero_flagged
    marks numerically degenerate entries reported as 0.
    """

    entries: tuple[tuple[int, int, int], tuple[int, int, int]]
    orientation: str
    zero_flagged: bool = False


@dataclass(frozen=True)
class DeltaReport:
    """System determinant through three routes: dense elimination, the
    closed form in own-substitution terms, and the closed form in
    cross-substitution terms. Always negative."""

    dense: float
    via_own_terms: float
    via_cross_terms: float

    @property
    def value(self) -> float:
        return self.via_own_terms


@dataclass(frozen=True)
class CofactorReport:
    """The six output-response cofactors through three routes; each array
    is indexed [sector, factor]."""

    direct: np.ndarray
    expanded: np.ndarray
    factored: np.ndarray

    def __post_init__(self):
        for name in ("direct", "expanded", "factored"):
            arr = np.array(getattr(self, name), dtype=float)
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)

    @property
    def values(self) -> np.ndarray:
        return self.direct


def _relative_gap(x: float, y: float) -> float:
    # Entries that are zero in both routes (vectors essentially on a
    # border line) agree by definition; without the escape the relative
    # measure is noise over noise.
    if abs(x - y) <= SIGN_ZERO_TOL:
        return 0.0
    return abs(x - y) / max(abs(x), abs(y))


def assemble_system(table: ShareTable, g: EwsMatrix) -> SystemMatrix:
    """Stack zero-profit and full-employment rows."""
    a = np.zeros((5, 5))
    a[0, :3] = table.theta[:, 0]
    a[1, :3] = table.theta[:, 1]
    for row, factor in enumerate(_FACTOR_ROWS):
        a[2 + row, :3] = g.g[factor]
        a[2 + row, 3:] = table.lam[factor]
    return SystemMatrix(a=a)


def determinant_delta(sys: SystemMatrix, table: ShareTable, g: EwsMatrix) -> DeltaReport:
    """Determinant of the system through three agreeing routes."""
    dense = float(np.linalg.det(sys.a))
    a, b, _ = table.diff
    tf = table.theta_factor
    ts = table.theta_sector
    scale = ts[0] * ts[1] / (tf[LAND] * tf[CAPITAL] * tf[LABOR])
    own = scale * (
        a * a * g.g[CAPITAL, CAPITAL] * tf[CAPITAL]
        + b * b * g.g[LAND, LAND] * tf[LAND]
        - 2.0 * a * b * g.g[CAPITAL, LAND] * tf[CAPITAL]
    )
    cross = -scale * (
        (a + b) ** 2 * g.g[CAPITAL, LAND] * tf[CAPITAL]
        + g.g[LABOR, CAPITAL] * tf[LABOR] * a * a
        + g.g[LABOR, LAND] * tf[LABOR] * b * b
    )
    worst = max(
        _relative_gap(dense, own),
        _relative_gap(dense, cross),
        _relative_gap(own, cross),
    )
    if worst > CROSS_CHECK_TOL:
        raise ClosedFormMismatch(
            f"determinant routes disagree: dense {dense!r}, own-terms {own!r}, "
            f"cross-terms {cross!r}"
        )
    if not (dense < 0.0 and own < 0.0 and cross < 0.0):
        raise ClosedFormMismatch(f"system determinant must be negative, got {dense!r}")
    return DeltaReport(dense=dense, via_own_terms=own, via_cross_terms=cross)


def _det3(m: np.ndarray) -> float:
    return float(
        m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
        - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
        + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0])
    )


def cofactors(table: ShareTable, g: EwsMatrix) -> CofactorReport:
    """The six cofactors driving output responses, each computed three
    ways: as a literal 3x3 determinant, by its expanded four-term form,
    and through the border-line factorization."""
    a, b, _ = table.diff
    gg = g.g
    direct = np.empty((2, 3))
    expanded = np.empty((2, 3))
    # The cofactor for sector 0 carries the other sector's allocation
    # column, and vice versa.
    for sector in range(2):
        lc = table.lam[:, 1 - sector]
        for col, factor in enumerate(_FACTOR_ROWS):
            others = [f for f in _FACTOR_ROWS if f != factor]
            m = np.array(
                [
                    [a, b, 0.0],
                    [gg[others[0], LAND], gg[others[0], CAPITAL], lc[others[0]]],
                    [gg[others[1], LAND], gg[others[1], CAPITAL], lc[others[1]]],
                ]
            )
            direct[sector, col] = _det3(m)
        expanded[sector, LAND] = (
            a * gg[CAPITAL, CAPITAL] * lc[LABOR]
            + b * lc[CAPITAL] * gg[LABOR, LAND]
            - a * gg[LABOR, CAPITAL] * lc[CAPITAL]
            - b * gg[CAPITAL, LAND] * lc[LABOR]
        )
        expanded[sector, CAPITAL] = (
            a * gg[LAND, CAPITAL] * lc[LABOR]
            + b * lc[LAND] * gg[LABOR, LAND]
            - a * gg[LABOR, CAPITAL] * lc[LAND]
            - b * gg[LAND, LAND] * lc[LABOR]
        )
        expanded[sector, LABOR] = (
            a * gg[LAND, CAPITAL] * lc[CAPITAL]
            + b * lc[LAND] * gg[CAPITAL, LAND]
            - a * gg[CAPITAL, CAPITAL] * lc[LAND]
            - b * gg[LAND, LAND] * lc[CAPITAL]
        )

    v = ews_ratio_vector(g)
    lines = line_coefficients(table)
    factored = np.empty((2, 3))
    for sector in range(2):
        for factor in _FACTOR_ROWS:
            e = lines.abe[factor, sector, 2]
            offset = v.u_prime - lines.value(factor, sector, v.s_prime)
            factored[sector, factor] = e * v.t * offset

    worst = max(
        float(np.max(np.abs(direct - expanded))),
        float(np.max(np.abs(direct - factored))),
    ) / max(float(np.max(np.abs(direct))), 1e-300)
    if worst > CROSS_CHECK_TOL:
        raise ClosedFormMismatch(
            f"cofactor routes disagree beyond tolerance (relative gap {worst:e})"
        )
    return CofactorReport(direct=direct, expanded=expanded, factored=factored)


def solve_responses(sys: SystemMatrix, shock: ShockVector) -> ResponseVector:
    """Dense pivoted solve of the system for one shock."""
    rhs = shock.right_hand_side()
    try:
        x = np.linalg.solve(sys.a, rhs)
    except np.linalg.LinAlgError as exc:
        raise SingularSystem(f"comparative-statics system is singular: {exc}") from exc
    residual = float(np.max(np.abs(sys.a @ x - rhs)))
    if residual > RESIDUAL_TOL:
        raise SingularSystem(f"solve residual {residual:e} exceeds {RESIDUAL_TOL:e}")
    return ResponseVector(
        w_hat=tuple(float(v) for v in x[:3]),
        x_hat=(float(x[3]), float(x[4])),
        residual=residual,
    )


def rybczynski_matrix(table: ShareTable, g: EwsMatrix) -> np.ndarray:
    """Output elasticities to endowments, [sector, factor].

    Computed from the cofactor closed forms and verified entry by entry
    against unit-endowment dense solves.
    """
    report = cofactors(table, g)
    sys = assemble_system(table, g)
    delta = determinant_delta(sys, table, g).value
    closed = np.empty((2, 3))
    for sector in range(2):
        for factor in _FACTOR_ROWS:
            parity = 1.0 if (factor + sector) % 2 == 0 else -1.0
            closed[sector, factor] = parity * report.values[sector, factor] / delta
    for factor in _FACTOR_ROWS:
        shocks = [0.0, 0.0, 0.0]
        shocks[factor] = 1.0
        response = solve_responses(sys, ShockVector(endowment_shocks=tuple(shocks)))
        for sector in range(2):
            gap = _relative_gap(closed[sector, factor], response.x_hat[sector])
            if gap > CROSS_CHECK_TOL:
                raise ClosedFormMismatch(
                    "output-response closed form disagrees with the dense solve "
                    f"at sector {sector + 1}, factor {factor}: "
                    f"{closed[sector, factor]!r} vs {response.x_hat[sector]!r}"
                )
    return closed


def stolper_samuelson_matrix(
    table: ShareTable, g: EwsMatrix, ryb: np.ndarray
) -> np.ndarray:
    """Real factor-price elasticities to the relative goods price,
    [deflator, factor]; row 0 deflates by the first good's price, row 1
    by the second's.

    Built from the output-response matrix by reciprocity and verified
    against a dense pure-price-shock solve.
    """
    tf = table.theta_factor
    ts = table.theta_sector
    ss = np.empty((2, 3))
    for factor in _FACTOR_ROWS:
        ss[0, factor] = -(ts[1] / tf[factor]) * ryb[1, factor]
        ss[1, factor] = (ts[0] / tf[factor]) * ryb[0, factor]
    sys = assemble_system(table, g)
    response = solve_responses(sys, ShockVector(price_shock=1.0))
    for factor in _FACTOR_ROWS:
        gap0 = _relative_gap(ss[0, factor], response.w_hat[factor])
        gap1 = _relative_gap(ss[1, factor], response.w_hat[factor] + 1.0)
        if max(gap0, gap1) > CROSS_CHECK_TOL:
            raise ClosedFormMismatch(
                "reciprocity form disagrees with the dense price-shock solve "
                f"at factor {factor}"
            )
    return ss


# Sign tables, one column per subregion. Rows are sectors for the output
# patterns and price deflators for the real-reward patterns; columns are
# (land, capital, labor). The P and M columns pair up: P1..P5 match
# M3..M7.
RYBCZYNSKI_SIGNS: dict[Subregion, tuple[tuple[int, int, int], tuple[int, int, int]]] = {
    Subregion.P1: ((1, -1, -1), (-1, 1, 1)),
    Subregion.P2: ((1, -1, 1), (-1, 1, 1)),
    Subregion.P3: ((1, -1, 1), (-1, 1, -1)),
    Subregion.P4: ((1, -1, 1), (1, 1, -1)),
    Subregion.P5: ((-1, -1, 1), (1, 1, -1)),
    Subregion.M1: ((1, 1, -1), (-1, -1, 1)),
    Subregion.M2: ((1, 1, -1), (-1, 1, 1)),
    Subregion.M3: ((1, -1, -1), (-1, 1, 1)),
    Subregion.M4: ((1, -1, 1), (-1, 1, 1)),
    Subregion.M5: ((1, -1, 1), (-1, 1, -1)),
    Subregion.M6: ((1, -1, 1), (1, 1, -1)),
    Subregion.M7: ((-1, -1, 1), (1, 1, -1)),
}

STOLPER_SAMUELSON_SIGNS: dict[
    Subregion, tuple[tuple[int, int, int], tuple[int, int, int]]
] = {
    Subregion.P1: ((1, -1, -1), (1, -1, -1)),
    Subregion.P2: ((1, -1, -1), (1, -1, 1)),
    Subregion.P3: ((1, -1, 1), (1, -1, 1)),
    Subregion.P4: ((-1, -1, 1), (1, -1, 1)),
    Subregion.P5: ((-1, -1, 1), (-1, -1, 1)),
    Subregion.M1: ((1, 1, -1), (1, 1, -1)),
    Subregion.M2: ((1, -1, -1), (1, 1, -1)),
    Subregion.M3: ((1, -1, -1), (1, -1, -1)),
    Subregion.M4: ((1, -1, -1), (1, -1, 1)),
    Subregion.M5: ((1, -1, 1), (1, -1, 1)),
    Subregion.M6: ((-1, -1, 1), (1, -1, 1)),
    Subregion.M7: ((-1, -1, 1), (-1, -1, 1)),
}

_STRONG_RESULT_REGIONS = frozenset(
    {
        Subregion.P1,
        Subregion.P2,
        Subregion.P3,
        Subregion.M3,
        Subregion.M4,
        Subregion.M5,
    }
)


def sign_pattern_lookup(region: Subregion, kind: str) -> SignPattern:
    """Tabled sign pattern of a subregion, kind "rybczynski" or
    "stolper_samuelson"."""
    if kind == "rybczynski":
        return SignPattern(entries=RYBCZYNSKI_SIGNS[region], orientation=kind)
    if kind == "stolper_samuelson":
        return SignPattern(entries=STOLPER_SAMUELSON_SIGNS[region], orientation=kind)
    raise ValueError(f"unknown sign-pattern kind {kind!r}")


def sign_pattern_from_values(values: np.ndarray, orientation: str) -> SignPattern:
    """Extract the sign grid of a numeric 2x3 matrix, flagging entries
    too close to zero to call."""
    arr = np.asarray(values, dtype=float)
    flagged = bool(np.min(np.abs(arr)) <= SIGN_ZERO_TOL)
    entries = tuple(
        tuple(0 if abs(v) <= SIGN_ZERO_TOL else (1 if v > 0 else -1) for v in row)
        for row in arr
    )
    return SignPattern(entries=entries, orientation=orientation, zero_flagged=flagged)


def strong_rybczynski(region: Subregion) -> bool:
    """Whether each extreme factor's growth raises its intensive sector's
    output and lowers the other's."""
    return region in _STRONG_RESULT_REGIONS
