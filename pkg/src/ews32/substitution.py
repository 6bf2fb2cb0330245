"""Allen elasticities, economy-wide substitution, and the ratio vector.

The pipeline is sigma -> epsilon -> g: per-sector Allen elasticities are
scaled by distributive shares into price elasticities of factor demand,
then aggregated across sectors with allocation shares into the 3x3
economy-wide substitution matrix g. The off-diagonal triple of g, divided
through by its labor-land entry, is the ratio vector that drives all
later classification.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    ConsistencyError,
    DegenerateT,
    GenerationExhausted,
    Infeasible,
    InconsistentLevels,
    InvalidAes,
    NonPositiveLevels,
)
from .shares import CAPITAL, LABOR, LAND, ShareTable

# Identity checks compare quantities of order one, absolute tolerance.
IDENTITY_TOL = 1e-10
# Below this the ratio vector is numerically meaningless.
DEGENERATE_T_TOL = 1e-12


def _readonly(arr: np.ndarray) -> np.ndarray:
    out = np.array(arr, dtype=float)
    out.flags.writeable = False
    return out


@dataclass(frozen=True)
class AesTensor:
    """Allen partial elasticities sigma[j, i, h] for sector j and factor
    pair (i, h); symmetric in (i, h) with negative diagonal."""

    sigma: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "sigma", _readonly(self.sigma))
        if self.sigma.shape != (2, 3, 3):
            raise InvalidAes(f"sigma must be 2x3x3, got {self.sigma.shape}")


@dataclass(frozen=True)
class EpsilonTensor:
    """Price elasticities of cost-minimizing input use, eps[j, i, h]:
    response of factor i's unit requirement in sector j to factor h's
    price. Rows sum to zero by linear homogeneity of cost."""

    eps: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "eps", _readonly(self.eps))


@dataclass(frozen=True)
class EwsMatrix:
    """Economy-wide substitution matrix g[i, h]: output-constant response
    of factor i's aggregate use to factor h's price."""

    g: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "g", _readonly(self.g))


@dataclass(frozen=True)
class EwsRatioVector:
    """The off-diagonal substitution triple and its normalized form.

    (s, t, u) = (g[labor, capital], g[labor, land], g[capital, land]);
    s_prime = s/t, u_prime = u/t. sign_t is +1 or -1.
    """

    s: float
    t: float
    u: float
    s_prime: float
    u_prime: float
    sign_t: int

    @property
    def quadrant(self) -> int:
        """Quadrant of (s_prime, u_prime), counted 1..4 counterclockwise."""
        if self.s_prime > 0:
            return 1 if self.u_prime > 0 else 4
        return 2 if self.u_prime > 0 else 3


@dataclass(frozen=True)
class ValidityReport:
    """Itemized outcome of the Allen-tensor checks, per sector."""

    symmetry_ok: tuple[bool, bool]
    own_negativity_ok: tuple[bool, bool]
    homogeneity_ok: tuple[bool, bool]
    quasi_concavity_ok: tuple[bool, bool]

    @property
    def ok(self) -> bool:
        return all(
            all(flags)
            for flags in (
                self.symmetry_ok,
                self.own_negativity_ok,
                self.homogeneity_ok,
                self.quasi_concavity_ok,
            )
        )


def validate_aes(aes: AesTensor, table: ShareTable) -> ValidityReport:
    """Check symmetry, negative own elasticities, share-weighted row sums
    of zero, and strict quasi-concavity (scaled 2x2 minor positive) for
    each sector."""
    sym, own, hom, qc = [], [], [], []
    for j in range(2):
        s = aes.sigma[j]
        th = table.theta[:, j]
        sym.append(bool(np.max(np.abs(s - s.T)) <= IDENTITY_TOL))
        own.append(bool(np.all(np.diag(s) < 0.0)))
        hom.append(bool(np.max(np.abs(s @ th)) <= IDENTITY_TOL))
        e = th[:, np.newaxis] * th[np.newaxis, :] * s
        qc.append(bool(e[LAND, LAND] * e[CAPITAL, CAPITAL] - e[LAND, CAPITAL] ** 2 > 0.0))
    return ValidityReport(
        symmetry_ok=tuple(sym),
        own_negativity_ok=tuple(own),
        homogeneity_ok=tuple(hom),
        quasi_concavity_ok=tuple(qc),
    )


def require_valid_aes(aes: AesTensor, table: ShareTable) -> None:
    """Raise unless every Allen-tensor invariant holds."""
    report = validate_aes(aes, table)
    if report.ok:
        return
    failures = []
    for name, flags in (
        ("symmetry", report.symmetry_ok),
        ("negative own elasticities", report.own_negativity_ok),
        ("share-weighted homogeneity", report.homogeneity_ok),
        ("strict quasi-concavity", report.quasi_concavity_ok),
    ):
        for j, flag in enumerate(flags):
            if not flag:
                failures.append(f"{name} (sector {j + 1})")
    raise InvalidAes("Allen tensor invalid: " + "; ".join(failures))


def cobb_douglas_aes(table: ShareTable) -> AesTensor:
    """Unit elasticities between distinct factors; diagonals follow from
    homogeneity as -(1 - theta_ij)/theta_ij."""
    sigma = np.ones((2, 3, 3))
    for j in range(2):
        for i in range(3):
            th = table.theta[i, j]
            sigma[j, i, i] = -(1.0 - th) / th
    return AesTensor(sigma=sigma)


def epsilon_from_aes(aes: AesTensor, table: ShareTable) -> EpsilonTensor:
    """Scale each Allen elasticity by the price-owner's distributive share."""
    require_valid_aes(aes, table)
    eps = table.theta.T[:, np.newaxis, :] * aes.sigma
    rowsums = np.max(np.abs(eps.sum(axis=2)))
    if rowsums > IDENTITY_TOL:
        raise ConsistencyError(f"epsilon rows must sum to zero, worst residual {rowsums:e}")
    return EpsilonTensor(eps=eps)


def ews_from_epsilon(eps: EpsilonTensor, table: ShareTable) -> EwsMatrix:
    """Aggregate sector price elasticities with allocation shares."""
    g = np.einsum("ij,jih->ih", table.lam, eps.eps)
    _require_ews_invariants(g, table)
    return EwsMatrix(g=g)


def _require_ews_invariants(g: np.ndarray, table: ShareTable) -> None:
    # Guaranteed for valid inputs, so a failure here means an upstream bug.
    tf = table.theta_factor
    if np.max(np.abs(g.sum(axis=1))) > IDENTITY_TOL:
        raise ConsistencyError("economy-wide substitution rows must sum to zero")
    if np.max(np.abs(g * tf[:, np.newaxis] - g.T * tf[np.newaxis, :])) > IDENTITY_TOL:
        raise ConsistencyError("share-weighted symmetry of economy-wide substitution failed")
    if not np.all(np.diag(g) < 0.0):
        raise ConsistencyError("economy-wide own substitution must be negative")
    minor = g[CAPITAL, CAPITAL] * g[LAND, LAND] - g[LAND, CAPITAL] * g[CAPITAL, LAND]
    if not minor > 0.0:
        raise ConsistencyError("land/capital substitution minor must be positive")
    off = (g[LABOR, CAPITAL], g[LABOR, LAND], g[CAPITAL, LAND])
    if sum(1 for v in off if v < 0.0) > 1:
        raise ConsistencyError("at most one economy-wide complement pair is possible")


def ews_ratio_vector(g: EwsMatrix) -> EwsRatioVector:
    """Normalize the off-diagonal triple by the labor-land entry."""
    s = float(g.g[LABOR, CAPITAL])
    t = float(g.g[LABOR, LAND])
    u = float(g.g[CAPITAL, LAND])
    if abs(t) <= DEGENERATE_T_TOL:
        raise DegenerateT(
            "labor-land substitution is numerically zero; the ratio vector is undefined"
        )
    return EwsRatioVector(
        s=s, t=t, u=u, s_prime=s / t, u_prime=u / t, sign_t=1 if t > 0 else -1
    )


def ews_from_stu(table: ShareTable, s: float, t: float, u: float) -> EwsMatrix:
    """Build the full substitution matrix from a target off-diagonal
    triple, using share-weighted symmetry for the upper triangle and zero
    row sums for the diagonal.

    Valid placements need s + t > 0 and u(s + t) + (theta_L/theta_K)st > 0;
    the own-negativity and minor conditions then follow.
    """
    ratio_lk = table.labor_to_capital
    if not s + t > 0.0:
        raise Infeasible("labor's off-diagonal substitution terms must sum positive")
    if not u * (s + t) + ratio_lk * s * t > 0.0:
        raise Infeasible("placement lies outside the feasible side of the boundary curve")
    tf = table.theta_factor
    g = np.empty((3, 3))
    g[LABOR, CAPITAL] = s
    g[LABOR, LAND] = t
    g[CAPITAL, LAND] = u
    g[CAPITAL, LABOR] = (tf[LABOR] / tf[CAPITAL]) * s
    g[LAND, CAPITAL] = (tf[CAPITAL] / tf[LAND]) * u
    g[LAND, LABOR] = (tf[LABOR] / tf[LAND]) * t
    for i in range(3):
        g[i, i] = 0.0
        g[i, i] = -g[i].sum()
    _require_ews_invariants(g, table)
    return EwsMatrix(g=g)


def sample_valid_aes(
    table: ShareTable,
    seed: int,
    spread: float = 3.0,
    max_attempts: int = 10000,
) -> AesTensor:
    """Draw a random valid Allen tensor: off-diagonals uniform on
    [-spread, spread], diagonals completed by homogeneity, rejected until
    own-negativity and quasi-concavity hold. Deterministic per seed."""
    rng = np.random.default_rng(seed)
    sigma = np.empty((2, 3, 3))
    for j in range(2):
        th = table.theta[:, j]
        for _ in range(max_attempts):
            tk, tl, kl = rng.uniform(-spread, spread, size=3)
            s = np.array([[0.0, tk, tl], [tk, 0.0, kl], [tl, kl, 0.0]])
            for i in range(3):
                s[i, i] = -(s[i] @ th) / th[i]
            if not np.all(np.diag(s) < 0.0):
                continue
            e = th[:, np.newaxis] * th[np.newaxis, :] * s
            if e[LAND, LAND] * e[CAPITAL, CAPITAL] - e[LAND, CAPITAL] ** 2 > 0.0:
                sigma[j] = s
                break
        else:
            raise GenerationExhausted(
                f"no valid Allen tensor for sector {j + 1} in {max_attempts} draws"
            )
    return AesTensor(sigma=sigma)


def aggregate_substitution(g: EwsMatrix, endowments, prices) -> np.ndarray:
    """Aggregate substitution in levels: s[i, h] = g[i, h] * V_i / w_h.

    Requires factor incomes w_i * V_i proportional to the factor shares
    the matrix g was built from; otherwise the result cannot be symmetric
    and the levels contradict the share data.
    """
    v = np.asarray(endowments, dtype=float)
    w = np.asarray(prices, dtype=float)
    if v.shape != (3,) or w.shape != (3,):
        raise NonPositiveLevels("endowments and prices must each have 3 entries")
    if np.any(v <= 0.0) or np.any(w <= 0.0):
        raise NonPositiveLevels("endowments and prices must be strictly positive")
    s = g.g * v[:, np.newaxis] / w[np.newaxis, :]
    if np.max(np.abs(s - s.T)) > IDENTITY_TOL:
        raise InconsistentLevels(
            "factor incomes implied by the levels do not match the share table; "
            "aggregate substitution would lose symmetry"
        )
    return s
