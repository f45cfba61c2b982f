"""Self-judging numerical checks of the spectral theorems.

Each check builds its pencils from scratch, records every number it used in
an :class:`ExperimentReport`, and derives the verdict from named boolean
criteria so the verdict can be recomputed from the report alone.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy import linalg

from .eigensolver import (
    DEFAULT_GAP_THRESHOLD,
    DEFAULT_REL_THRESHOLD,
    POSITIVE,
    SIGN_CHANGING,
    SIMPLE,
    EigenResult,
    build_pencil,
    classify_sign,
    rayleigh_quotient,
    sign_classification,
    simplicity_diagnostic,
    smallest_eigenpairs,
)
from .errors import DomainError, PreconditionError
from .grid import Domain, Grid, build_grid, component_restriction
from .measure import SignedMeasure, canonical_atoms
from .operator import assemble_single

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"

CSV_COLUMNS = ("parameter", "lambda1", "lambda2", "gap", "residual1", "min_v", "max_v")

LAPLACIAN = ((1.0, 1.0),)
IDENTITY = ((0.0, 1.0),)


@dataclass
class ExperimentReport:
    name: str
    verdict: str
    criteria: dict[str, bool]
    evidence: list[tuple[str, float]]
    parameters: dict
    tolerances: dict
    table: list[dict] = field(default_factory=list)

    def value(self, label: str):
        for k, v in self.evidence:
            if k == label:
                return v
        raise KeyError(label)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "verdict": self.verdict,
            "criteria": dict(self.criteria),
            "evidence": [[k, v] for k, v in self.evidence],
            "parameters": self.parameters,
            "tolerances": self.tolerances,
            "table": self.table,
        }


def _verdict(criteria: dict[str, bool], inconclusive: bool = False) -> str:
    if all(criteria.values()):
        return PASS
    return INCONCLUSIVE if inconclusive else FAIL


def _as_domain(domain) -> Domain:
    return domain if isinstance(domain, Domain) else Domain(tuple(tuple(iv) for iv in domain))


def solve(grid: Grid, plus, minus, k: int = 2, s_bar: float = 1.0, tol: float = 1e-8) -> tuple:
    measure = SignedMeasure(plus, minus, s_bar)
    pencil = build_pencil(grid, measure)
    return pencil, smallest_eigenpairs(pencil, k=min(k, grid.n), tol=tol)


def table_row(parameter: float, res: EigenResult) -> dict:
    v = res.first
    return {
        "parameter": float(parameter),
        "lambda1": float(res.lambdas[0]),
        "lambda2": float(res.lambdas[1]) if res.k > 1 else float("nan"),
        "gap": res.gap if res.k > 1 else float("nan"),
        "residual1": float(res.residuals[0]),
        "min_v": float(v.min()),
        "max_v": float(v.max()),
    }


def l2h(grid: Grid, v: np.ndarray) -> float:
    return float(np.sqrt(grid.h * (v @ v)))


def _strictly_decreasing(values: Sequence[float]) -> bool:
    return all(b < a for a, b in zip(values, values[1:]))


def _check_descending(values: Sequence[float], what: str, lo: float = 0.0, hi: float = 1.0) -> list[float]:
    values = [float(v) for v in values]
    if not values:
        raise DomainError(f"{what} is empty")
    if not _strictly_decreasing(values):
        raise DomainError(f"{what} must be strictly decreasing")
    if not all(lo < v < hi for v in values):
        raise PreconditionError(f"{what} entries must lie in ({lo}, {hi})")
    return values


def localization_sweep(
    domain,
    mu_plus,
    eps_list: Sequence[float],
    h: float,
    *,
    s_bar: float = 1.0,
    variant: str = "dirac",
    tol_conv: float = 0.02,
    tol_vec: float = 0.05,
    cluster_tol: float = 1e-8,
    tol: float = 1e-8,
    name: str = "localization",
) -> ExperimentReport:
    """Shrink the minus part onto s=0 and watch the first eigenpair converge.

    ``variant="dirac"`` uses ``delta_eps``; ``variant="split"`` puts half the
    mass at 0 and half at ``eps``.  Both are probability measures supported
    in ``[0, eps]``.
    """
    eps_list = _check_descending(eps_list, "eps_list", 0.0, s_bar)
    if variant not in ("dirac", "split"):
        raise DomainError(f"unknown localization variant {variant!r}")
    plus = canonical_atoms(mu_plus)
    grid = build_grid(_as_domain(domain), h)

    _, ref = solve(grid, plus, IDENTITY, k=2, s_bar=s_bar, tol=tol)
    lam0 = float(ref.lambdas[0])
    clustered = ref.k > 1 and ref.gap <= cluster_tol
    u0 = ref.first
    norm_u0 = l2h(grid, u0)
    basis = ref.vectors if clustered else ref.vectors[:, :1]
    q, _ = np.linalg.qr(basis)

    evidence: list[tuple[str, float]] = [("lambda0", lam0), ("norm_u0", norm_u0), ("lambda0_clustered", float(clustered))]
    table, defects, dists = [], [], []
    for eps in eps_list:
        minus = [(eps, 1.0)] if variant == "dirac" else [(0.0, 0.5), (eps, 0.5)]
        _, res = solve(grid, plus, minus, k=2, s_bar=s_bar, tol=tol)
        lam = float(res.lambdas[0])
        u = res.first
        if clustered:
            # basis-ambiguous limit: distance to the limit eigenspace
            proj = q @ (q.T @ u)
            dist = l2h(grid, u - proj)
        else:
            aligned = u if u @ u0 >= 0 else -u
            dist = l2h(grid, aligned - u0)
        defects.append(abs(lam - lam0))
        dists.append(dist)
        table.append(table_row(eps, res))
        evidence += [
            (f"eps={eps!r}/lambda", lam),
            (f"eps={eps!r}/abs_error", abs(lam - lam0)),
            (f"eps={eps!r}/vector_distance", dist),
        ]
    final_rel = defects[-1] / lam0
    evidence += [("final_rel_error", final_rel), ("final_vector_distance", dists[-1])]
    criteria = {
        "error_decreasing_last3": _strictly_decreasing(defects[-3:]),
        "final_rel_error_below_tol_conv": final_rel < tol_conv,
        "final_vector_distance_below_tol_vec": dists[-1] < tol_vec * norm_u0,
    }
    return ExperimentReport(
        name, _verdict(criteria), criteria, evidence,
        {"domain": grid.domain.to_json(), "mu_plus": [[a.s, a.weight] for a in plus],
         "eps_list": eps_list, "h": h, "s_bar": s_bar, "variant": variant},
        {"tol_conv": tol_conv, "tol_vec": tol_vec, "cluster_tol": cluster_tol, "solver_tol": tol},
        table,
    )


def simplicity_positivity_check(
    domain,
    s_minus: float,
    h: float,
    *,
    rel_threshold: float = DEFAULT_REL_THRESHOLD,
    gap_threshold: float = DEFAULT_GAP_THRESHOLD,
    small_s_limit: float = 0.2,
    tol: float = 1e-8,
    name: str = "simplicity_positivity",
) -> ExperimentReport:
    """Connected domain, Laplacian over delta_{s_minus}: simple and one-signed."""
    domain = _as_domain(domain)
    if len(domain) != 1:
        raise PreconditionError("simplicity/positivity needs a connected domain (one interval)")
    if not (0.0 < s_minus <= 0.5):
        raise PreconditionError("s_minus must lie in (0, 1/2]")
    grid = build_grid(domain, h)
    _, res = solve(grid, LAPLACIAN, [(s_minus, 1.0)], k=2, tol=tol)
    sign = sign_classification(res, rel_threshold)
    simple = simplicity_diagnostic(res, gap_threshold)
    v = res.first
    criteria = {"first_vector_positive": sign == POSITIVE, "first_eigenvalue_simple": simple == SIMPLE}
    evidence = [
        ("lambda1", float(res.lambdas[0])),
        ("lambda2", float(res.lambdas[1])),
        ("gap", res.gap),
        ("min_v_over_max_abs", float(v.min() / np.abs(v).max())),
        ("residual1", float(res.residuals[0])),
    ]
    return ExperimentReport(
        name, _verdict(criteria, inconclusive=s_minus > small_s_limit), criteria, evidence,
        {"domain": domain.to_json(), "s_minus": s_minus, "h": h},
        {"rel_threshold": rel_threshold, "gap_threshold": gap_threshold,
         "small_s_limit": small_s_limit, "solver_tol": tol},
        [table_row(s_minus, res)],
    )


def symmetry_defect(grid: Grid, v: np.ndarray) -> float:
    """min(|v - Rv|, |v + Rv|) / |v| for the reflection ``x -> -x``."""
    Rv = v[grid.reflection()]
    nv = np.linalg.norm(v)
    return float(min(np.linalg.norm(v - Rv), np.linalg.norm(v + Rv)) / nv)


def sign_change_check(
    domain,
    s_minus: float,
    h: float,
    *,
    rel_threshold: float = DEFAULT_REL_THRESHOLD,
    cluster_threshold: float = DEFAULT_GAP_THRESHOLD,
    tol: float = 1e-8,
    name: str = "sign_change",
) -> ExperimentReport:
    """Disconnected domain: the first eigenvector takes both signs."""
    domain = _as_domain(domain)
    if len(domain) < 2:
        raise PreconditionError("sign change needs a disconnected domain (>= 2 intervals)")
    if not (0.0 < s_minus < 1.0):
        raise PreconditionError("s_minus must lie in (0, 1)")
    grid = build_grid(domain, h)
    _, res = solve(grid, LAPLACIAN, [(s_minus, 1.0)], k=2, tol=tol)
    sign = sign_classification(res, rel_threshold, cluster_threshold)
    profile = res.sign_profile
    dominant = ["+" if hi >= -lo else "-" for lo, hi in profile]
    criteria = {
        "first_vector_sign_changing": sign == SIGN_CHANGING,
        "opposite_dominant_signs": "+" in dominant and "-" in dominant,
    }
    evidence: list[tuple[str, float]] = [
        ("lambda1", float(res.lambdas[0])),
        ("lambda2", float(res.lambdas[1])),
        ("gap", res.gap),
        ("residual1", float(res.residuals[0])),
    ]
    for j, (lo, hi) in enumerate(profile):
        evidence += [(f"component{j}/min_v", lo), (f"component{j}/max_v", hi)]
    if domain.is_symmetric():
        evidence.append(("symmetry_defect", symmetry_defect(grid, res.first)))
    return ExperimentReport(
        name, _verdict(criteria), criteria, evidence,
        {"domain": domain.to_json(), "s_minus": s_minus, "h": h},
        {"rel_threshold": rel_threshold, "cluster_threshold": cluster_threshold, "solver_tol": tol},
        [table_row(s_minus, res)],
    )


def union_inequality_check(
    omega1,
    omega2,
    s_minus: float,
    h: float,
    *,
    margin_factor: float = 10.0,
    mixture_margin_factor: float = 10.0,
    n_theta: int = 91,
    classical_rel_tol: float = 1e-12,
    rel_threshold: float = DEFAULT_REL_THRESHOLD,
    tol: float = 1e-8,
    name: str = "union_inequality",
) -> ExperimentReport:
    """Strict eigenvalue drop on a union and failure of nonnegative mixtures."""
    omega1, omega2 = _as_domain(omega1), _as_domain(omega2)
    union = omega1.union(omega2)
    if not (0.0 < s_minus < 1.0):
        raise PreconditionError("s_minus must lie in (0, 1)")
    minus = [(s_minus, 1.0)]
    g1, g2, gu = build_grid(omega1, h), build_grid(omega2, h), build_grid(union, h)
    _, r1 = solve(g1, LAPLACIAN, minus, k=1, tol=tol)
    _, r2 = solve(g2, LAPLACIAN, minus, k=1, tol=tol)
    pu, ru = solve(gu, LAPLACIAN, minus, k=2, tol=tol)
    l1, l2, lu = float(r1.lambdas[0]), float(r2.lambdas[0]), float(ru.lambdas[0])
    resid_scale = float(r1.residuals[0] * l1 + r2.residuals[0] * l2 + ru.residuals[0] * lu)

    u1 = gu.lift(g1, r1.first)
    u2 = gu.lift(g2, r2.first)
    thetas = np.linspace(0.0, np.pi / 2, n_theta)
    rq = np.array([rayleigh_quotient(pu, np.cos(t) * u1 + np.sin(t) * u2) for t in thetas])
    i_best = int(np.argmin(rq))

    positive = classify_sign(r1.first, rel_threshold) == POSITIVE and classify_sign(r2.first, rel_threshold) == POSITIVE

    _, c1 = solve(g1, LAPLACIAN, IDENTITY, k=1, tol=tol)
    _, c2 = solve(g2, LAPLACIAN, IDENTITY, k=1, tol=tol)
    _, cu = solve(gu, LAPLACIAN, IDENTITY, k=1, tol=tol)
    cmin = min(float(c1.lambdas[0]), float(c2.lambdas[0]))
    classical_dev = abs(float(cu.lambdas[0]) - cmin) / cmin

    drop = min(l1, l2) - lu
    criteria = {
        "components_have_positive_eigenvectors": positive,
        "strict_union_inequality": drop > margin_factor * resid_scale,
        "nonnegative_mixtures_not_eigenvectors": float(rq[i_best] - lu) > mixture_margin_factor * resid_scale,
        "classical_contrast_equality": classical_dev <= classical_rel_tol,
    }
    evidence = [
        ("lambda_omega1", l1),
        ("lambda_omega2", l2),
        ("lambda_union", lu),
        ("congruence_rel_diff", abs(l1 - l2) / min(l1, l2)),
        ("residual_scale", resid_scale),
        ("drop", drop),
        ("drop_over_residual_scale", drop / resid_scale if resid_scale > 0 else float("inf")),
        ("theta_best", float(thetas[i_best])),
        ("rq_best_mixture", float(rq[i_best])),
        ("mixture_excess_over_residual_scale",
         float(rq[i_best] - lu) / resid_scale if resid_scale > 0 else float("inf")),
        ("classical_lambda_union", float(cu.lambdas[0])),
        ("classical_lambda_min_component", cmin),
        ("classical_rel_deviation", classical_dev),
    ]
    return ExperimentReport(
        name, _verdict(criteria, inconclusive=not positive), criteria, evidence,
        {"omega1": omega1.to_json(), "omega2": omega2.to_json(), "s_minus": s_minus, "h": h,
         "n_theta": n_theta},
        {"margin_factor": margin_factor, "mixture_margin_factor": mixture_margin_factor,
         "classical_rel_tol": classical_rel_tol,
         "rel_threshold": rel_threshold, "solver_tol": tol},
        [table_row(s_minus, ru)],
    )


def simplicity_scan(
    domain,
    s_list: Sequence[float],
    h: float,
    *,
    expect: str,
    gap_threshold: float = 1e-2,
    gap_floor: float = 5e-2,
    tol: float = 1e-8,
    name: str | None = None,
) -> ExperimentReport:
    """Relative gap of the first two eigenvalues as the minus order shrinks.

    ``expect="degenerate"`` passes when the gap decreases along ``s_list``
    and ends below ``gap_threshold``; ``expect="simple"`` passes when every
    gap stays at or above ``gap_floor``.
    """
    domain = _as_domain(domain)
    if len(domain) != 2:
        raise DomainError("simplicity scan needs exactly two intervals")
    if expect not in ("degenerate", "simple"):
        raise DomainError(f"expect must be 'degenerate' or 'simple', got {expect!r}")
    s_list = _check_descending(s_list, "s_list")
    grid = build_grid(domain, h)
    gammas, table = [], []
    evidence: list[tuple[str, float]] = []
    for s in s_list:
        _, res = solve(grid, LAPLACIAN, [(s, 1.0)], k=2, tol=tol)
        gammas.append(res.gap)
        table.append(table_row(s, res))
        evidence.append((f"s={s!r}/gap", res.gap))
    decreasing = _strictly_decreasing(gammas)
    evidence += [("gap_at_min_s", gammas[-1]), ("min_gap", min(gammas)), ("max_gap", max(gammas)),
                 ("gap_decreasing", float(decreasing))]
    if expect == "degenerate":
        criteria = {"gap_decreasing": decreasing, "gap_at_min_s_below_threshold": gammas[-1] < gap_threshold}
    else:
        criteria = {"gap_above_floor": min(gammas) >= gap_floor}
    return ExperimentReport(
        name or f"simplicity_scan_{expect}", _verdict(criteria), criteria, evidence,
        {"domain": domain.to_json(), "s_list": s_list, "h": h, "expect": expect},
        {"gap_threshold": gap_threshold, "gap_floor": gap_floor, "solver_tol": tol},
        table,
    )


def classical_limit_oracle(
    domain,
    h: float,
    *,
    rel_tol: float = 1e-12,
    cluster_tol: float = 1e-10,
    angle_tol: float = 1e-6,
    tol: float = 1e-8,
    name: str = "classical_limit",
) -> ExperimentReport:
    """Laplacian over identity on a union: decoupled spectrum."""
    domain = _as_domain(domain)
    grid = build_grid(domain, h)
    comps = [component_restriction(grid, j) for j in range(grid.n_components)]
    comp_res = [solve(g, LAPLACIAN, IDENTITY, k=1, tol=tol)[1] for g in comps]
    comp_lams = np.array([float(r.lambdas[0]) for r in comp_res])
    lmin = float(comp_lams.min())
    tied = [j for j, l in enumerate(comp_lams) if (l - lmin) / lmin <= cluster_tol]
    m = len(tied)
    k = min(m + 1, grid.n)
    _, res = solve(grid, LAPLACIAN, IDENTITY, k=k, tol=tol)
    lu = float(res.lambdas[0])
    dev = abs(lu - lmin) / lmin
    criteria = {"union_equals_min_component": dev <= rel_tol}
    evidence: list[tuple[str, float]] = [("lambda_union", lu), ("lambda_min_component", lmin),
                                         ("rel_deviation", dev), ("multiplicity", float(m))]
    for j, l in enumerate(comp_lams):
        evidence.append((f"lambda_component{j}", float(l)))
    if m >= 2:
        spread = float((res.lambdas[m - 1] - res.lambdas[0]) / res.lambdas[0])
        lifted = np.column_stack([grid.lift(comps[j], comp_res[j].first) for j in tied])
        angle = float(np.max(linalg.subspace_angles(res.vectors[:, :m], lifted)))
        criteria["cluster_spread_below_tol"] = spread <= cluster_tol
        criteria["cluster_spans_component_eigenvectors"] = angle < angle_tol
        evidence += [("cluster_spread", spread), ("max_subspace_angle", angle)]
    elif res.k >= 2:
        criteria["simple_when_components_differ"] = res.gap > cluster_tol
        evidence.append(("gap", res.gap))
    return ExperimentReport(
        name, _verdict(criteria), criteria, evidence,
        {"domain": domain.to_json(), "h": h},
        {"rel_tol": rel_tol, "cluster_tol": cluster_tol, "angle_tol": angle_tol, "solver_tol": tol},
        [table_row(h, res)],
    )


def smooth_probes(grid: Grid, coeffs: np.ndarray) -> np.ndarray:
    """Evaluate random sine series, one per component, at the grid nodes.

    ``coeffs`` has shape (n_probe, n_components, n_modes); each probe is an
    h-independent function so ratios are comparable across refinements.
    """
    n_probe, n_comp, n_modes = coeffs.shape
    U = np.zeros((n_probe, grid.n))
    modes = np.arange(1, n_modes + 1)
    for j, (a, b) in enumerate(grid.domain.intervals):
        mask = grid.component_mask(j)
        xi = (grid.x[mask] - a) / (b - a)
        basis = np.sin(np.pi * np.outer(modes, xi))
        U[:, mask] = coeffs[:, j, :] @ basis
    return U


def seminorm_lemma_checks(
    domain,
    h_list: Sequence[float],
    s_pairs: Sequence[tuple[float, float]],
    eps_list: Sequence[float],
    *,
    n_probe: int = 200,
    n_modes: int = 8,
    seed: int = 0,
    ratio_band: tuple[float, float] = (0.8, 1.25),
    tol_defect: float = 1e-2,
    tol: float = 1e-8,
    name: str = "seminorm_lemmas",
) -> ExperimentReport:
    """Order comparison of seminorms and their collapse onto L2 as s -> 0."""
    domain = _as_domain(domain)
    h_list = [float(h) for h in h_list]
    if not h_list or not s_pairs:
        raise DomainError("h_list and s_pairs must be nonempty")
    eps_list = _check_descending(eps_list, "eps_list")
    for s1, s2 in s_pairs:
        if not (0.0 <= s1 <= s2 <= 1.0):
            raise DomainError(f"pair ({s1}, {s2}) must satisfy 0 <= s1 <= s2 <= 1")

    rng = np.random.default_rng(seed)
    coeffs = rng.standard_normal((n_probe, len(domain), n_modes)) / np.arange(1, n_modes + 1) ** 2
    grids = [build_grid(domain, h) for h in h_list]
    probes = [smooth_probes(g, coeffs) for g in grids]

    criteria: dict[str, bool] = {}
    evidence: list[tuple[str, float]] = []
    for s1, s2 in s_pairs:
        cs = []
        for g, U in zip(grids, probes):
            A1, A2 = assemble_single(g, s1).entries, assemble_single(g, s2).entries
            q1 = np.einsum("pi,ij,pj->p", U, A1, U)
            q2 = np.einsum("pi,ij,pj->p", U, A2, U)
            c = float(np.sqrt(np.max(q1 / q2)))
            sup = float(np.sqrt(linalg.eigvalsh(A1, A2, subset_by_index=[g.n - 1, g.n - 1])[0]))
            cs.append(c)
            evidence += [(f"pair=({s1!r},{s2!r})/h={g.h!r}/C_probe", c),
                         (f"pair=({s1!r},{s2!r})/h={g.h!r}/C_sup", sup)]
        ratios = [b / a for a, b in zip(cs, cs[1:])]
        for (ga, gb), r in zip(zip(grids, grids[1:]), ratios):
            evidence.append((f"pair=({s1!r},{s2!r})/ratio_h={gb.h!r}", r))
        criteria[f"pair=({s1!r},{s2!r})/C_finite"] = all(np.isfinite(cs))
        criteria[f"pair=({s1!r},{s2!r})/ratio_in_band"] = all(ratio_band[0] <= r <= ratio_band[1] for r in ratios)

    g = min(grids, key=lambda gr: gr.h)
    _, ref = solve(g, LAPLACIAN, IDENTITY, k=1, tol=tol)
    u = ref.first
    norm_sq = g.h * float(u @ u)
    defects = []
    for eps in eps_list:
        d = abs(assemble_single(g, eps).quadratic(u) - norm_sq)
        defects.append(d)
        evidence.append((f"eps={eps!r}/l2_defect", d))
    evidence += [("u_l2_norm_sq", norm_sq), ("final_rel_defect", defects[-1] / norm_sq)]
    criteria["defect_decreasing_in_eps"] = _strictly_decreasing(defects)
    criteria["final_defect_below_tol"] = defects[-1] < tol_defect * norm_sq
    return ExperimentReport(
        name, _verdict(criteria), criteria, evidence,
        {"domain": domain.to_json(), "h_list": h_list, "s_pairs": [list(p) for p in s_pairs],
         "eps_list": eps_list, "n_probe": n_probe, "n_modes": n_modes, "seed": seed},
        {"ratio_band": list(ratio_band), "tol_defect": tol_defect, "solver_tol": tol},
    )


def boundary_growth(grid: Grid, v: np.ndarray, band: float = 0.1) -> dict:
    """Test ``v(x) >= c0 dist(x, boundary)`` near the boundary of one interval.

    The slope at each end comes from the two nodes nearest that end and
    ``c0`` is half the smaller slope.
    """
    x = grid.x
    slope_left = (v[1] - v[0]) / (x[1] - x[0])
    slope_right = (v[-2] - v[-1]) / (x[-1] - x[-2])
    c0 = 0.5 * min(slope_left, slope_right)
    dist = grid.distance_to_boundary()
    near = dist <= band * grid.domain.measure
    worst = float(np.min(v[near] - c0 * dist[near]))
    return {
        "slope_left": float(slope_left),
        "slope_right": float(slope_right),
        "c0": float(c0),
        "n_band_nodes": int(near.sum()),
        "min_excess": worst,
        "ok": bool(c0 > 0 and worst >= 0),
    }


def boundary_growth_check(
    domain,
    s_minus: float,
    h: float,
    *,
    band: float = 0.1,
    rel_threshold: float = DEFAULT_REL_THRESHOLD,
    tol: float = 1e-8,
    name: str = "boundary_growth",
) -> ExperimentReport:
    domain = _as_domain(domain)
    if len(domain) != 1:
        raise PreconditionError("boundary growth needs a connected domain (one interval)")
    if not (0.0 < s_minus < 1.0):
        raise PreconditionError("s_minus must lie in (0, 1)")
    grid = build_grid(domain, h)
    _, res = solve(grid, LAPLACIAN, [(s_minus, 1.0)], k=2, tol=tol)
    positive = sign_classification(res, rel_threshold) == POSITIVE
    bg = boundary_growth(grid, res.first, band)
    criteria = {"first_vector_positive": positive, "linear_growth_from_boundary": bg["ok"]}
    evidence = [(k, float(v)) for k, v in bg.items()] + [("lambda1", float(res.lambdas[0]))]
    return ExperimentReport(
        name, _verdict(criteria, inconclusive=not positive), criteria, evidence,
        {"domain": domain.to_json(), "s_minus": s_minus, "h": h},
        {"band": band, "rel_threshold": rel_threshold, "solver_tol": tol},
        [table_row(s_minus, res)],
    )


CHECKS = {
    "localization": localization_sweep,
    "simplicity_positivity": simplicity_positivity_check,
    "sign_change": sign_change_check,
    "union_inequality": union_inequality_check,
    "simplicity_scan": simplicity_scan,
    "classical_limit": classical_limit_oracle,
    "seminorm_lemmas": seminorm_lemma_checks,
    "boundary_growth": boundary_growth_check,
}
