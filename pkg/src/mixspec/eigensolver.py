"""Generalized symmetric-definite eigenproblem ``A+ v = lambda A- v``.

The pencil pairs the superposition of the plus atoms with that of the minus
atoms.  Solves use the Cholesky reduction ``A- = L L^T`` followed by a dense
symmetric eigendecomposition of ``L^-1 A+ L^-T``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import linalg
from threadpoolctl import threadpool_limits

from .errors import DefinitenessError, DomainError, NumericalError, StructuralError
from .grid import Grid
from .measure import SignedMeasure
from .operator import OperatorMatrix, assemble_superposed

POSITIVE = "positive"
NEGATIVE = "negative"
SIGN_CHANGING = "sign_changing"
DEGENERATE = "degenerate"

SIMPLE = "simple"
NEAR_DEGENERATE = "near_degenerate"

DEFAULT_REL_THRESHOLD = 1e-6
DEFAULT_GAP_THRESHOLD = 1e-3


@dataclass(frozen=True)
class Pencil:
    a_plus: OperatorMatrix
    a_minus: OperatorMatrix
    grid: Grid
    measure: SignedMeasure

    @property
    def n(self) -> int:
        return self.grid.n


def build_pencil(grid: Grid, measure: SignedMeasure) -> Pencil:
    if not measure.is_validated:
        raise StructuralError("measure has no s_bar; combine() it before building a pencil")
    if not measure.minus:
        raise StructuralError("the minus part is empty; the pencil would be singular")
    a_plus = assemble_superposed(grid, measure.plus)
    a_minus = assemble_superposed(grid, measure.minus)
    try:
        linalg.cholesky(a_plus.entries, lower=True)
    except linalg.LinAlgError:
        raise NumericalError("A+ failed the definiteness probe; this indicates an assembly bug") from None
    return Pencil(a_plus, a_minus, grid, measure)


def canonical_sign(v: np.ndarray) -> np.ndarray:
    """Flip so the largest-magnitude entry is positive (first index wins ties)."""
    i = int(np.argmax(np.abs(v)))
    return -v if v[i] < 0 else v


@dataclass(frozen=True)
class EigenResult:
    lambdas: np.ndarray
    vectors: np.ndarray  # columns, normalized so h v^T A- v = 1
    residuals: np.ndarray
    grid: Grid

    @property
    def k(self) -> int:
        return len(self.lambdas)

    @property
    def gap(self) -> float | None:
        if self.k < 2:
            return None
        return float((self.lambdas[1] - self.lambdas[0]) / self.lambdas[0])

    @property
    def first(self) -> np.ndarray:
        return self.vectors[:, 0]

    @property
    def sign_profile(self) -> list[tuple[float, float]]:
        v = self.first
        return [
            (float(v[m].min()), float(v[m].max()))
            for m in (self.grid.component_mask(j) for j in range(self.grid.n_components))
        ]

    def to_json(self) -> dict:
        return {
            "lambdas": self.lambdas.tolist(),
            "gap": self.gap,
            "residuals": self.residuals.tolist(),
            "sign_profile": [list(p) for p in self.sign_profile],
        }


def decoupled_blocks(pencil: Pencil) -> list[np.ndarray]:
    """Node index sets on which both matrices are exactly block diagonal.

    Grid components are merged whenever either matrix couples them with a
    nonzero entry; for the Laplacian/identity pencil every component is its
    own block.
    """
    grid = pencil.grid
    masks = [grid.component_mask(j) for j in range(grid.n_components)]
    parent = list(range(len(masks)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            for A in (pencil.a_plus.entries, pencil.a_minus.entries):
                if np.any(A[np.ix_(masks[i], masks[j])]):
                    parent[find(j)] = find(i)
                    break
    groups: dict[int, np.ndarray] = {}
    for i, m in enumerate(masks):
        r = find(i)
        groups[r] = m if r not in groups else groups[r] | m
    return [np.flatnonzero(groups[r]) for r in sorted(groups)]


def _solve_dense(Ap: np.ndarray, Am: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    try:
        L = linalg.cholesky(Am, lower=True)
    except linalg.LinAlgError:
        raise DefinitenessError("Cholesky factorization of A- broke down") from None
    X = linalg.solve_triangular(L, Ap, lower=True)
    C = linalg.solve_triangular(L, X.T, lower=True)
    C = 0.5 * (C + C.T)
    # full spectrum: the values must not depend on how many pairs are requested
    lam, Y = linalg.eigh(C)
    return lam, linalg.solve_triangular(L.T, Y, lower=False)


def smallest_eigenpairs(pencil: Pencil, k: int = 1, tol: float = 1e-8) -> EigenResult:
    n = pencil.n
    if not (1 <= k <= n):
        raise DomainError(f"k={k} must lie in [1, {n}]")
    if tol <= 0:
        raise DomainError("tol must be positive")
    Ap, Am = pencil.a_plus.entries, pencil.a_minus.entries
    lams, vecs = [], []
    with threadpool_limits(limits=1):
        for idx in decoupled_blocks(pencil):
            lam_b, V_b = _solve_dense(Ap[np.ix_(idx, idx)], Am[np.ix_(idx, idx)])
            m = min(k, len(idx))
            V = np.zeros((n, m))
            V[idx] = V_b[:, :m]
            lams.append(lam_b[:m])
            vecs.append(V)
    lam = np.concatenate(lams)
    V = np.hstack(vecs)
    # stable sort: exact ties keep block (left-to-right) order
    order = np.argsort(lam, kind="stable")[:k]
    lam, V = lam[order], V[:, order] / np.sqrt(pencil.grid.h)
    for j in range(k):
        V[:, j] = canonical_sign(V[:, j])
    AV = Ap @ V
    res = np.linalg.norm(AV - (Am @ V) * lam, axis=0) / np.linalg.norm(AV, axis=0)
    if lam[0] <= 0:
        raise NumericalError(f"first eigenvalue {lam[0]!r} is not positive")
    if np.any(res > tol):
        raise NumericalError(f"residuals {res.tolist()} exceed tol={tol}")
    return EigenResult(lam, V, res, pencil.grid)


def rayleigh_quotient(pencil: Pencil, u) -> float:
    u = np.asarray(u, dtype=float)
    if not np.any(u):
        raise DomainError("Rayleigh quotient of the zero vector")
    return float((u @ pencil.a_plus.entries @ u) / (u @ pencil.a_minus.entries @ u))


def classify_sign(v, rel_threshold: float = DEFAULT_REL_THRESHOLD) -> str:
    v = np.asarray(v, dtype=float)
    if not (0 < rel_threshold < 1):
        raise DomainError("rel_threshold must lie in (0, 1)")
    scale = float(np.max(np.abs(v))) if v.size else 0.0
    if scale == 0.0:
        return DEGENERATE
    t = rel_threshold * scale
    m, M = float(v.min()), float(v.max())
    if m < -t and M > t:
        return SIGN_CHANGING
    if m > -t and M > 0:
        return POSITIVE
    if M < t and m < 0:
        return NEGATIVE
    return DEGENERATE


def sign_classification(
    result: EigenResult,
    rel_threshold: float = DEFAULT_REL_THRESHOLD,
    cluster_threshold: float | None = DEFAULT_GAP_THRESHOLD,
) -> str:
    """Sign pattern of the first eigenvector.

    When the result holds a second eigenvalue within ``cluster_threshold``
    (relative) of the first, the computed vector is an arbitrary member of
    a cluster subspace and the verdict is ``degenerate``.
    """
    if cluster_threshold is not None and result.k >= 2 and result.gap <= cluster_threshold:
        return DEGENERATE
    return classify_sign(result.first, rel_threshold)


def simplicity_diagnostic(result: EigenResult, gap_threshold: float = DEFAULT_GAP_THRESHOLD) -> str:
    if result.k < 2:
        raise DomainError("simplicity needs at least two eigenvalues")
    return SIMPLE if result.gap > gap_threshold else NEAR_DEGENERATE


def gap_of(lambdas) -> float:
    lambdas = np.asarray(lambdas, dtype=float)
    if lambdas.size < 2:
        raise DomainError("gap needs at least two eigenvalues")
    return float((lambdas[1] - lambdas[0]) / lambdas[0])
