"""Discrete fractional Laplacians on a :class:`~mixspec.grid.Grid`.

The operator of order ``s`` is the centered fractional difference

    (A_s u)_i = h^(-2s) * sum_j g_{|k_i - k_j|} u_j,

restricted to interior lattice points.  Its bi-infinite symbol is
``h^(-2s) (4 sin^2(pi xi h))^s``, which reduces to the identity at ``s=0``
and to the three-point Laplacian at ``s=1``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np
from scipy.special import gamma

from .errors import DomainError, ShapeError
from .grid import Grid
from .measure import MeasureAtom, SignedMeasure, canonical_atoms


def cns_constant(N: int, s: float) -> float:
    """Normalizing constant of the singular-integral fractional Laplacian."""
    if N < 1:
        raise DomainError("dimension N must be >= 1")
    if not (0.0 < s < 1.0):
        raise DomainError(f"s={s!r} must lie in (0, 1); the endpoints use dedicated stencils")
    return float(
        2.0 ** (2 * s - 1) * gamma((N + 2 * s) / 2)
        / (np.pi ** (N / 2) * gamma(2 - s)) * s * (1 - s)
    )


def stencil_weights(s: float, K: int) -> np.ndarray:
    """Weights ``g_0..g_K`` of the order-``s`` centered fractional difference.

    ``g_k = (-1)^k Gamma(2s+1) / (Gamma(s-k+1) Gamma(s+k+1))``, evaluated by
    the ratio recurrence ``g_{k+1} = g_k (k-s)/(k+s+1)`` which never touches
    a Gamma pole and gives exact zeros for integer ``s``.
    """
    s = float(s)
    if not (0.0 <= s <= 1.0):
        raise DomainError(f"s={s!r} outside [0, 1]")
    if K < 1:
        raise DomainError("K must be >= 1")
    k = np.arange(K, dtype=float)
    ratios = (k - s) / (k + s + 1)
    g = np.empty(K + 1)
    g[0] = gamma(2 * s + 1) / gamma(s + 1) ** 2
    g[1:] = g[0] * np.cumprod(ratios)
    return g


@dataclass(frozen=True)
class OperatorMatrix:
    entries: np.ndarray
    h: float
    kind: str = "single-s"
    atoms: tuple[MeasureAtom, ...] = field(default=())

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def quadratic(self, u: np.ndarray, v: np.ndarray | None = None) -> float:
        """``h * u^T A v``: the discrete bilinear form."""
        v = u if v is None else v
        return float(self.h * (u @ (self.entries @ v)))

    def save_dense(self, path: str | Path) -> None:
        np.savetxt(path, self.entries, fmt="%.17g", delimiter=" ")


def load_dense(path: str | Path) -> np.ndarray:
    return np.atleast_2d(np.loadtxt(path, delimiter=" "))


def _offsets(grid: Grid) -> np.ndarray:
    k = grid.lattice
    return np.abs(k[:, None] - k[None, :])


def assemble_single(grid: Grid, s: float) -> OperatorMatrix:
    d = _offsets(grid)
    g = stencil_weights(s, max(int(d.max()), 1))
    A = grid.h ** (-2 * float(s)) * g[d]
    return OperatorMatrix(A, grid.h, "single-s", (MeasureAtom(s, 1.0),))


def assemble_superposed(grid: Grid, atoms: Iterable) -> OperatorMatrix:
    atoms = canonical_atoms(atoms)
    if not atoms:
        raise DomainError("cannot superpose an empty atom list")
    d = _offsets(grid)
    K = max(int(d.max()), 1)
    A = np.zeros(d.shape)
    # ascending-s accumulation keeps the sum bitwise reproducible
    for a in atoms:
        A += a.weight * (grid.h ** (-2 * a.s) * stencil_weights(a.s, K)[d])
    return OperatorMatrix(A, grid.h, "superposed", atoms)


def _check_vector(grid: Grid, u) -> np.ndarray:
    u = np.asarray(u, dtype=float)
    if u.shape != (grid.n,):
        raise ShapeError(f"vector of shape {u.shape} does not match {grid.n} interior nodes")
    return u


def seminorm_sq(grid: Grid, u, s: float) -> float:
    """Discrete ``[u]_s^2 := h u^T A_s u``."""
    u = _check_vector(grid, u)
    return assemble_single(grid, s).quadratic(u)


def inner_product(grid: Grid, u, v, s: float) -> float:
    u, v = _check_vector(grid, u), _check_vector(grid, v)
    return assemble_single(grid, s).quadratic(u, v)


def seminorm_table(grid: Grid, u, s_values: Sequence[float]) -> dict[float, float]:
    u = _check_vector(grid, u)
    return {float(s): seminorm_sq(grid, u, s) for s in s_values}


def xplus_norm_sq(grid: Grid, u, measure: SignedMeasure) -> float:
    u = _check_vector(grid, u)
    return sum(a.weight * seminorm_sq(grid, u, a.s) for a in measure.plus)


def fourier_symbol(s: float, h: float, xi: float) -> float:
    if not (0.0 <= s <= 1.0) or h <= 0:
        raise DomainError("need 0 <= s <= 1 and h > 0")
    return float(h ** (-2 * s) * (4.0 * np.sin(np.pi * xi * h) ** 2) ** s)


def brute_force_apply(grid: Grid, u, s: float, quad_points: int = 64) -> np.ndarray:
    """Independent evaluation of the singular integral at every node.

    ``u`` is extended by its piecewise-linear interpolant over the lattice
    (zero at exterior lattice points).  The offset range is split into

    * ``(0, h]``: quadratic Taylor model, ``2u(x)-u(x+y)-u(x-y) ~ -u'' y^2``,
      with the three-point second difference for ``u''``;
    * ``[h, R]``: Gauss-Legendre with ``quad_points`` nodes on every lattice
      cell, so interpolant kinks fall on panel ends;
    * ``[R, inf)``: only the ``2u(x)`` term survives and is integrated in
      closed form (folded into the analytic ``[h, inf)`` integral below).
    """
    s = float(s)
    if not (0.0 < s < 1.0):
        raise DomainError("the singular-integral oracle needs s in (0, 1)")
    if quad_points < 64:
        raise DomainError("quad_points must be >= 64")
    u = _check_vector(grid, u)
    c = cns_constant(1, s)
    h = grid.h
    kmin, kmax = int(grid.lattice.min()) - 1, int(grid.lattice.max()) + 1
    vals = np.zeros(kmax - kmin + 1)
    vals[grid.lattice - kmin] = u
    xl = np.arange(kmin, kmax + 1) * h

    t, w = np.polynomial.legendre.leggauss(quad_points)
    t = 0.5 * (t + 1.0) * h
    w = 0.5 * w * h

    out = np.empty(grid.n)
    for i, (k, u0) in enumerate(zip(grid.lattice.tolist(), u.tolist())):
        upp = (vals[k + 1 - kmin] - 2.0 * u0 + vals[k - 1 - kmin]) / h**2
        near = -upp * h ** (2 - 2 * s) / (2 - 2 * s)
        # beyond R = M h both shifted points sit outside the support
        M = max(k - kmin, kmax - k)
        y = (np.arange(1, M)[:, None] * h + t[None, :]).ravel()
        wy = np.tile(w, M - 1)
        x = k * h
        shifted = (np.interp(x + y, xl, vals, left=0.0, right=0.0)
                   + np.interp(x - y, xl, vals, left=0.0, right=0.0))
        far = 2.0 * u0 * h ** (-2 * s) / (2 * s) - np.sum(wy * shifted * y ** (-1 - 2 * s))
        # the integrand is even in y: integrate over y > 0 and double
        out[i] = 2.0 * c * (near + far)
    return out
