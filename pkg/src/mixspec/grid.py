"""Unions of disjoint open intervals sampled on one global uniform lattice."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, ResolutionError

# lattice points within this fraction of h of an endpoint count as the endpoint
_SNAP = 1e-9


@dataclass(frozen=True)
class Domain:
    intervals: tuple[tuple[float, float], ...]

    def __post_init__(self):
        ivs = []
        for iv in self.intervals:
            a, b = (float(v) for v in iv)
            if not (np.isfinite(a) and np.isfinite(b)) or not a < b:
                raise DomainError(f"interval {iv!r} must satisfy a < b")
            ivs.append((a, b))
        if not ivs:
            raise DomainError("domain needs at least one interval")
        ivs.sort()
        for (a0, b0), (a1, b1) in zip(ivs, ivs[1:]):
            if not b0 < a1:
                raise DomainError(f"intervals ({a0}, {b0}) and ({a1}, {b1}) have intersecting closures")
        object.__setattr__(self, "intervals", tuple(ivs))

    @classmethod
    def of(cls, *intervals: Sequence[float]) -> "Domain":
        return cls(tuple(tuple(iv) for iv in intervals))

    def __len__(self) -> int:
        return len(self.intervals)

    @property
    def measure(self) -> float:
        return sum(b - a for a, b in self.intervals)

    def is_symmetric(self, tol: float = 1e-12) -> bool:
        mirrored = sorted((-b, -a) for a, b in self.intervals)
        return all(
            abs(a - c) <= tol and abs(b - d) <= tol
            for (a, b), (c, d) in zip(self.intervals, mirrored)
        )

    def union(self, other: "Domain") -> "Domain":
        return Domain(self.intervals + other.intervals)

    def to_json(self) -> list[list[float]]:
        return [[a, b] for a, b in self.intervals]


def _as_domain(domain) -> Domain:
    if isinstance(domain, Domain):
        return domain
    return Domain(tuple(tuple(iv) for iv in domain))


@dataclass(frozen=True)
class Grid:
    """Interior lattice points ``x = k*h`` of a :class:`Domain`.

    ``lattice`` holds the integers ``k`` in ascending order and ``component``
    the interval index of each node.  Exterior lattice points carry no
    unknown, which is how the homogeneous exterior condition is imposed.
    """

    domain: Domain
    h: float
    lattice: np.ndarray
    component: np.ndarray
    index: dict = field(repr=False, compare=False)

    @property
    def n(self) -> int:
        return len(self.lattice)

    @property
    def x(self) -> np.ndarray:
        return self.lattice * self.h

    @property
    def n_components(self) -> int:
        return len(self.domain)

    @property
    def nodes(self) -> list[tuple[float, int]]:
        return list(zip(self.x.tolist(), self.component.tolist()))

    def component_mask(self, j: int) -> np.ndarray:
        return self.component == j

    def distance_to_boundary(self) -> np.ndarray:
        a = np.array([iv[0] for iv in self.domain.intervals])[self.component]
        b = np.array([iv[1] for iv in self.domain.intervals])[self.component]
        x = self.x
        return np.minimum(x - a, b - x)

    def lift(self, sub: "Grid", v: np.ndarray) -> np.ndarray:
        """Zero-extend a vector living on a sub-grid sharing this lattice."""
        if sub.h != self.h:
            raise DomainError("grids use different lattice spacings")
        out = np.zeros(self.n)
        try:
            idx = [self.index[int(k)] for k in sub.lattice]
        except KeyError as exc:
            raise DomainError(f"lattice point {exc.args[0]} is not a node of this grid") from None
        out[idx] = v
        return out

    def reflection(self) -> np.ndarray:
        """Permutation realizing ``x -> -x``; only valid for symmetric domains."""
        try:
            return np.array([self.index[-int(k)] for k in self.lattice])
        except KeyError:
            raise DomainError("grid is not symmetric under x -> -x") from None


def _interior_lattice(a: float, b: float, h: float) -> range:
    lo = math.floor(a / h + _SNAP) + 1
    hi = math.ceil(b / h - _SNAP) - 1
    return range(lo, hi + 1)


def build_grid(domain: Domain | Iterable, h: float) -> Grid:
    domain = _as_domain(domain)
    h = float(h)
    if not (h > 0 and np.isfinite(h)):
        raise DomainError(f"lattice spacing h={h!r} must be positive")
    ks: list[int] = []
    comp: list[int] = []
    for j, (a, b) in enumerate(domain.intervals):
        if b - a < 4 * h * (1 - _SNAP):
            raise ResolutionError(f"interval ({a}, {b}) is shorter than 4h with h={h}")
        r = _interior_lattice(a, b, h)
        if ks and r.start <= ks[-1] + 1:
            raise ResolutionError(
                f"interval ({a}, {b}) is not separated from its left neighbour "
                f"by an exterior lattice point at h={h}"
            )
        ks.extend(r)
        comp.extend([j] * len(r))
    lattice = np.array(ks, dtype=np.int64)
    return Grid(
        domain=domain,
        h=h,
        lattice=lattice,
        component=np.array(comp, dtype=np.int64),
        index={int(k): i for i, k in enumerate(lattice)},
    )


def grid_from_json(obj: dict) -> Grid:
    """``{"intervals": [[a, b], ...], "h": ...}`` or with ``"n_per_unit"``."""
    if "h" in obj and "n_per_unit" in obj:
        raise DomainError("give either h or n_per_unit, not both")
    if "h" in obj:
        h = float(obj["h"])
    elif "n_per_unit" in obj:
        n = int(obj["n_per_unit"])
        if n < 1:
            raise DomainError("n_per_unit must be >= 1")
        h = 1.0 / n
    else:
        raise DomainError("grid needs h or n_per_unit")
    return build_grid(Domain(tuple(tuple(iv) for iv in obj["intervals"])), h)


def component_restriction(grid: Grid, j: int) -> Grid:
    if not (0 <= j < grid.n_components):
        raise IndexError(f"component {j} out of range for {grid.n_components} components")
    return build_grid(Domain((grid.domain.intervals[j],)), grid.h)
