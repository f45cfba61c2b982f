"""Finitely-atomic signed measures on the order interval [0, 1].

A measure is stored as two lists of atoms ``(s, weight)``: the nonnegative
part carrying the elliptic orders and the nonnegative part that enters with
the opposite sign.  Continuous densities are turned into atoms with
Gauss-Legendre quadrature at load time.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .errors import DomainError, StructuralError

PLUS = "plus"
MINUS = "minus"


@dataclass(frozen=True, order=True)
class MeasureAtom:
    s: float
    weight: float

    def __post_init__(self):
        s, w = float(self.s), float(self.weight)
        if not (0.0 <= s <= 1.0):
            raise DomainError(f"atom order s={s!r} outside [0, 1]")
        if not np.isfinite(w) or w < 0.0:
            raise DomainError(f"atom weight {w!r} must be finite and nonnegative")
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "weight", w)


def _as_atom(a) -> MeasureAtom:
    if isinstance(a, MeasureAtom):
        return a
    s, w = a
    return MeasureAtom(s, w)


def canonical_atoms(atoms: Iterable) -> tuple[MeasureAtom, ...]:
    """Drop zero weights, merge bit-identical orders, sort by ascending s."""
    merged: dict[float, float] = {}
    for a in map(_as_atom, atoms):
        if a.weight == 0.0:
            continue
        merged[a.s] = merged.get(a.s, 0.0) + a.weight
    return tuple(MeasureAtom(s, merged[s]) for s in sorted(merged))


def total_mass(atoms: Iterable[MeasureAtom]) -> float:
    return float(sum(a.weight for a in atoms))


@dataclass(frozen=True)
class SignedMeasure:
    """``plus - minus`` with an optional structural threshold ``s_bar``.

    With ``s_bar`` set, construction enforces that ``plus`` has mass on
    ``[s_bar, 1]`` and that every ``minus`` atom sits strictly below
    ``s_bar``.  ``s_bar=None`` marks a one-sided building block (as returned
    by :func:`make_dirac`) that still has to go through :func:`combine`.
    """

    plus: tuple[MeasureAtom, ...] = ()
    minus: tuple[MeasureAtom, ...] = ()
    s_bar: float | None = None
    _validated: bool = field(default=False, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "plus", canonical_atoms(self.plus))
        object.__setattr__(self, "minus", canonical_atoms(self.minus))
        if self.s_bar is not None:
            s_bar = float(self.s_bar)
            object.__setattr__(self, "s_bar", s_bar)
            check_structural(self.plus, self.minus, s_bar)
            object.__setattr__(self, "_validated", True)

    @property
    def is_validated(self) -> bool:
        return self._validated

    @property
    def plus_mass(self) -> float:
        return total_mass(self.plus)

    @property
    def minus_mass(self) -> float:
        return total_mass(self.minus)

    def scaled(self, plus_factor: float = 1.0, minus_factor: float = 1.0) -> "SignedMeasure":
        return SignedMeasure(
            [(a.s, a.weight * plus_factor) for a in self.plus],
            [(a.s, a.weight * minus_factor) for a in self.minus],
            self.s_bar,
        )

    def to_json(self) -> dict:
        out = {
            "plus": [{"s": a.s, "w": a.weight} for a in self.plus],
            "minus": [{"s": a.s, "w": a.weight} for a in self.minus],
        }
        if self.s_bar is not None:
            out["s_bar"] = self.s_bar
        return out


def check_structural(plus: Sequence[MeasureAtom], minus: Sequence[MeasureAtom], s_bar: float) -> None:
    if not (0.0 < s_bar <= 1.0):
        raise StructuralError(f"s_bar={s_bar!r} must lie in (0, 1]")
    if not any(a.s >= s_bar for a in plus):
        raise StructuralError(
            f"plus part has no mass on [s_bar, 1] = [{s_bar}, 1]; "
            f"plus atoms: {[(a.s, a.weight) for a in plus]}"
        )
    for a in minus:
        # the minus part is integrated over the half-open range [0, s_bar)
        if a.s >= s_bar:
            raise StructuralError(
                f"minus atom (s={a.s}, w={a.weight}) lies at or above s_bar={s_bar}"
            )


def make_dirac(s: float, part: str) -> SignedMeasure:
    s = float(s)
    if not (0.0 <= s <= 1.0):
        raise DomainError(f"Dirac order s={s!r} outside [0, 1]")
    if part == PLUS:
        return SignedMeasure(plus=[(s, 1.0)])
    if part == MINUS:
        if s >= 1.0:
            raise DomainError("a minus atom at s=1 violates the structural condition for every s_bar")
        return SignedMeasure(minus=[(s, 1.0)])
    raise DomainError(f"part must be 'plus' or 'minus', got {part!r}")


def from_density(
    density: Callable[[np.ndarray], np.ndarray],
    support: tuple[float, float],
    n_quad: int,
    part: str,
) -> SignedMeasure:
    """Gauss-Legendre realization of ``density(s) ds`` on ``support``."""
    a, b = map(float, support)
    if not (0.0 <= a < b <= 1.0):
        raise DomainError(f"support {support!r} must satisfy 0 <= a < b <= 1")
    if int(n_quad) < 1:
        raise DomainError("n_quad must be >= 1")
    t, w = np.polynomial.legendre.leggauss(int(n_quad))
    nodes = 0.5 * (b - a) * t + 0.5 * (a + b)
    weights = 0.5 * (b - a) * w
    values = np.asarray(density(nodes), dtype=float) * np.ones_like(nodes)
    if np.any(values < 0) or not np.all(np.isfinite(values)):
        bad = nodes[np.argmax((values < 0) | ~np.isfinite(values))]
        raise DomainError(f"density is negative or non-finite at s={bad!r}")
    atoms = list(zip(nodes.tolist(), (values * weights).tolist()))
    if part == PLUS:
        return SignedMeasure(plus=atoms)
    if part == MINUS:
        return SignedMeasure(minus=atoms)
    raise DomainError(f"part must be 'plus' or 'minus', got {part!r}")


def combine(plus_part: SignedMeasure, minus_part: SignedMeasure, s_bar: float) -> SignedMeasure:
    if plus_part.minus:
        raise StructuralError("plus_part carries minus atoms")
    if minus_part.plus:
        raise StructuralError("minus_part carries plus atoms")
    return SignedMeasure(plus_part.plus, minus_part.minus, s_bar)


def union(*parts: SignedMeasure) -> SignedMeasure:
    """Sum of one-sided measures; the result is not yet validated."""
    plus = [a for p in parts for a in p.plus]
    minus = [a for p in parts for a in p.minus]
    return SignedMeasure(plus, minus)


DENSITIES: dict[str, Callable[[float], Callable[[np.ndarray], np.ndarray]]] = {
    "const": lambda scale: (lambda s: np.full_like(s, scale)),
    "linear": lambda scale: (lambda s: scale * s),
}


def _atoms_from_json(items, part: str, pointer: str) -> list[MeasureAtom]:
    if not isinstance(items, list):
        raise DomainError(f"{pointer}: expected a list")
    atoms: list[MeasureAtom] = []
    for i, item in enumerate(items):
        where = f"{pointer}/{i}"
        if not isinstance(item, Mapping):
            raise DomainError(f"{where}: expected an object")
        if "density" in item:
            name = item["density"]
            if name not in DENSITIES:
                raise DomainError(f"{where}/density: unknown density {name!r}")
            dens = DENSITIES[name](float(item.get("scale", 1.0)))
            m = from_density(dens, tuple(item["support"]), int(item["n_quad"]), part)
            atoms.extend(m.plus if part == PLUS else m.minus)
        else:
            try:
                atoms.append(MeasureAtom(item["s"], item["w"]))
            except KeyError as exc:
                raise DomainError(f"{where}: missing key {exc.args[0]!r}") from None
    return atoms


def measure_from_json(obj: Mapping) -> SignedMeasure:
    """Parse ``{"plus": [...], "minus": [...], "s_bar": ...}``."""
    plus = _atoms_from_json(obj.get("plus", []), PLUS, "/plus")
    minus = _atoms_from_json(obj.get("minus", []), MINUS, "/minus")
    if "s_bar" not in obj:
        raise DomainError("/s_bar: required (the threshold is problem data, never inferred)")
    return SignedMeasure(plus, minus, obj["s_bar"])
