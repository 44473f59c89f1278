"""Fundamental-region grids, torus multiplicities and admissible weight sets.

A grid F_M is the set of points sum_i (s_i/M_f) omegacheck_i with nonnegative
integer indices obeying the per-factor mark inequality sum s_i m_i <= M_f.
The S-family grid drops every per-factor boundary point; the E-family grid is
F_M together with the r_1-image of its interior (one representative per
even-affine-Weyl class, the canonical half-open domain).

Weight sets mirror the construction on the dual side through the dual marks,
with the same non-strict/strict split; their correctness is established by
the cardinality and discrete-orthogonality tests, not assumed.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from .algebras import CartanData, cartan, to_orthonormal
from .weyl import point_orbit, point_reflect, reflect

__all__ = [
    "FAMILIES",
    "FoldError",
    "GridPoint",
    "WeightSet",
    "validate_spec",
    "grid_points",
    "grid_count",
    "epsilon",
    "a_m",
    "lambda_set",
    "fold_to_fundamental",
    "in_fundamental",
    "affine_reflect",
]

FAMILIES = ("C", "S", "E")


class FoldError(RuntimeError):
    """Folding did not reach the fundamental region within the iteration cap."""


def check_family(family: str) -> str:
    fam = family.upper()
    if fam not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    return fam


def validate_spec(algebra, spec: Sequence[int]) -> tuple[int, ...]:
    """Normalize a grid density spec: one positive integer per simple factor."""
    alg = cartan(algebra)
    if isinstance(spec, int):
        spec = (spec,)
    spec = tuple(int(m) for m in spec)
    if len(spec) != len(alg.factors):
        raise ValueError(
            f"{alg.name} needs {len(alg.factors)} densities, got {len(spec)}"
        )
    if any(m < 1 for m in spec):
        raise ValueError(f"densities must be positive, got {spec}")
    return spec


@dataclass(frozen=True)
class GridPoint:
    """A grid point: integer indices over per-coordinate denominators.

    ``reflected`` marks the r_1-image of an interior point (E grids only);
    ``coords`` are the actual omegacheck coordinates as exact fractions and
    ``eps`` the torus multiplicity for the grid's family.
    """

    indices: tuple[int, int, int]
    denominators: tuple[int, int, int]
    reflected: bool
    coords: tuple[Fraction, Fraction, Fraction]
    eps: int

    def coords_float(self) -> np.ndarray:
        return np.array([float(c) for c in self.coords])


@dataclass
class WeightSet:
    """Weights labelling mutually orthogonal orbit functions on a grid."""

    algebra: str
    spec: tuple[int, ...]
    family: str
    weights: tuple[tuple[int, int, int], ...]
    norms: np.ndarray | None = None

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)


# -- enumeration ---------------------------------------------------------------


def _factor_index_tuples(marks: tuple[int, ...], bound: int, strict: bool, low: int):
    """Index tuples s >= low with sum s_i m_i <= bound (< bound if strict)."""
    out = []
    rank = len(marks)

    def rec(prefix, used):
        if len(prefix) == rank:
            if used < bound if strict else used <= bound:
                out.append(tuple(prefix))
            return
        m = marks[len(prefix)]
        s = low
        while used + s * m <= bound:
            rec(prefix + [s], used + s * m)
            s += 1

    rec([], 0)
    return out


def _base_indices(alg: CartanData, spec, strict: bool):
    low = 1 if strict else 0
    per_factor = [
        _factor_index_tuples(alg.factor_marks(f), m, strict, low)
        for f, m in zip(alg.factors, spec)
    ]
    combos = []
    for parts in itertools.product(*per_factor):
        s = [0, 0, 0]
        for f, part in zip(alg.factors, parts):
            for i, v in zip(f.indices, part):
                s[i] = v
        combos.append(tuple(s))
    combos.sort()
    return combos


def _denominators(alg: CartanData, spec) -> tuple[int, int, int]:
    den = [1, 1, 1]
    for f, m in zip(alg.factors, spec):
        for i in f.indices:
            den[i] = m
    return tuple(den)


def _coords(indices, den) -> tuple[Fraction, Fraction, Fraction]:
    return tuple(Fraction(s, d) for s, d in zip(indices, den))


def epsilon(algebra, coords: Sequence, family: str) -> int:
    """Torus multiplicity of a point: orbit size modulo the coroot lattice.

    The orbit (full Weyl group for C, even subgroup for E) is generated
    exactly over the rationals and reduced modulo Q-check, whose generators
    in omegacheck coordinates are the columns of the Cartan matrix.
    """
    alg = cartan(algebra)
    fam = check_family(family)
    if fam == "S":
        return alg.weyl_order
    pts = point_orbit(alg, tuple(Fraction(c) for c in coords), even=(fam == "E"))
    cinv = alg.cartan_inv
    residues = set()
    for p in pts.points:
        y = tuple(
            sum(cinv[i][j] * p.coords[j] for j in range(3)) % 1 for i in range(3)
        )
        residues.add(y)
    return len(residues)


def grid_points(algebra, spec, family: str = "C") -> list[GridPoint]:
    """Enumerate the family's grid in canonical (lexicographic) order.

    C: the full grid. S: per-factor interior points only. E: the full grid
    followed by the r_1-reflections of the interior points.
    """
    alg = cartan(algebra)
    spec = validate_spec(alg, spec)
    fam = check_family(family)
    den = _denominators(alg, spec)
    strict = fam == "S"
    base = _base_indices(alg, spec, strict)
    pts = []
    for s in base:
        c = _coords(s, den)
        pts.append(
            GridPoint(s, den, False, c, epsilon(alg, c, fam))
        )
    if fam == "E":
        for s in _base_indices(alg, spec, True):
            c = point_reflect(alg, 1, _coords(s, den))
            pts.append(GridPoint(s, den, True, tuple(c), epsilon(alg, c, "E")))
    return pts


def _simple_grid_count(name: str, M: int) -> int:
    if name == "A1":
        return M + 1
    if name == "A2":
        return (M + 1) * (M + 2) // 2
    if name == "C2":
        h = M // 2
        return (h + 1) * (M + 1 - h)
    if name == "G2":
        return sum((M - 3 * i) // 2 + 1 for i in range(M // 3 + 1))
    if name == "A3":
        total = sum((M + 1 - i) * (M + 2 - i) for i in range(M + 1))
        assert total % 2 == 0
        return total // 2
    if name in ("B3", "C3"):
        h = M // 2
        core = (h + 1) * (
            Fraction(h * ((M + 1) // 2) + M + 1) - Fraction(M + 2, 2) * h
        ) + sum(i * i for i in range(h + 1))
        assert core.denominator == 1
        return int(core)
    raise KeyError(name)


def grid_count(algebra, spec) -> int:
    """Closed-form |F_M| (C family), the product of per-factor counts."""
    alg = cartan(algebra)
    spec = validate_spec(alg, spec)
    n = 1
    for f, m in zip(alg.factors, spec):
        n *= _simple_grid_count(f.name, m)
    return n


def a_m(algebra, spec) -> int:
    """|A_M|: total torus multiplicity of the C grid, sum of epsilon."""
    alg = cartan(algebra)
    spec = validate_spec(alg, spec)
    key = (alg.name, spec)
    if key not in _AM_CACHE:
        _AM_CACHE[key] = sum(p.eps for p in grid_points(alg, spec, "C"))
    return _AM_CACHE[key]


_AM_CACHE: dict = {}


def lambda_set(algebra, spec, family: str = "C") -> WeightSet:
    """Admissible weights for the family's discrete transform on F_M.

    C: nonnegative weights with per-factor dual-mark level <= M. S: strictly
    dominant weights with strict level inequality (empty when M is too
    small). E: the C set followed by the r_1-reflected S set.
    """
    alg = cartan(algebra)
    spec = validate_spec(alg, spec)
    fam = check_family(family)

    def enumerate_weights(strict: bool):
        low = 1 if strict else 0
        per_factor = [
            _factor_index_tuples(alg.factor_dual_marks(f), m, strict, low)
            for f, m in zip(alg.factors, spec)
        ]
        combos = []
        for parts in itertools.product(*per_factor):
            t = [0, 0, 0]
            for f, part in zip(alg.factors, parts):
                for i, v in zip(f.indices, part):
                    t[i] = v
            combos.append(tuple(t))
        combos.sort()
        return combos

    if fam == "C":
        weights = enumerate_weights(False)
    elif fam == "S":
        weights = enumerate_weights(True)
    else:
        weights = enumerate_weights(False) + [
            reflect(alg, 1, t) for t in enumerate_weights(True)
        ]
    return WeightSet(alg.name, spec, fam, tuple(weights))


# -- fundamental region and folding --------------------------------------------


def in_fundamental(algebra, x: Sequence, tol: float = 0.0) -> bool:
    """Is x (omegacheck coordinates) inside F, within tolerance."""
    alg = cartan(algebra)
    if any(float(c) < -tol for c in x):
        return False
    return all(
        float(alg.highest_root_level(x, f)) <= 1 + tol for f in alg.factors
    )


def affine_reflect(algebra, x: Sequence, factor: int = 0):
    """Reflection in the affine wall <x, xi_f> = 1 of one simple factor."""
    alg = cartan(algebra)
    f = alg.factors[factor]
    level = alg.highest_root_level(x, f)
    xi = alg.xi_check_coords(f)
    return tuple(x[j] - (level - 1) * xi[j] for j in range(3))


def fold_to_fundamental(algebra, x: Sequence):
    """Fold a point into F by affine Weyl reflections.

    Returns ``(point, sign, length)`` where sign = (-1)**length accumulates
    the parity of the reflections applied. Raises :class:`FoldError` when
    the iteration cap 64*(1+ceil|x|) is exceeded (non-finite input).
    """
    alg = cartan(algebra)
    x = [float(c) for c in x]
    if not all(math.isfinite(c) for c in x):
        raise FoldError(f"non-finite input {x}")
    norm = float(np.linalg.norm(to_orthonormal(alg, x)))
    cap = 64 * (1 + math.ceil(norm))
    length = 0
    for _ in range(cap):
        for i in range(3):
            if x[i] < 0:
                x = list(point_reflect(alg, i + 1, x))
                length += 1
                break
        else:
            for k, f in enumerate(alg.factors):
                if alg.highest_root_level(x, f) > 1:
                    x = list(affine_reflect(alg, x, k))
                    length += 1
                    break
            else:
                return np.array(x), (-1) ** length, length
    raise FoldError(f"folding exceeded {cap} reflections")
