"""Weyl reflections and orbit generation with parity tracking.

Weights carry omega-basis coordinates and are reflected with rows of the
Cartan matrix; points carry omegacheck-basis coordinates and are reflected
with its columns. Orbits are produced by breadth-first closure with a
canonical (lexicographic) ordering so output is deterministic, and every
point records whether it was reached by even words, odd words, or both.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebras import CartanData, cartan

__all__ = [
    "ConsistencyError",
    "OrbitPoint",
    "Orbit",
    "reflect",
    "point_reflect",
    "orbit",
    "even_orbit",
    "point_orbit",
    "orbit_size",
]


class ConsistencyError(RuntimeError):
    """A strictly dominant seed produced a point with both parities."""


@dataclass(frozen=True)
class OrbitPoint:
    """One orbit member; parity is +1/-1, or 0 when both parities occur."""

    coords: tuple
    parity: int


@dataclass(frozen=True)
class Orbit:
    seed: tuple
    points: tuple[OrbitPoint, ...]
    even: bool

    def __len__(self) -> int:
        return len(self.points)

    def coordinate_set(self) -> set:
        return {p.coords for p in self.points}


def _check_index(i: int) -> int:
    if not 1 <= i <= 3:
        raise IndexError(f"reflection index {i} out of range 1..3")
    return i - 1


def reflect(algebra, i: int, lam: Sequence) -> tuple:
    """Simple reflection r_i acting on a weight: lam_j - lam_i * C[i][j]."""
    alg = cartan(algebra)
    k = _check_index(i)
    row = alg.cartan[k]
    return tuple(lam[j] - lam[k] * row[j] for j in range(3))


def point_reflect(algebra, i: int, x: Sequence) -> tuple:
    """Simple reflection r_i acting on a point: x_j - x_i * C[j][i]."""
    alg = cartan(algebra)
    k = _check_index(i)
    return tuple(x[j] - x[k] * alg.cartan[j][k] for j in range(3))


def _closure(rows, seed: tuple) -> dict:
    """BFS closure under three reflections; maps point -> parity bitmask.

    Bit 1 marks even-word reachability, bit 2 odd-word. Reflections fixing a
    point flip the word parity in place, which is how stabilized points end
    up with both bits set.
    """
    seed_state = (seed, 0)
    seen = {seed_state}
    masks = {seed: 1}
    stack = [seed_state]
    while stack:
        v, p = stack.pop()
        for k in range(3):
            if v[k] == 0:
                w = v  # r_k fixes v, only the word parity flips
            else:
                row = rows[k]
                w = tuple(v[j] - v[k] * row[j] for j in range(3))
            state = (w, 1 - p)
            if state not in seen:
                seen.add(state)
                stack.append(state)
                masks[w] = masks.get(w, 0) | (2 if p == 0 else 1)
    return masks


def _weight_rows(alg: CartanData):
    return alg.cartan


def _point_rows(alg: CartanData):
    return tuple(tuple(alg.cartan[j][i] for j in range(3)) for i in range(3))


_MASK_PARITY = {1: 1, 2: -1, 3: 0}


def orbit(algebra, lam: Sequence) -> Orbit:
    """Full Weyl orbit of a weight, each point tagged with its parity.

    Raises :class:`ConsistencyError` if a strictly dominant seed reaches any
    point with both parities (impossible unless the tables are wrong).
    """
    alg = cartan(algebra)
    seed = tuple(lam)
    masks = _closure(_weight_rows(alg), seed)
    if all(c > 0 for c in seed) and any(m == 3 for m in masks.values()):
        raise ConsistencyError(f"parity conflict in orbit of {seed} ({alg.name})")
    pts = tuple(
        OrbitPoint(c, _MASK_PARITY[masks[c]]) for c in sorted(masks, reverse=True)
    )
    return Orbit(seed=seed, points=pts, even=False)


def even_orbit(algebra, lam: Sequence) -> Orbit:
    """Orbit under the even subgroup: points reachable by even words."""
    alg = cartan(algebra)
    seed = tuple(lam)
    masks = _closure(_weight_rows(alg), seed)
    pts = tuple(
        OrbitPoint(c, _MASK_PARITY[m])
        for c, m in sorted(masks.items(), reverse=True)
        if m & 1
    )
    return Orbit(seed=seed, points=pts, even=True)


def point_orbit(algebra, x: Sequence, even: bool = False) -> Orbit:
    """Orbit of a point in omegacheck coordinates (used for torus counts)."""
    alg = cartan(algebra)
    seed = tuple(x)
    masks = _closure(_point_rows(alg), seed)
    pts = tuple(
        OrbitPoint(c, _MASK_PARITY[m])
        for c, m in sorted(masks.items(), reverse=True)
        if (m & 1) or not even
    )
    return Orbit(seed=seed, points=pts, even=even)


def orbit_size(algebra, lam: Sequence) -> int:
    """Closed-table orbit size from the zero pattern of the weight."""
    alg = cartan(algebra)
    pattern = tuple(bool(c) for c in lam)
    return alg.orbit_sizes[pattern]
