"""Evaluation of C-, S- and E-orbit functions and their spectral data.

A function is the sum of exponentials exp(2*pi*i <mu, x>) over the (full or
even) Weyl orbit of its weight, signed by parity for the S family. Points x
are given in omegacheck coordinates, so <mu, x> = mu . Cinv . x; the orbit is
built once per (algebra, family, weight) and reused across evaluation points.
Evaluation is pure and safe to call concurrently.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .algebras import CartanData, cartan, from_orthonormal
from .lattice import affine_reflect, check_family
from .weyl import even_orbit, orbit, point_reflect, reflect

__all__ = [
    "OrbitFunction",
    "orbit_function",
    "evaluate",
    "laplace_eigenvalue",
    "symmetry_check",
    "apply_word",
]


@dataclass(frozen=True)
class OrbitFunction:
    """One orbit function: family, weight, and its cached orbit data."""

    algebra: str
    family: str
    weight: tuple[int, int, int]
    mu: np.ndarray      # orbit points, shape (n, 3)
    signs: np.ndarray   # +-1 parities for S, ones otherwise

    def __post_init__(self):
        self.mu.flags.writeable = False
        self.signs.flags.writeable = False

    @property
    def n_terms(self) -> int:
        return len(self.signs)


def _dominant(lam) -> bool:
    return all(c >= 0 for c in lam)


def _strictly_dominant(lam) -> bool:
    return all(c > 0 for c in lam)


@functools.lru_cache(maxsize=65536)
def _cached(name: str, family: str, weight: tuple) -> OrbitFunction:
    alg = cartan(name)
    if family == "C":
        if not _dominant(weight):
            raise ValueError(f"C function needs a dominant weight, got {weight}")
        orb = orbit(alg, weight)
        signs = np.ones(len(orb))
    elif family == "S":
        if not _strictly_dominant(weight):
            raise ValueError(f"S function needs a strictly dominant weight, got {weight}")
        orb = orbit(alg, weight)
        signs = np.array([p.parity for p in orb.points], dtype=float)
        if np.any(signs == 0):
            raise ValueError(f"ill-defined parity for S weight {weight}")
    else:  # E
        if not (_dominant(weight) or _strictly_dominant(reflect(alg, 1, weight))):
            raise ValueError(
                f"E function needs a weight in P+ or r_1(P++), got {weight}"
            )
        orb = even_orbit(alg, weight)
        signs = np.ones(len(orb))
    mu = np.array([p.coords for p in orb.points], dtype=float)
    return OrbitFunction(alg.name, family, tuple(weight), mu, signs)


def orbit_function(algebra, family: str, weight: Sequence[int]) -> OrbitFunction:
    """Build (or fetch) the orbit function of a weight."""
    alg = cartan(algebra)
    return _cached(alg.name, check_family(family), tuple(int(c) for c in weight))


def evaluate(f: OrbitFunction, x, ortho: bool = False):
    """Evaluate at one point or an (n, 3) batch of points.

    Points are omegacheck coordinates unless ``ortho`` is set. Returns a
    complex scalar for a single point, a complex array for a batch.
    """
    alg = cartan(f.algebra)
    pts = np.asarray(x, dtype=float)
    single = pts.ndim == 1
    pts = np.atleast_2d(pts)
    if ortho:
        pts = from_orthonormal(alg, pts)
    phases = (f.mu @ alg.cartan_inv_f) @ pts.T
    vals = f.signs @ np.exp(2j * np.pi * phases)
    return vals[0] if single else vals


def laplace_eigenvalue(algebra, weight: Sequence) -> float:
    """Eigenvalue of the Laplace operator on the weight's orbit functions."""
    alg = cartan(algebra)
    lam = np.asarray(weight, dtype=float)
    return float(-4 * np.pi**2 * lam @ alg.gram_omega_f @ lam)


def apply_word(algebra, word: Sequence[int], x):
    """Apply a word over the generators to a point (omegacheck coordinates).

    Tokens 1..3 are the simple reflections; token 0 is the affine reflection
    of the first simple factor. Other factors' affine reflections are exposed
    as :func:`orbitfn.lattice.affine_reflect`.
    """
    alg = cartan(algebra)
    y = tuple(float(c) for c in x)
    for tok in word:
        if tok == 0:
            y = affine_reflect(alg, y, 0)
        else:
            y = point_reflect(alg, tok, y)
    return np.array(y)


def symmetry_check(f: OrbitFunction, x, word: Sequence[int]) -> float:
    """Residual |f(w x) - sigma f(x)| for a reflection word w.

    sigma is 1 for C, the word's parity for S, and 1 for E with even words
    (odd words are rejected for E, whose symmetry group is the even
    subgroup).
    """
    if f.family == "E" and len(word) % 2:
        raise ValueError("E functions are only invariant under even words")
    sigma = (-1) ** len(word) if f.family == "S" else 1
    wx = apply_word(f.algebra, word, x)
    return float(abs(evaluate(f, wx) - sigma * evaluate(f, x)))
