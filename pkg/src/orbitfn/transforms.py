"""Discrete and continuous orbit-function transforms.

The discrete forward transform divides the epsilon-weighted scalar product
<f, phi> by the function's own grid norm <phi, phi>, both computed by direct
summation; the closed-form norm constants are only ever asserted in tests,
because they fail for weights on the affine wall of the dual simplex. With
|weights| = |grid points| and discrete orthogonality the synthesis at grid
points reproduces the samples exactly (up to roundoff).

All transforms are dense; the per-(algebra, densities, family) value matrix
is cached in memory and can be stored to disk as a JSON header line followed
by row-major little-endian complex doubles.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .algebras import CartanData, cartan, to_orthonormal
from .functions import evaluate, orbit_function
from .lattice import (
    GridPoint,
    WeightSet,
    a_m,
    check_family,
    grid_points,
    lambda_set,
    validate_spec,
)
from .weyl import even_orbit, orbit, point_reflect

__all__ = [
    "SampledField",
    "Spectrum",
    "TransformMatrix",
    "discrete_dot",
    "grid_values",
    "forward",
    "synthesize",
    "build_transform_matrix",
    "save_matrix",
    "load_matrix",
    "uniform_f_samples",
    "continuous_coeffs",
    "continuous_dot_mc",
    "error_integral",
    "shifted_lambda_set",
]


@dataclass
class SampledField:
    """Samples of a function on a family grid, in canonical grid order."""

    algebra: str
    spec: tuple[int, ...]
    family: str
    values: np.ndarray

    @classmethod
    def from_function(cls, algebra, spec, family, fn: Callable) -> "SampledField":
        """Sample a callable of (n, 3) omegacheck coordinates on the grid."""
        alg = cartan(algebra)
        spec = validate_spec(alg, spec)
        fam = check_family(family)
        grid = _grid(alg, spec, fam)
        pts = np.array([p.coords_float() for p in grid]).reshape(len(grid), 3)
        vals = np.asarray(fn(pts), dtype=complex).reshape(len(grid))
        return cls(alg.name, spec, fam, vals)


@dataclass
class Spectrum:
    """Expansion coefficients over an admissible weight set."""

    algebra: str
    spec: tuple[int, ...]
    family: str
    weights: tuple[tuple[int, int, int], ...]
    coeffs: np.ndarray
    norms: np.ndarray

    def __len__(self) -> int:
        return len(self.weights)


@dataclass
class TransformMatrix:
    """Precomputed forward-transform matrix B with b = B @ samples."""

    algebra: str
    spec: tuple[int, ...]
    family: str
    weights: tuple[tuple[int, int, int], ...]
    norms: np.ndarray
    eps: np.ndarray
    matrix: np.ndarray

    def apply(self, values: np.ndarray) -> Spectrum:
        values = np.asarray(values, dtype=complex)
        if values.shape != (self.matrix.shape[1],):
            raise ValueError(
                f"expected {self.matrix.shape[1]} samples, got {values.shape}"
            )
        return Spectrum(
            self.algebra, self.spec, self.family, self.weights,
            self.matrix @ values, self.norms,
        )


def discrete_dot(f: Sequence, g: Sequence, grid: Sequence[GridPoint]) -> complex:
    """Epsilon-weighted scalar product sum eps(x) f(x) conj(g(x)) on a grid."""
    f = np.asarray(f, dtype=complex)
    g = np.asarray(g, dtype=complex)
    if len(f) != len(grid) or len(g) != len(grid):
        raise ValueError(
            f"sample lengths {len(f)}, {len(g)} do not match grid size {len(grid)}"
        )
    eps = np.array([p.eps for p in grid], dtype=float)
    return complex(np.sum(eps * f * np.conj(g)))


# -- cached grid machinery -----------------------------------------------------

_GRID_CACHE: dict = {}
_VALUES_CACHE: dict = {}


def _grid(alg: CartanData, spec, fam) -> list[GridPoint]:
    key = (alg.name, spec, fam)
    if key not in _GRID_CACHE:
        _GRID_CACHE[key] = grid_points(alg, spec, fam)
    return _GRID_CACHE[key]


def grid_values(algebra, spec, family):
    """Values phi_lambda(x) on the family grid plus weights, eps and norms.

    Returns ``(phi, weight_set, grid, eps, norms)`` with ``phi`` of shape
    (len(weights), len(grid)); norms are the direct-summation grid norms.
    Cached per (algebra, densities, family).
    """
    alg = cartan(algebra)
    spec = validate_spec(alg, spec)
    fam = check_family(family)
    key = (alg.name, spec, fam)
    if key in _VALUES_CACHE:
        return _VALUES_CACHE[key]
    ws = lambda_set(alg, spec, fam)
    grid = _grid(alg, spec, fam)
    eps = np.array([p.eps for p in grid], dtype=float)
    pts = np.array([p.coords_float() for p in grid]).reshape(len(grid), 3)
    phi = np.empty((len(ws), len(grid)), dtype=complex)
    for r, t in enumerate(ws.weights):
        phi[r] = evaluate(orbit_function(alg, fam, t), pts)
    norms = np.real(np.abs(phi) ** 2 @ eps) if len(grid) else np.zeros(len(ws))
    ws.norms = norms
    _VALUES_CACHE[key] = (phi, ws, grid, eps, norms)
    return _VALUES_CACHE[key]


def forward(field: SampledField) -> Spectrum:
    """Discrete transform: b = <f, phi> / <phi, phi> per admissible weight."""
    phi, ws, grid, eps, norms = grid_values(field.algebra, field.spec, field.family)
    if len(ws) == 0:
        raise ValueError(
            f"empty weight set for family {field.family} at densities {field.spec}"
        )
    values = np.asarray(field.values, dtype=complex)
    if values.shape != (len(grid),):
        raise ValueError(f"expected {len(grid)} samples, got {values.shape}")
    coeffs = (np.conj(phi) * eps) @ values / norms
    return Spectrum(field.algebra, field.spec, field.family, ws.weights, coeffs, norms)


_CHUNK_ELEMS = 1 << 22


def synthesize(spectrum: Spectrum, x, ortho: bool = False):
    """Evaluate the expansion sum_lambda b_lambda phi_lambda at points.

    The continuous extension of a discrete transform: at grid points it
    reproduces the original samples, in between it interpolates smoothly.
    """
    alg = cartan(spectrum.algebra)
    pts = np.asarray(x, dtype=float)
    single = pts.ndim == 1
    pts = np.atleast_2d(pts)
    if ortho:
        from .algebras import from_orthonormal

        pts = from_orthonormal(alg, pts)
    rows = []
    weights = []
    for t, b in zip(spectrum.weights, spectrum.coeffs):
        f = orbit_function(alg, spectrum.family, t)
        rows.append(f.mu)
        weights.append(b * f.signs)
    if not rows:
        out = np.zeros(len(pts), dtype=complex)
        return out[0] if single else out
    rows = np.vstack(rows) @ alg.cartan_inv_f
    weights = np.concatenate(weights)
    out = np.empty(len(pts), dtype=complex)
    step = max(1, _CHUNK_ELEMS // max(1, len(weights)))
    for lo in range(0, len(pts), step):
        hi = min(lo + step, len(pts))
        out[lo:hi] = weights @ np.exp(2j * np.pi * rows @ pts[lo:hi].T)
    return out[0] if single else out


# -- precomputed matrix --------------------------------------------------------


def build_transform_matrix(algebra, spec, family) -> TransformMatrix:
    """Assemble B with rows eps(x) conj(phi_lambda(x)) / <phi_lambda, phi_lambda>."""
    phi, ws, grid, eps, norms = grid_values(algebra, spec, family)
    if len(ws) == 0:
        raise ValueError(f"empty weight set for family {family} at densities {spec}")
    B = np.conj(phi) * eps / norms[:, None]
    return TransformMatrix(
        canonical(algebra), ws.spec, ws.family, ws.weights, norms, eps, B
    )


def canonical(algebra) -> str:
    return cartan(algebra).name


def save_matrix(tm: TransformMatrix, path) -> None:
    """Write a matrix cache file: one JSON header line + raw complex doubles."""
    header = {
        "algebra": tm.algebra,
        "spec": list(tm.spec),
        "family": tm.family,
        "rows": tm.matrix.shape[0],
        "cols": tm.matrix.shape[1],
        "weights": [list(t) for t in tm.weights],
        "norms": tm.norms.tolist(),
        "eps": tm.eps.tolist(),
        "dtype": "<c16",
        "order": "C",
    }
    with open(path, "wb") as fh:
        fh.write(json.dumps(header).encode() + b"\n")
        fh.write(np.ascontiguousarray(tm.matrix, dtype="<c16").tobytes())


def load_matrix(path) -> TransformMatrix:
    with open(path, "rb") as fh:
        header = json.loads(fh.readline().decode())
        data = fh.read()
    shape = (header["rows"], header["cols"])
    matrix = np.frombuffer(data, dtype="<c16").reshape(shape).copy()
    return TransformMatrix(
        header["algebra"],
        tuple(header["spec"]),
        header["family"],
        tuple(tuple(t) for t in header["weights"]),
        np.array(header["norms"]),
        np.array(header["eps"]),
        matrix,
    )


# -- continuous (Monte Carlo) side ----------------------------------------------


def uniform_f_samples(algebra, n: int, rng: np.random.Generator, even_domain: bool = False) -> np.ndarray:
    """Uniform points of F (or F_e) in omegacheck coordinates.

    Per simple factor the region is the simplex {u >= 0, sum m_i u_i <= 1},
    a linear image of the standard simplex, so sorted-uniform spacings give
    the Euclidean-uniform law. For F_e half the points are reflected by r_1.
    """
    alg = cartan(algebra)
    out = np.empty((n, 3))
    for f in alg.factors:
        r = f.rank
        z = np.sort(rng.random((n, r)), axis=1)
        bary = np.diff(np.concatenate([np.zeros((n, 1)), z, np.ones((n, 1))], axis=1))
        for a, i in enumerate(f.indices):
            out[:, i] = bary[:, a] / alg.marks[i]
    if even_domain:
        flip = rng.random(n) < 0.5
        if np.any(flip):
            refl = np.array(
                [point_reflect(alg, 1, x) for x in out[flip]], dtype=float
            )
            out[flip] = refl
    return out


def volume(algebra, even_domain: bool = False) -> float:
    alg = cartan(algebra)
    return alg.vol_f * (2 if even_domain else 1)


def continuous_dot_mc(algebra, fa: Callable, fb: Callable, n: int, seed: int, even_domain: bool = False):
    """Monte Carlo estimate of the continuous scalar product over F (or F_e).

    Returns ``(estimate, standard_error)``; both scale with the region
    volume taken from the static tables.
    """
    alg = cartan(algebra)
    rng = np.random.default_rng(seed)
    pts = uniform_f_samples(alg, n, rng, even_domain)
    vals = np.asarray(fa(pts)) * np.conj(np.asarray(fb(pts)))
    vol = volume(alg, even_domain)
    est = vol * complex(np.mean(vals))
    se = vol * float(
        math.sqrt(np.var(np.real(vals)) + np.var(np.imag(vals)))
    ) / math.sqrt(n)
    return est, se


def continuous_coeffs(algebra, family, fn: Callable, weights, n: int = 10000, seed: int = 0):
    """Monte Carlo expansion coefficients c_lambda of a callable field.

    c = <f, phi> / (k |F|) with k the orbit size (C), the Weyl order (S) or
    the even-orbit size (E); the volume cancels against the uniform-sampling
    estimate of the integral. Returns (coeffs, standard_errors).
    """
    alg = cartan(algebra)
    fam = check_family(family)
    rng = np.random.default_rng(seed)
    pts = uniform_f_samples(alg, n, rng, even_domain=(fam == "E"))
    fvals = np.asarray(fn(pts), dtype=complex)
    coeffs = np.empty(len(weights), dtype=complex)
    errs = np.empty(len(weights))
    for r, t in enumerate(weights):
        f = orbit_function(alg, fam, t)
        if fam == "C":
            k = len(orbit(alg, t))
        elif fam == "S":
            k = alg.weyl_order
        else:
            k = len(even_orbit(alg, t))
        samples = fvals * np.conj(evaluate(f, pts)) / k
        coeffs[r] = np.mean(samples)
        errs[r] = math.sqrt(
            np.var(np.real(samples)) + np.var(np.imag(samples))
        ) / math.sqrt(n)
    return coeffs, errs


def error_integral(fn: Callable, spectrum: Spectrum, n: int = 10000, seed: int = 0):
    """Monte Carlo estimate of the interpolation error integral over F.

    Integrates |synthesis - fn| with the uniform sampler; returns
    ``(estimate, standard_error)``.
    """
    alg = cartan(spectrum.algebra)
    even = spectrum.family == "E"
    rng = np.random.default_rng(seed)
    pts = uniform_f_samples(alg, n, rng, even_domain=even)
    diff = np.abs(synthesize(spectrum, pts) - np.asarray(fn(pts), dtype=complex))
    vol = volume(alg, even)
    return vol * float(np.mean(diff)), vol * float(np.std(diff)) / math.sqrt(n)


# -- shifted (higher-harmonic) systems -------------------------------------------


def shifted_lambda_set(base: WeightSet, shift: Sequence[int], s: int = 1) -> WeightSet:
    """Shift every weight by s*shift, keeping the grid values of the system.

    Only supported on A1xA1xA1 with shift components that are multiples of
    the matching density. The shifted functions take the same values on the
    grid as the originals under a reflective (not translational) pairing,
    after normalizing each function by its orbit size (the normalization
    only matters for corner weights whose partner orbit collapses, e.g.
    first coordinate 2M pairing with 0). The pairing is verified by
    bijectively matching the two normalized value tables within 1e-10; a
    failure to match raises :class:`ValueError`.
    """
    alg = cartan(base.algebra)
    if alg.name != "A1xA1xA1":
        raise ValueError(f"shifted systems are only supported on A1xA1xA1, not {alg.name}")
    shift = tuple(int(v) for v in shift)
    if len(shift) != 3:
        raise ValueError("shift must have three components")
    for v, m in zip(shift, base.spec):
        if v % m:
            raise ValueError(f"shift component {v} is not a multiple of the density {m}")
    shifted = WeightSet(
        base.algebra,
        base.spec,
        base.family,
        tuple(tuple(t[i] + s * shift[i] for i in range(3)) for t in base.weights),
    )
    _verify_grid_agreement(alg, base, shifted)
    return shifted


def _verify_grid_agreement(alg, base: WeightSet, shifted: WeightSet, tol: float = 1e-10):
    grid = _grid(alg, base.spec, base.family)
    pts = np.array([p.coords_float() for p in grid]).reshape(len(grid), 3)
    fam = base.family

    def table(ws):
        rows = []
        for t in ws.weights:
            f = orbit_function(alg, fam, t)
            rows.append(evaluate(f, pts) / f.n_terms)
        return np.array(rows)

    tb, ts = table(base), table(shifted)
    scale = max(1.0, float(np.max(np.abs(tb))))
    used = set()
    for r, row in enumerate(ts):
        hit = None
        for k in range(len(tb)):
            if k in used:
                continue
            if np.max(np.abs(row - tb[k])) < tol * scale:
                hit = k
                break
        if hit is None:
            raise ValueError(
                f"shifted weight {shifted.weights[r]} has no grid-value partner"
            )
        used.add(hit)
