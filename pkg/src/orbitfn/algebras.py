"""Static root-system data for the seven rank-3 compact semisimple Lie algebras.

Every table is assembled from per-simple-factor blocks (A1, A2, C2, G2 for the
product cases; A3, B3, C3 for the simple ones) and stored exactly: Cartan
matrices and their inverses, squared root lengths, marks/comarks/dual marks as
integers or `fractions.Fraction`. Floating point enters only through the
orthonormal-basis embeddings and the fundamental-region volume.

Conventions (used consistently across the package):

* weights live in the omega basis, points in the omega-check basis;
* row i of an embedding matrix is basis vector i in orthonormal coordinates;
* ``alpha_i = sum_j C[i][j] omega_j`` and ``alphacheck_i = sum_j C[j][i]
  omegacheck_j``, so the weight action of a reflection uses rows of C and the
  point action uses columns;
* long roots have squared length 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "ALGEBRAS",
    "BASES",
    "AlgebraKeyError",
    "SimpleFactor",
    "CartanData",
    "cartan",
    "canonical_name",
    "dual_marks",
    "scalar_product",
    "to_orthonormal",
    "from_orthonormal",
    "tables_as_dict",
]

ALGEBRAS = ("A1xA1xA1", "A2xA1", "C2xA1", "G2xA1", "A3", "B3", "C3")

BASES = ("alpha", "omega", "alphacheck", "omegacheck", "ortho")

_SQ2 = math.sqrt(2.0)
_SQ3 = math.sqrt(3.0)
_SQ6 = math.sqrt(6.0)


class AlgebraKeyError(KeyError):
    """Raised for names outside the seven supported rank-3 algebras."""


def canonical_name(algebra) -> str:
    """Normalize an algebra identifier ('a2xa1', 'A2×A1', CartanData, ...)."""
    if isinstance(algebra, CartanData):
        return algebra.name
    key = str(algebra).replace("×", "x").replace(" ", "").replace("*", "x").lower()
    for name in ALGEBRAS:
        if key == name.lower():
            return name
    raise AlgebraKeyError(f"unknown algebra {algebra!r}; expected one of {ALGEBRAS}")


@dataclass(frozen=True)
class SimpleFactor:
    """One simple constituent and the coordinate slots it occupies."""

    name: str
    indices: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.indices)


@dataclass(frozen=True)
class CartanData:
    """Full static table for one rank-3 algebra.

    Rational fields are exact; the `*_ortho` matrices and `vol_f` are floats.
    Instances are immutable (arrays are set read-only) and safe to share
    between threads.
    """

    name: str
    factors: tuple[SimpleFactor, ...]
    cartan: tuple[tuple[int, ...], ...]
    cartan_inv: tuple[tuple[Fraction, ...], ...]
    root_len2: tuple[Fraction, Fraction, Fraction]
    marks: tuple[int, int, int]
    comarks: tuple[int, int, int]
    dual_marks: tuple[int, int, int]
    weyl_order: int
    orbit_sizes: dict
    alpha_ortho: np.ndarray
    omega_ortho: np.ndarray
    omegacheck_ortho: np.ndarray
    vol_f: float = field(init=False, default=0.0)
    cartan_f: np.ndarray = field(init=False, default=None)
    cartan_inv_f: np.ndarray = field(init=False, default=None)
    gram_omega_f: np.ndarray = field(init=False, default=None)
    ortho_to_omegacheck: np.ndarray = field(init=False, default=None)

    def __post_init__(self):
        for arr in (self.alpha_ortho, self.omega_ortho, self.omegacheck_ortho):
            arr.flags.writeable = False
        set_ = object.__setattr__
        set_(self, "cartan_f", _readonly(np.array(self.cartan, dtype=float)))
        set_(self, "cartan_inv_f", _readonly(np.array(self.cartan_inv, dtype=float)))
        set_(self, "gram_omega_f", _readonly(np.array(self.gram_omega, dtype=float)))
        set_(self, "ortho_to_omegacheck", _readonly(np.linalg.inv(self.omegacheck_ortho)))
        set_(self, "vol_f", _volume(self))

    # -- exact derived tables ------------------------------------------------

    @property
    def gram_omega(self) -> tuple[tuple[Fraction, ...], ...]:
        """Gram matrix of the omega basis: (len2_j/2) * Cinv_ij, exact."""
        return tuple(
            tuple(self.root_len2[j] / 2 * self.cartan_inv[i][j] for j in range(3))
            for i in range(3)
        )

    @property
    def gram_alpha(self) -> tuple[tuple[Fraction, ...], ...]:
        """Gram matrix of the alpha basis: (len2_j/2) * C_ij, exact."""
        return tuple(
            tuple(self.root_len2[j] / 2 * self.cartan[i][j] for j in range(3))
            for i in range(3)
        )

    @property
    def pairing_omega_omegacheck(self) -> tuple[tuple[Fraction, ...], ...]:
        """<omega_i, omegacheck_j> = Cinv_ij; pairs weights with points."""
        return self.cartan_inv

    def factor_of(self, coord: int) -> SimpleFactor:
        for f in self.factors:
            if coord in f.indices:
                return f
        raise IndexError(coord)

    def factor_marks(self, f: SimpleFactor) -> tuple[int, ...]:
        return tuple(self.marks[i] for i in f.indices)

    def factor_comarks(self, f: SimpleFactor) -> tuple[int, ...]:
        return tuple(self.comarks[i] for i in f.indices)

    def factor_dual_marks(self, f: SimpleFactor) -> tuple[int, ...]:
        return tuple(self.dual_marks[i] for i in f.indices)

    def highest_root_level(self, x: Sequence, f: SimpleFactor):
        """<x, xi_f> for x in omegacheck coordinates: sum of m_i x_i over f."""
        return sum(self.marks[i] * x[i] for i in f.indices)

    def dual_level(self, t: Sequence, f: SimpleFactor):
        """<t, highest-coroot_f> for a weight t: sum of dual marks times t_i."""
        return sum(self.dual_marks[i] * t[i] for i in f.indices)

    def xi_check_coords(self, f: SimpleFactor) -> tuple[int, ...]:
        """Highest coroot of factor f in omegacheck coordinates (= C @ q_f)."""
        q = [self.comarks[i] if i in f.indices else 0 for i in range(3)]
        return tuple(sum(self.cartan[j][i] * q[i] for i in range(3)) for j in range(3))

    def fundamental_vertices(self) -> list[np.ndarray]:
        """Vertices of F in orthonormal coordinates (product over factors)."""
        per_factor = []
        for f in self.factors:
            verts = [np.zeros(3)]
            for i in f.indices:
                verts.append(self.omegacheck_ortho[i] / self.marks[i])
            per_factor.append(verts)
        out = [np.zeros(3)]
        acc = per_factor[0]
        for nxt in per_factor[1:]:
            acc = [u + v for u in acc for v in nxt]
        return acc

    def __hash__(self):
        return hash(self.name)

    def __eq__(self, other):
        return isinstance(other, CartanData) and other.name == self.name


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


def _volume(alg: CartanData) -> float:
    """Euclidean volume of F: product of per-factor simplex volumes."""
    vol = 1.0
    for f in alg.factors:
        edges = np.array([alg.omegacheck_ortho[i] / alg.marks[i] for i in f.indices])
        gram = edges @ edges.T
        vol *= math.sqrt(abs(np.linalg.det(gram))) / math.factorial(f.rank)
    return vol


# -- per-factor blocks --------------------------------------------------------

F = Fraction

_FACTOR_TABLES = {
    "A1": dict(
        cartan=[[2]],
        inv=[[F(1, 2)]],
        len2=[F(2)],
        marks=(1,),
        comarks=(1,),
        dual_marks=(1,),
        weyl_order=2,
    ),
    "A2": dict(
        cartan=[[2, -1], [-1, 2]],
        inv=[[F(2, 3), F(1, 3)], [F(1, 3), F(2, 3)]],
        len2=[F(2), F(2)],
        marks=(1, 1),
        comarks=(1, 1),
        dual_marks=(1, 1),
        weyl_order=6,
    ),
    "C2": dict(
        cartan=[[2, -1], [-2, 2]],
        inv=[[F(1), F(1, 2)], [F(1), F(1)]],
        len2=[F(1), F(2)],
        marks=(2, 1),
        comarks=(1, 1),
        dual_marks=(1, 2),
        weyl_order=8,
    ),
    "G2": dict(
        cartan=[[2, -3], [-1, 2]],
        inv=[[F(2), F(3)], [F(1), F(2)]],
        len2=[F(2), F(2, 3)],
        marks=(2, 3),
        comarks=(2, 1),
        dual_marks=(3, 2),
        weyl_order=12,
    ),
    "A3": dict(
        cartan=[[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
        inv=[
            [F(3, 4), F(1, 2), F(1, 4)],
            [F(1, 2), F(1), F(1, 2)],
            [F(1, 4), F(1, 2), F(3, 4)],
        ],
        len2=[F(2), F(2), F(2)],
        marks=(1, 1, 1),
        comarks=(1, 1, 1),
        dual_marks=(1, 1, 1),
        weyl_order=24,
    ),
    "B3": dict(
        cartan=[[2, -1, 0], [-1, 2, -2], [0, -1, 2]],
        inv=[
            [F(1), F(1), F(1)],
            [F(1), F(2), F(2)],
            [F(1, 2), F(1), F(3, 2)],
        ],
        len2=[F(2), F(2), F(1)],
        marks=(1, 2, 2),
        comarks=(1, 2, 1),
        dual_marks=(2, 2, 1),
        weyl_order=48,
    ),
    "C3": dict(
        cartan=[[2, -1, 0], [-1, 2, -1], [0, -2, 2]],
        inv=[
            [F(1), F(1), F(1, 2)],
            [F(1), F(2), F(1)],
            [F(1), F(2), F(3, 2)],
        ],
        len2=[F(1), F(1), F(2)],
        marks=(2, 2, 1),
        comarks=(1, 1, 1),
        dual_marks=(1, 2, 2),
        weyl_order=48,
    ),
}

# Orthonormal-basis embeddings, one 3x3 table per algebra; row i = basis
# vector i. Product algebras embed each factor in mutually orthogonal
# subspaces (the A2 plane of A2xA1 is x+y+z = const, tilted in all three
# coordinates).

_EMBEDDINGS = {
    "A1xA1xA1": dict(
        alpha=[[_SQ2, 0, 0], [0, _SQ2, 0], [0, 0, _SQ2]],
        omega=[[1 / _SQ2, 0, 0], [0, 1 / _SQ2, 0], [0, 0, 1 / _SQ2]],
        omegacheck=[[1 / _SQ2, 0, 0], [0, 1 / _SQ2, 0], [0, 0, 1 / _SQ2]],
    ),
    "A2xA1": dict(
        alpha=[
            [1, -1, 0],
            [0, 1, -1],
            [_SQ2 / _SQ3, _SQ2 / _SQ3, _SQ2 / _SQ3],
        ],
        omega=[
            [2 / 3, -1 / 3, -1 / 3],
            [1 / 3, 1 / 3, -2 / 3],
            [1 / _SQ6, 1 / _SQ6, 1 / _SQ6],
        ],
        omegacheck=[
            [2 / 3, -1 / 3, -1 / 3],
            [1 / 3, 1 / 3, -2 / 3],
            [1 / _SQ6, 1 / _SQ6, 1 / _SQ6],
        ],
    ),
    "C2xA1": dict(
        alpha=[[0, 1, 0], [1, -1, 0], [0, 0, _SQ2]],
        omega=[[0.5, 0.5, 0], [1, 0, 0], [0, 0, 1 / _SQ2]],
        omegacheck=[[1, 1, 0], [1, 0, 0], [0, 0, 1 / _SQ2]],
    ),
    "G2xA1": dict(
        alpha=[
            [_SQ2, 0, 0],
            [-1 / _SQ2, 1 / _SQ6, 0],
            [0, 0, _SQ2],
        ],
        omega=[
            [1 / _SQ2, _SQ3 / _SQ2, 0],
            [0, _SQ2 / _SQ3, 0],
            [0, 0, 1 / _SQ2],
        ],
        omegacheck=[
            [1 / _SQ2, _SQ3 / _SQ2, 0],
            [0, _SQ6, 0],
            [0, 0, 1 / _SQ2],
        ],
    ),
    "A3": dict(
        alpha=[[1, -1, 0], [0, 1, -1], [1 / 3, 1 / 3, 4 / 3]],
        omega=[
            [5 / 6, -1 / 6, -1 / 6],
            [2 / 3, 2 / 3, -1 / 3],
            [0.5, 0.5, 0.5],
        ],
        omegacheck=[
            [5 / 6, -1 / 6, -1 / 6],
            [2 / 3, 2 / 3, -1 / 3],
            [0.5, 0.5, 0.5],
        ],
    ),
    "B3": dict(
        alpha=[[1, -1, 0], [0, 1, -1], [0, 0, 1]],
        omega=[[1, 0, 0], [1, 1, 0], [0.5, 0.5, 0.5]],
        omegacheck=[[1, 0, 0], [1, 1, 0], [1, 1, 1]],
    ),
    "C3": dict(
        alpha=[
            [1 / _SQ2, -1 / _SQ2, 0],
            [0, 1 / _SQ2, -1 / _SQ2],
            [0, 0, _SQ2],
        ],
        omega=[
            [1 / _SQ2, 0, 0],
            [1 / _SQ2, 1 / _SQ2, 0],
            [1 / _SQ2, 1 / _SQ2, 1 / _SQ2],
        ],
        omegacheck=[
            [_SQ2, 0, 0],
            [_SQ2, _SQ2, 0],
            [1 / _SQ2, 1 / _SQ2, 1 / _SQ2],
        ],
    ),
}

# Orbit sizes keyed by the nonzero pattern of the dominant representative.
# T = coordinate nonzero, F = zero; ordered (coord1, coord2, coord3).

def _pattern_table(generic, one_zero, two_zeros):
    (tt0, t0t, ttf) = one_zero  # sizes for (0,b,c), (a,0,c), (a,b,0)
    (t00, f0t, ff0) = two_zeros  # sizes for (a,0,0), (0,b,0), (0,0,c)
    return {
        (True, True, True): generic,
        (False, True, True): tt0,
        (True, False, True): t0t,
        (True, True, False): ttf,
        (True, False, False): t00,
        (False, True, False): f0t,
        (False, False, True): ff0,
        (False, False, False): 1,
    }


_ORBIT_SIZES = {
    "A1xA1xA1": _pattern_table(8, (4, 4, 4), (2, 2, 2)),
    "A2xA1": _pattern_table(12, (6, 6, 6), (3, 3, 2)),
    "C2xA1": _pattern_table(16, (8, 8, 8), (4, 4, 2)),
    "G2xA1": _pattern_table(24, (12, 12, 12), (6, 6, 2)),
    "A3": _pattern_table(24, (12, 12, 12), (4, 6, 4)),
    "B3": _pattern_table(48, (24, 24, 24), (6, 12, 8)),
    "C3": _pattern_table(48, (24, 24, 24), (6, 12, 8)),
}

_FACTORIZATION = {
    "A1xA1xA1": (("A1", (0,)), ("A1", (1,)), ("A1", (2,))),
    "A2xA1": (("A2", (0, 1)), ("A1", (2,))),
    "C2xA1": (("C2", (0, 1)), ("A1", (2,))),
    "G2xA1": (("G2", (0, 1)), ("A1", (2,))),
    "A3": (("A3", (0, 1, 2)),),
    "B3": (("B3", (0, 1, 2)),),
    "C3": (("C3", (0, 1, 2)),),
}

_CACHE: dict[str, CartanData] = {}


def _assemble(name: str) -> CartanData:
    factors = tuple(SimpleFactor(fname, idx) for fname, idx in _FACTORIZATION[name])
    cart = [[0] * 3 for _ in range(3)]
    inv = [[F(0)] * 3 for _ in range(3)]
    len2 = [F(0)] * 3
    marks = [0] * 3
    comarks = [0] * 3
    duals = [0] * 3
    weyl_order = 1
    for f in factors:
        blk = _FACTOR_TABLES[f.name]
        weyl_order *= blk["weyl_order"]
        for a, i in enumerate(f.indices):
            len2[i] = blk["len2"][a]
            marks[i] = blk["marks"][a]
            comarks[i] = blk["comarks"][a]
            duals[i] = blk["dual_marks"][a]
            for b, j in enumerate(f.indices):
                cart[i][j] = blk["cartan"][a][b]
                inv[i][j] = blk["inv"][a][b]
    emb = _EMBEDDINGS[name]
    return CartanData(
        name=name,
        factors=factors,
        cartan=tuple(tuple(r) for r in cart),
        cartan_inv=tuple(tuple(r) for r in inv),
        root_len2=tuple(len2),
        marks=tuple(marks),
        comarks=tuple(comarks),
        dual_marks=tuple(duals),
        weyl_order=weyl_order,
        orbit_sizes=dict(_ORBIT_SIZES[name]),
        alpha_ortho=np.array(emb["alpha"], dtype=float),
        omega_ortho=np.array(emb["omega"], dtype=float),
        omegacheck_ortho=np.array(emb["omegacheck"], dtype=float),
    )


def cartan(algebra) -> CartanData:
    """Full static table for one of the seven algebras (cached, immutable)."""
    if isinstance(algebra, CartanData):
        return algebra
    name = canonical_name(algebra)
    if name not in _CACHE:
        _CACHE[name] = _assemble(name)
    return _CACHE[name]


def dual_marks(algebra) -> tuple[int, int, int]:
    """Coefficients of the highest coroot over the alphacheck basis."""
    return cartan(algebra).dual_marks


# -- basis conversions and scalar products ------------------------------------


def _check_basis(basis: str) -> str:
    if basis not in BASES:
        raise ValueError(f"unknown basis {basis!r}; expected one of {BASES}")
    return basis


def _to_alpha_exact(alg: CartanData, coords: Sequence, basis: str):
    """Coordinates in the alpha basis, exact for the four rational bases."""
    c = [Fraction(v) for v in coords]
    if basis == "alphacheck":
        c = [c[i] * 2 / alg.root_len2[i] for i in range(3)]
        basis = "alpha"
    elif basis == "omegacheck":
        c = [c[i] * 2 / alg.root_len2[i] for i in range(3)]
        basis = "omega"
    if basis == "alpha":
        return c
    # omega_i = sum_k Cinv[i][k] alpha_k
    return [sum(c[i] * alg.cartan_inv[i][k] for i in range(3)) for k in range(3)]


def to_orthonormal(algebra, coords: Sequence, basis: str = "omegacheck") -> np.ndarray:
    """Map coordinates in any basis to the orthonormal basis {e1,e2,e3}."""
    alg = cartan(algebra)
    _check_basis(basis)
    if basis == "ortho":
        return np.asarray(coords, dtype=float)
    if basis == "alpha":
        return np.asarray(coords, dtype=float) @ alg.alpha_ortho
    if basis == "omega":
        return np.asarray(coords, dtype=float) @ alg.omega_ortho
    if basis == "omegacheck":
        return np.asarray(coords, dtype=float) @ alg.omegacheck_ortho
    # alphacheck: rescale then use the alpha embedding
    scale = np.array([2 / float(l2) for l2 in alg.root_len2])
    return (np.asarray(coords, dtype=float) * scale) @ alg.alpha_ortho


def from_orthonormal(algebra, xyz: Sequence, basis: str = "omegacheck") -> np.ndarray:
    """Inverse of :func:`to_orthonormal` (floats)."""
    alg = cartan(algebra)
    _check_basis(basis)
    xyz = np.asarray(xyz, dtype=float)
    if basis == "ortho":
        return xyz
    if basis == "omegacheck":
        return xyz @ alg.ortho_to_omegacheck
    mats = {
        "alpha": alg.alpha_ortho,
        "omega": alg.omega_ortho,
    }
    if basis in mats:
        return xyz @ np.linalg.inv(mats[basis])
    scale = np.array([2 / float(l2) for l2 in alg.root_len2])
    return (xyz @ np.linalg.inv(alg.alpha_ortho)) / scale


def scalar_product(algebra, u: Sequence, u_basis: str, v: Sequence, v_basis: str):
    """Euclidean scalar product of two vectors given in any of the bases.

    Exact (a `Fraction`) whenever neither argument uses the orthonormal
    basis; a float otherwise.
    """
    alg = cartan(algebra)
    _check_basis(u_basis)
    _check_basis(v_basis)
    if u_basis == "ortho" or v_basis == "ortho":
        return float(np.dot(to_orthonormal(alg, u, u_basis), to_orthonormal(alg, v, v_basis)))
    ua = _to_alpha_exact(alg, u, u_basis)
    va = _to_alpha_exact(alg, v, v_basis)
    gram = alg.gram_alpha
    return sum(ua[i] * gram[i][j] * va[j] for i in range(3) for j in range(3))


def tables_as_dict(algebra) -> dict:
    """All static tables as JSON-serializable data (exact values as strings)."""
    alg = cartan(algebra)
    frac = lambda m: [[str(x) for x in row] for row in m]
    return {
        "algebra": alg.name,
        "factors": [{"name": f.name, "indices": list(f.indices)} for f in alg.factors],
        "cartan": [list(r) for r in alg.cartan],
        "cartan_inv": frac(alg.cartan_inv),
        "root_len2": [str(x) for x in alg.root_len2],
        "marks": list(alg.marks),
        "comarks": list(alg.comarks),
        "dual_marks": list(alg.dual_marks),
        "weyl_order": alg.weyl_order,
        "gram_omega": frac(alg.gram_omega),
        "gram_alpha": frac(alg.gram_alpha),
        "alpha_ortho": alg.alpha_ortho.tolist(),
        "omega_ortho": alg.omega_ortho.tolist(),
        "omegacheck_ortho": alg.omegacheck_ortho.tolist(),
        "volume": alg.vol_f,
        "vertices_ortho": [v.tolist() for v in alg.fundamental_vertices()],
        "orbit_sizes": {
            "".join("abc"[k] if nz else "0" for k, nz in enumerate(pat)): n
            for pat, n in sorted(alg.orbit_sizes.items(), reverse=True)
        },
    }
