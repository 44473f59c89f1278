"""Orbit-function harmonic analysis on the rank-3 compact semisimple groups.

Three families of Weyl-group-symmetrized exponentials (C: symmetric,
S: parity-signed, E: even-subgroup) with their continuous and discrete
orthogonality, grid transforms and smooth interpolation of lattice-sampled
3D data, for A1xA1xA1, A2xA1, C2xA1, G2xA1, A3, B3 and C3.
"""

__version__ = "0.1.0"

from .algebras import (
    ALGEBRAS,
    BASES,
    AlgebraKeyError,
    CartanData,
    cartan,
    canonical_name,
    dual_marks,
    from_orthonormal,
    scalar_product,
    tables_as_dict,
    to_orthonormal,
)
from .weyl import (
    ConsistencyError,
    Orbit,
    OrbitPoint,
    even_orbit,
    orbit,
    orbit_size,
    point_orbit,
    point_reflect,
    reflect,
)
from .lattice import (
    FAMILIES,
    FoldError,
    GridPoint,
    WeightSet,
    a_m,
    affine_reflect,
    epsilon,
    fold_to_fundamental,
    grid_count,
    grid_points,
    in_fundamental,
    lambda_set,
    validate_spec,
)
from .functions import (
    OrbitFunction,
    apply_word,
    evaluate,
    laplace_eigenvalue,
    orbit_function,
    symmetry_check,
)
from .transforms import (
    SampledField,
    Spectrum,
    TransformMatrix,
    build_transform_matrix,
    continuous_coeffs,
    continuous_dot_mc,
    discrete_dot,
    error_integral,
    forward,
    grid_values,
    load_matrix,
    save_matrix,
    shifted_lambda_set,
    synthesize,
    uniform_f_samples,
)
from .demo import gaussian, run_gauss_demo

__all__ = [name for name in dir() if not name.startswith("_")]
