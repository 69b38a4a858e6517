"""mfkit: exact computation in homotopy categories of matrix factorizations
of ADE surface singularities.

The package computes Hom spaces with exact coordinates, null-homotopy and
isomorphism tests, radical filtrations, Auslander-Reiten triangles and
quivers, and the full catalog of indecomposables for the ADE families in
every characteristic where they are defined.
"""

from .catalog import (
    CatalogEntry,
    SingularityType,
    catalog_all,
    catalog_mf,
    defining_poly,
    parse_spec_string,
)
from .errors import (
    DegreeGuardExceeded,
    IndexOutOfRange,
    InvalidTypeCombination,
    MFKitError,
    MixedHypersurface,
    NoScalarBlock,
    NonClosure,
    NotASummand,
    NotHomFinite,
    NotScalarPlusNilpotent,
    NotZeroDimensional,
    PolyParseError,
    PreconditionViolated,
    SocleEmpty,
    UnrecognizedSummand,
)
from .fields import Field
from .groebner import (
    FreeVector,
    Submodule,
    colon_module,
    groebner_basis,
    ideal,
    member_with_lift,
    normal_form,
    std_monomials,
    syzygies,
)
from .linalg import KMatrix, kernel_basis, unique_eigenvalue
from .matrices import PolyMatrix, constant_part, kronecker, vectorize
from .mf import (
    HomSpace,
    Homotopy,
    MatrixFactorization,
    Morphism,
    ar_triangle,
    coker_presentation,
    compose,
    cone,
    coordinates,
    decompose,
    direct_sum,
    hom_dim,
    hom_space,
    is_indecomposable,
    is_isomorphism,
    is_null_homotopic,
    iso_test,
    mcm_rank,
    mf_verify,
    multiplicity,
    rad_power_dims,
    radical_space,
    reduce_constant_pivots,
    relations,
    shift,
    split_summand,
)
from .poly import Poly, PolyContext, poly_parse
from .quiver import (
    ARQuiver,
    DynkinGraph,
    ar_quiver,
    dynkin_double_quiver,
    emit,
    fundamental_cycle,
    knit_from_seed,
    quiver_equal,
)

__all__ = [name for name in dir() if not name.startswith("_")]
