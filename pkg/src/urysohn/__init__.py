"""Exact arithmetic for the universal ultrametric space of finite-support
integer-valued maps on a rational range set."""

from .errors import (
    InternalCheckError,
    ParseError,
    PreconditionError,
    StructureError,
    UrysohnError,
)
from .spaces import (
    FiniteUltrametricSpace,
    RangeSet,
    ball_partition,
    closed_ball,
    distance_set,
    is_avoidant,
    is_haloed,
    validate_ultrametric,
)
from .model import (
    ORIGIN,
    UrysohnPoint,
    avoidant_witness,
    ball_key,
    delta,
    equidistant_family,
    seed_point,
)
from .embedding import (
    ExtensionProblem,
    check_one_point_injectivity,
    embed_space,
    extend_one_point,
)
from .hyperspace import (
    FiniteSubset,
    SymmetricProductBound,
    UNBOUNDED,
    check_symmetric_product,
    hausdorff_ballmin,
    hausdorff_supinf,
    hyperspace_equidistant_family,
)
from .products import (
    INF,
    LpCertificate,
    ProductPoint,
    linf_distance,
    linf_grid_search,
    lp_counterexample,
    lp_solvability_condition,
    matrix_rank,
    pairing_matrix,
    product_equidistant_family,
)
from .petals import (
    HeirTree,
    Inheritance,
    build_petal_cover,
    check_petal_properties,
    distance_to_petal,
    generate_heirs,
    heir_distance,
    in_petal,
    validate_inheritance,
)

__version__ = "0.1.0"
