"""Fadell-Husseini indices of Stiefel manifolds under C_p^n actions.

The kernel is truncated polynomial arithmetic over Z/p; on top of it sit the
total characteristic classes of regular representations, the transgression
engine that reads index generators off their formal inverses, mod-2 Steenrod
refinements, and the orthogonal-vectors decision procedure.  A FastAPI
service (fhindex.service) and a CLI front end (fhindex.cli) wrap the core.
"""

from .charclass import (
    ClassKind,
    GroupSpec,
    RegularRepClassSeries,
    ScalarField,
    class_kind_for,
    inverse_component,
    regular_linear_forms,
    total_class,
)
from .fppoly import (
    NotAUnitError,
    PolyRing,
    PrimeField,
    RingMismatchError,
    TruncatedPolynomial,
    is_prime,
    product_over_linear_forms,
)
from .indices import (
    FiberGenerator,
    IndexResult,
    RepSphereSpec,
    ResultKind,
    StiefelSpec,
    closed_form_m,
    fiber_generators,
    index_rep_sphere,
    index_stiefel,
    lower_bound_degree_rank_n,
    stiefel_connectivity,
)
from .kakutani import (
    BoundDecision,
    BoundQuery,
    Mechanism,
    NoKnownBoundError,
    TableRow,
    bound_l,
    decide,
    guaranteed_threshold,
    rows_to_csv,
    sphere_index_degree,
    table,
)
from .steenrod import StuntedSpace, binom_mod2, c2_numeric_index_bounds, sq_connects
from .verify import SUITES, VerifyResult, all_passed, run_all, run_suite

__version__ = "0.1.0"

__all__ = [
    "BoundDecision",
    "BoundQuery",
    "ClassKind",
    "FiberGenerator",
    "GroupSpec",
    "IndexResult",
    "Mechanism",
    "NoKnownBoundError",
    "NotAUnitError",
    "PolyRing",
    "PrimeField",
    "RegularRepClassSeries",
    "RepSphereSpec",
    "ResultKind",
    "RingMismatchError",
    "SUITES",
    "ScalarField",
    "StiefelSpec",
    "StuntedSpace",
    "TableRow",
    "TruncatedPolynomial",
    "VerifyResult",
    "all_passed",
    "binom_mod2",
    "bound_l",
    "c2_numeric_index_bounds",
    "class_kind_for",
    "closed_form_m",
    "decide",
    "fiber_generators",
    "guaranteed_threshold",
    "index_rep_sphere",
    "index_stiefel",
    "inverse_component",
    "is_prime",
    "lower_bound_degree_rank_n",
    "product_over_linear_forms",
    "regular_linear_forms",
    "rows_to_csv",
    "run_all",
    "run_suite",
    "sphere_index_degree",
    "sq_connects",
    "stiefel_connectivity",
    "table",
    "total_class",
    "__version__",
]
