"""Strong rainbow edge colorings of toroidal meshes (products of cycles).

Build colorings under which every vertex pair is joined by a shortest path
with pairwise-distinct edge colors, verify them exhaustively, compute the
bound formulas they realize, and cross-check tiny cases against an exact
backtracking search.
"""

__version__ = "0.1.0"

from .colorings import (
    Coloring,
    PaletteInjection,
    cycle_coloring,
    lift_coloring,
    prism_coloring,
    product_coloring,
    relabel,
)
from .errors import (
    BadParityError,
    BudgetExceededError,
    ColorOutOfRangeError,
    CoordOutOfRangeError,
    DimTooSmallError,
    DocumentError,
    EmptyDimsError,
    IncompleteColoringError,
    NotAdjacentError,
    NotInjectiveError,
    PaletteTooLargeError,
    ParityMismatchError,
    SameVertexError,
    ShapeMismatchError,
    TorusRainbowError,
)
from .oracle import SearchBudget, exact_src, is_src_achievable
from .planner import (
    BoundsReport,
    CycleLeaf,
    Embed,
    Lift,
    Plan,
    PrismLeaf,
    Product,
    old_bounds,
    pair_coloring,
    plan_and_color,
    plan_from_dict,
    plan_to_coloring,
    plan_to_dict,
    s7_coloring,
    theorem_bound,
)
from .torus import (
    Edge,
    TorusShape,
    diameter,
    distance,
    geodesic_successors,
    make_shape,
)
from .verifier import (
    TablePathsReport,
    VerificationReport,
    is_strong_rainbow,
    rainbow_geodesic,
    verify_table_paths,
)

__all__ = [
    "__version__",
    # torus core
    "TorusShape",
    "Edge",
    "make_shape",
    "distance",
    "diameter",
    "geodesic_successors",
    # colorings
    "Coloring",
    "PaletteInjection",
    "cycle_coloring",
    "prism_coloring",
    "product_coloring",
    "lift_coloring",
    "relabel",
    # planner
    "Plan",
    "CycleLeaf",
    "PrismLeaf",
    "Product",
    "Lift",
    "Embed",
    "BoundsReport",
    "theorem_bound",
    "old_bounds",
    "s7_coloring",
    "pair_coloring",
    "plan_and_color",
    "plan_to_coloring",
    "plan_to_dict",
    "plan_from_dict",
    # verifier
    "VerificationReport",
    "TablePathsReport",
    "rainbow_geodesic",
    "is_strong_rainbow",
    "verify_table_paths",
    # oracle
    "SearchBudget",
    "is_src_achievable",
    "exact_src",
    # errors
    "TorusRainbowError",
    "EmptyDimsError",
    "DimTooSmallError",
    "CoordOutOfRangeError",
    "SameVertexError",
    "NotAdjacentError",
    "ShapeMismatchError",
    "PaletteTooLargeError",
    "NotInjectiveError",
    "IncompleteColoringError",
    "ColorOutOfRangeError",
    "BadParityError",
    "ParityMismatchError",
    "BudgetExceededError",
    "DocumentError",
]
