"""Exact decomposition of Kirillov-Reshetikhin modules W_m(l) into
irreducible g-modules for simply-laced g, plus the asymptotic growth of
dim W_m(l) as a polynomial in m."""

from .rootsystem import (
    AlgebraId,
    InvalidAlgebraError,
    NonDominantError,
    RootSystem,
    alpha_to_omega,
    build_root_system,
    dominant_weights_below,
    fundamental_weight,
    omega_to_alpha,
    root_system,
    weyl_dimension,
)
from .oracle import (
    MultiplicityQuery,
    OracleScaleError,
    full_decomposition_oracle,
    z_multiplicity,
)
from .tree import (
    DecompositionTree,
    LiftReport,
    TreeNode,
    TreeScaleError,
    aggregate_multiplicities,
    build_tree,
    check_lift,
    total_dimension,
)
from .growth import (
    GrowthReport,
    HeightRelationNotApplicable,
    PathType,
    SearchBudgetError,
    g_value,
    growth_degree,
    half_orbit_dim,
    height_relation_check,
    is_valid_path_type,
)
from .fixtures import Fixture, check_fixture, discover_fixtures, load_fixture
from .render import parse_json, render_flat, render_json, render_tree, weight_str

__all__ = [
    "AlgebraId", "InvalidAlgebraError", "NonDominantError", "RootSystem",
    "alpha_to_omega", "build_root_system", "dominant_weights_below",
    "fundamental_weight", "omega_to_alpha", "root_system", "weyl_dimension",
    "MultiplicityQuery", "OracleScaleError", "full_decomposition_oracle",
    "z_multiplicity",
    "DecompositionTree", "LiftReport", "TreeNode", "TreeScaleError",
    "aggregate_multiplicities", "build_tree", "check_lift", "total_dimension",
    "GrowthReport", "HeightRelationNotApplicable", "PathType",
    "SearchBudgetError", "g_value", "growth_degree", "half_orbit_dim",
    "height_relation_check", "is_valid_path_type",
    "Fixture", "check_fixture", "discover_fixtures", "load_fixture",
    "parse_json", "render_flat", "render_json", "render_tree", "weight_str",
]

__version__ = "1.0.0"
