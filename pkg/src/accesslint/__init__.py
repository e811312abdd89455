"""Access-control linting for early-design asset and goal models."""

__all__ = [
    "ACCESS_ORDER",
    "AccessNeed",
    "AccessRuleMatrix",
    "AccessTriple",
    "AccessWarning",
    "Asset",
    "AssetKind",
    "AssetModel",
    "Association",
    "Goal",
    "GoalGraph",
    "GoalKind",
    "ModelError",
    "ParseError",
    "Permission",
    "PolicyStatement",
    "Refinement",
    "SchemaError",
    "SecurityValue",
    "SemanticError",
    "ValidationReport",
    "WarningKind",
    "check_goal_structure",
    "check_structure",
    "compare_levels",
    "default_matrix",
    "expand_hierarchy",
    "expand_needs",
    "export_dot",
    "fixture_text",
    "load_fixture",
    "lookup_statement",
    "parse_model",
    "render_report",
    "serialize_model",
    "trace",
    "validate_access",
]

from .dot import export_dot
from .fixtures import fixture_text, load_fixture
from .goals import (
    Goal,
    GoalGraph,
    GoalKind,
    Permission,
    PolicyStatement,
    Refinement,
    check_goal_structure,
    lookup_statement,
    trace,
)
from .model import (
    ACCESS_ORDER,
    AccessNeed,
    AccessRuleMatrix,
    Asset,
    AssetKind,
    AssetModel,
    Association,
    ModelError,
    SecurityValue,
    check_structure,
    compare_levels,
    default_matrix,
)
from .modelio import (
    ParseError,
    SchemaError,
    SemanticError,
    parse_model,
    render_report,
    serialize_model,
)
from .validation import (
    AccessTriple,
    AccessWarning,
    ValidationReport,
    WarningKind,
    expand_hierarchy,
    expand_needs,
    validate_access,
)
