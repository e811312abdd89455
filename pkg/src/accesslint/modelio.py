"""Model document format: strict parsing, canonical serialization, reports.

A model document is UTF-8 JSON with top-level keys
{version, assets, associations, goals, refinements, policy, matrixOverride}.
The parser is deliberately strict: unknown keys anywhere are hard errors
with the offending path named, because a silently ignored typo in a
security model is worse than a parse failure.

Serialization is canonical (keys alphabetical within objects, lists in
document order, two-space indent, trailing newline) so that re-saving a
parsed document is byte-stable.
"""

from __future__ import annotations

import json
from typing import Any

from .goals import (
    Goal,
    GoalGraph,
    GoalKind,
    Permission,
    PolicyStatement,
    Refinement,
    check_goal_structure,
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
    MULTIPLICITIES,
    SecurityValue,
    check_structure,
    default_matrix,
)
from .validation import RULE_RESULTS, ValidationReport

DOCUMENT_VERSION = 1

_LEVEL_NAMES = {level.name.lower(): level for level in SecurityValue}
_KIND_NAMES = {kind.value: kind for kind in AssetKind}
_NEED_NAMES = {need.value: need for need in AccessNeed}
_GOAL_KIND_NAMES = {kind.value: kind for kind in GoalKind}
_PERMISSION_NAMES = {perm.value: perm for perm in Permission}


class ParseError(Exception):
    """A document could not be turned into a model.

    location is a document path ("assets[2].kind") or a line reference
    ("line 4, column 7"); every failure carries one.
    """

    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location
        self.reason = message


class DocumentSyntaxError(ParseError):
    """The input is not well-formed JSON (or not UTF-8)."""


class SchemaError(ParseError):
    """The JSON is well-formed but violates the document schema."""


class SemanticError(ParseError):
    """The document parsed but fails structural validation."""

    def __init__(self, errors: list[ModelError]):
        self.errors = errors
        first = errors[0]
        super().__init__(first.where, f"{len(errors)} structural error(s), first: {first}")


def _require_object(value: Any, path: str) -> dict:
    if not isinstance(value, dict):
        raise SchemaError(path, f"expected an object, got {type(value).__name__}")
    return value


def _require_list(value: Any, path: str) -> list:
    if not isinstance(value, list):
        raise SchemaError(path, f"expected a list, got {type(value).__name__}")
    return value


def _require_string(value: Any, path: str) -> str:
    if not isinstance(value, str):
        raise SchemaError(path, f"expected a string, got {type(value).__name__}")
    return value


def _require_enum(value: Any, table: dict, path: str, what: str):
    name = _require_string(value, path)
    if name not in table:
        expected = ", ".join(sorted(table))
        raise SchemaError(path, f"invalid {what} {name!r}, expected one of: {expected}")
    return table[name]


def _reject_unknown_keys(obj: dict, known: tuple[str, ...], path: str) -> None:
    for key in obj:
        if key not in known:
            raise SchemaError(f"{path}.{key}", f"unknown key {key!r}")


def _parse_needs(value: Any, path: str) -> frozenset[AccessNeed]:
    needs = []
    for i, item in enumerate(_require_list(value, path)):
        needs.append(_require_enum(item, _NEED_NAMES, f"{path}[{i}]", "access need"))
    if len(needs) != len(set(needs)):
        raise SchemaError(path, "access needs listed more than once")
    return frozenset(needs)


_ASSET_KEYS = ("name", "kind", "confidentiality", "integrity", "extraProperties", "parent")


def _parse_asset(obj: Any, path: str) -> Asset:
    obj = _require_object(obj, path)
    _reject_unknown_keys(obj, _ASSET_KEYS, path)
    for required in ("name", "kind"):
        if required not in obj:
            raise SchemaError(path, f"missing required key {required!r}")
    name = _require_string(obj["name"], f"{path}.name")
    if not name:
        raise SchemaError(f"{path}.name", "asset name must be nonempty")
    kind = _require_enum(obj["kind"], _KIND_NAMES, f"{path}.kind", "asset kind")
    confidentiality = SecurityValue.NONE
    if "confidentiality" in obj:
        confidentiality = _require_enum(
            obj["confidentiality"], _LEVEL_NAMES, f"{path}.confidentiality",
            "security level")
    integrity = SecurityValue.NONE
    if "integrity" in obj:
        integrity = _require_enum(
            obj["integrity"], _LEVEL_NAMES, f"{path}.integrity", "security level")
    extra: dict[str, SecurityValue] = {}
    if "extraProperties" in obj:
        table = _require_object(obj["extraProperties"], f"{path}.extraProperties")
        for prop, raw in table.items():
            extra[prop] = _require_enum(
                raw, _LEVEL_NAMES, f"{path}.extraProperties.{prop}", "security level")
    parent = None
    if "parent" in obj:
        parent = _require_string(obj["parent"], f"{path}.parent")
    return Asset(
        name=name,
        kind=kind,
        confidentiality=confidentiality,
        integrity=integrity,
        extra_properties=extra,
        parent=parent,
    )


_ASSOCIATION_KEYS = ("source", "target", "sourceNeeds", "targetNeeds",
                     "sourceMultiplicity", "targetMultiplicity")


def _parse_association(obj: Any, path: str) -> Association:
    obj = _require_object(obj, path)
    _reject_unknown_keys(obj, _ASSOCIATION_KEYS, path)
    for required in ("source", "target"):
        if required not in obj:
            raise SchemaError(path, f"missing required key {required!r}")
    multiplicities: dict[str, str | None] = {}
    for key in ("sourceMultiplicity", "targetMultiplicity"):
        multiplicities[key] = None
        if key in obj:
            value = _require_string(obj[key], f"{path}.{key}")
            if value not in MULTIPLICITIES:
                expected = ", ".join(repr(m) for m in MULTIPLICITIES)
                raise SchemaError(
                    f"{path}.{key}",
                    f"invalid multiplicity {value!r}, expected one of: {expected}")
            multiplicities[key] = value
    return Association(
        source=_require_string(obj["source"], f"{path}.source"),
        target=_require_string(obj["target"], f"{path}.target"),
        source_needs=_parse_needs(obj.get("sourceNeeds", []), f"{path}.sourceNeeds"),
        target_needs=_parse_needs(obj.get("targetNeeds", []), f"{path}.targetNeeds"),
        source_multiplicity=multiplicities["sourceMultiplicity"],
        target_multiplicity=multiplicities["targetMultiplicity"],
    )


_GOAL_KEYS = ("name", "kind", "definition")


def _parse_goal(obj: Any, path: str) -> Goal:
    obj = _require_object(obj, path)
    _reject_unknown_keys(obj, _GOAL_KEYS, path)
    for required in ("name", "kind"):
        if required not in obj:
            raise SchemaError(path, f"missing required key {required!r}")
    definition = ""
    if "definition" in obj:
        definition = _require_string(obj["definition"], f"{path}.definition")
    return Goal(
        name=_require_string(obj["name"], f"{path}.name"),
        kind=_require_enum(obj["kind"], _GOAL_KIND_NAMES, f"{path}.kind", "goal kind"),
        definition=definition,
    )


_REFINEMENT_KEYS = ("parent", "child")


def _parse_refinement(obj: Any, path: str) -> Refinement:
    obj = _require_object(obj, path)
    _reject_unknown_keys(obj, _REFINEMENT_KEYS, path)
    for required in _REFINEMENT_KEYS:
        if required not in obj:
            raise SchemaError(path, f"missing required key {required!r}")
    return Refinement(
        parent=_require_string(obj["parent"], f"{path}.parent"),
        child=_require_string(obj["child"], f"{path}.child"),
    )


_POLICY_KEYS = ("requirement", "subject", "access", "resource", "permission")


def _parse_statement(obj: Any, path: str) -> PolicyStatement:
    obj = _require_object(obj, path)
    _reject_unknown_keys(obj, _POLICY_KEYS, path)
    for required in _POLICY_KEYS:
        if required not in obj:
            raise SchemaError(path, f"missing required key {required!r}")
    return PolicyStatement(
        requirement=_require_string(obj["requirement"], f"{path}.requirement"),
        subject=_require_string(obj["subject"], f"{path}.subject"),
        access=_require_enum(obj["access"], _NEED_NAMES, f"{path}.access", "access need"),
        resource=_require_string(obj["resource"], f"{path}.resource"),
        permission=_require_enum(
            obj["permission"], _PERMISSION_NAMES, f"{path}.permission", "permission"),
    )


_OVERRIDE_KEYS = ("subject", "resource", "allowed")


def _parse_matrix(overrides: Any, path: str) -> AccessRuleMatrix:
    allowed = dict(default_matrix().allowed)
    seen: set[tuple[AssetKind, AssetKind]] = set()
    for i, obj in enumerate(_require_list(overrides, path)):
        entry_path = f"{path}[{i}]"
        obj = _require_object(obj, entry_path)
        _reject_unknown_keys(obj, _OVERRIDE_KEYS, entry_path)
        for required in _OVERRIDE_KEYS:
            if required not in obj:
                raise SchemaError(entry_path, f"missing required key {required!r}")
        subject = _require_enum(
            obj["subject"], _KIND_NAMES, f"{entry_path}.subject", "asset kind")
        resource = _require_enum(
            obj["resource"], _KIND_NAMES, f"{entry_path}.resource", "asset kind")
        if not isinstance(obj["allowed"], bool):
            raise SchemaError(f"{entry_path}.allowed", "expected a boolean")
        cell = (subject, resource)
        if cell in seen:
            raise SchemaError(
                entry_path,
                f"duplicate override for ({subject.value}, {resource.value})")
        seen.add(cell)
        allowed[cell] = obj["allowed"]
    return AccessRuleMatrix(allowed)


_TOP_KEYS = ("version", "assets", "associations", "goals", "refinements",
             "policy", "matrixOverride")


def parse_model(document: bytes | str, *, check: bool = True) -> tuple[AssetModel, GoalGraph]:
    """Parse a model document into an asset model and goal graph.

    With check=True (the default) the structural checks run as part of
    parsing and any error-severity finding raises SemanticError; a
    successfully returned pair therefore satisfies every invariant.
    Pass check=False to obtain the raw structures and run the checks
    yourself (the CLI's check command does this to report all findings).
    """
    if isinstance(document, bytes):
        try:
            document = document.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DocumentSyntaxError(
                f"byte {exc.start}", "document is not valid UTF-8") from exc
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(
            f"line {exc.lineno}, column {exc.colno}", exc.msg) from exc

    root = _require_object(data, "$")
    _reject_unknown_keys(root, _TOP_KEYS, "$")
    if "version" not in root:
        raise SchemaError("$.version", "missing required key 'version'")
    if root["version"] != DOCUMENT_VERSION:
        raise SchemaError(
            "$.version",
            f"unsupported document version {root['version']!r}, "
            f"expected {DOCUMENT_VERSION}")

    assets = tuple(
        _parse_asset(obj, f"assets[{i}]")
        for i, obj in enumerate(_require_list(root.get("assets", []), "$.assets")))
    associations = tuple(
        _parse_association(obj, f"associations[{i}]")
        for i, obj in enumerate(
            _require_list(root.get("associations", []), "$.associations")))
    goals = tuple(
        _parse_goal(obj, f"goals[{i}]")
        for i, obj in enumerate(_require_list(root.get("goals", []), "$.goals")))
    refinements = tuple(
        _parse_refinement(obj, f"refinements[{i}]")
        for i, obj in enumerate(
            _require_list(root.get("refinements", []), "$.refinements")))
    policy = tuple(
        _parse_statement(obj, f"policy[{i}]")
        for i, obj in enumerate(_require_list(root.get("policy", []), "$.policy")))
    matrix = _parse_matrix(root.get("matrixOverride", []), "$.matrixOverride")

    model = AssetModel(assets=assets, associations=associations, matrix=matrix)
    graph = GoalGraph(nodes=goals, refinements=refinements, policy=policy)

    if check:
        findings = check_structure(model) + check_goal_structure(graph, model)
        errors = [f for f in findings if f.severity == "error"]
        if errors:
            raise SemanticError(errors)

    return model, graph


def _level_name(level: SecurityValue) -> str:
    return level.name.lower()


def _asset_to_obj(asset: Asset) -> dict:
    obj: dict[str, Any] = {
        "name": asset.name,
        "kind": asset.kind.value,
        "confidentiality": _level_name(asset.confidentiality),
        "integrity": _level_name(asset.integrity),
    }
    if asset.extra_properties:
        obj["extraProperties"] = {
            prop: _level_name(level) for prop, level in asset.extra_properties.items()
        }
    if asset.parent is not None:
        obj["parent"] = asset.parent
    return obj


def _association_to_obj(assoc: Association) -> dict:
    obj: dict[str, Any] = {"source": assoc.source, "target": assoc.target}
    if assoc.source_needs:
        obj["sourceNeeds"] = [
            n.value for n in sorted(assoc.source_needs, key=ACCESS_ORDER.__getitem__)]
    if assoc.target_needs:
        obj["targetNeeds"] = [
            n.value for n in sorted(assoc.target_needs, key=ACCESS_ORDER.__getitem__)]
    if assoc.source_multiplicity is not None:
        obj["sourceMultiplicity"] = assoc.source_multiplicity
    if assoc.target_multiplicity is not None:
        obj["targetMultiplicity"] = assoc.target_multiplicity
    return obj


def _goal_to_obj(goal: Goal) -> dict:
    obj: dict[str, Any] = {"name": goal.name, "kind": goal.kind.value}
    if goal.definition:
        obj["definition"] = goal.definition
    return obj


def serialize_model(model: AssetModel, graph: GoalGraph) -> str:
    """Render a model and goal graph as canonical document text.

    parse_model(serialize_model(m, g)) is structurally identical to
    (m, g); serializing what parse_model returned reproduces the
    canonical bytes exactly.
    """
    document: dict[str, Any] = {"version": DOCUMENT_VERSION}
    if model.assets:
        document["assets"] = [_asset_to_obj(a) for a in model.assets]
    if model.associations:
        document["associations"] = [_association_to_obj(a) for a in model.associations]
    if graph.nodes:
        document["goals"] = [_goal_to_obj(g) for g in graph.nodes]
    if graph.refinements:
        document["refinements"] = [
            {"parent": r.parent, "child": r.child} for r in graph.refinements]
    if graph.policy:
        document["policy"] = [
            {
                "requirement": s.requirement,
                "subject": s.subject,
                "access": s.access.value,
                "resource": s.resource,
                "permission": s.permission.value,
            }
            for s in graph.policy
        ]
    base = default_matrix().allowed
    overrides = [
        {"subject": subject.value, "resource": resource.value,
         "allowed": model.matrix.allowed[(subject, resource)]}
        for subject in AssetKind
        for resource in AssetKind
        if model.matrix.allowed[(subject, resource)] != base[(subject, resource)]
    ]
    if overrides:
        document["matrixOverride"] = overrides
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def render_report(report: ValidationReport, format: str = "text") -> str:
    """Render a validation report as human-readable text or as JSON.

    The text form lists one warning per line followed by a five-row
    security-rule summary with Y/N flags; the JSON form carries the
    warnings, per-kind counts, and rule flags.
    """
    if format == "json":
        payload = {
            "warnings": [
                {
                    "kind": w.kind.value,
                    "subject": w.triple.subject,
                    "access": w.triple.access.value,
                    "resource": w.triple.resource,
                    "message": w.message,
                }
                for w in report.warnings
            ],
            "summary": {kind.value: count for kind, count in report.summary.items()},
            "ruleResults": report.rule_results,
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if format != "text":
        raise ValueError(f"unknown report format {format!r}")

    lines = [f"{w.kind.value}: {w.triple}" for w in report.warnings]
    if lines:
        lines.append("")
    flags = report.rule_results
    width = max(len(label) for _, label, _ in RULE_RESULTS)
    for key, label, _ in RULE_RESULTS:
        lines.append(f"{label:<{width}} {'Y' if flags[key] else 'N'}")
    return "\n".join(lines) + "\n"
