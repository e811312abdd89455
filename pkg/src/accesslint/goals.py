"""Goal graph, policy statements, and requirement traceability.

Goals are refined into subgoals and requirements; each policy statement
(subject, access, resource, allow|deny) hangs off exactly one
requirement, so every permitted or denied interaction stays traceable
to the requirement that justifies it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .model import AccessNeed, AssetModel, ModelError


class GoalKind(Enum):
    GOAL = "goal"
    REQUIREMENT = "requirement"


class Permission(Enum):
    ALLOW = "allow"
    DENY = "deny"


@dataclass(frozen=True)
class Goal:
    name: str
    kind: GoalKind
    definition: str = ""


@dataclass(frozen=True)
class Refinement:
    """An edge stating that child contributes to satisfying parent."""

    parent: str
    child: str


@dataclass(frozen=True)
class PolicyStatement:
    requirement: str
    subject: str
    access: AccessNeed
    resource: str
    permission: Permission


@dataclass(frozen=True)
class GoalGraph:
    nodes: tuple[Goal, ...] = ()
    refinements: tuple[Refinement, ...] = ()
    policy: tuple[PolicyStatement, ...] = ()

    def node_named(self, name: str) -> Goal | None:
        for node in self.nodes:
            if node.name == name:
                return node
        return None


def _refinement_cycles(graph: GoalGraph) -> list[list[str]]:
    """Strongly connected components of size > 1 (or with a self loop)."""
    children: dict[str, list[str]] = {}
    names = [n.name for n in graph.nodes]
    order = {name: i for i, name in enumerate(names)}
    for ref in graph.refinements:
        if ref.parent in order and ref.child in order:
            children.setdefault(ref.parent, []).append(ref.child)

    # Tarjan without recursion; graphs are small but cycles may be long.
    index_of: dict[str, int] = {}
    low: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    counter = 0
    cycles: list[list[str]] = []

    for root in names:
        if root in index_of:
            continue
        work = [(root, iter(children.get(root, ())))]
        index_of[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            node, edges = work[-1]
            advanced = False
            for child in edges:
                if child not in index_of:
                    index_of[child] = low[child] = counter
                    counter += 1
                    stack.append(child)
                    on_stack.add(child)
                    work.append((child, iter(children.get(child, ()))))
                    advanced = True
                    break
                if child in on_stack:
                    low[node] = min(low[node], index_of[child])
            if advanced:
                continue
            work.pop()
            if work:
                parent_node = work[-1][0]
                low[parent_node] = min(low[parent_node], low[node])
            if low[node] == index_of[node]:
                component = []
                while True:
                    member = stack.pop()
                    on_stack.discard(member)
                    component.append(member)
                    if member == node:
                        break
                has_self_loop = any(
                    r.parent == node and r.child == node for r in graph.refinements
                )
                if len(component) > 1 or has_self_loop:
                    cycles.append(sorted(component, key=order.__getitem__))

    cycles.sort(key=lambda members: order[members[0]])
    return cycles


def check_goal_structure(graph: GoalGraph, model: AssetModel) -> list[ModelError]:
    """Check every goal-graph invariant against the asset model.

    An empty result means the graph is sound.  Requirements that own no
    policy statement and are not refined further are reported at warning
    severity: they may legitimately cover concerns other than access.
    """
    errors: list[ModelError] = []
    by_name: dict[str, Goal] = {}
    asset_names = {a.name for a in model.assets}

    for node in graph.nodes:
        if not node.name:
            errors.append(ModelError(
                "EmptyGoalName", "<unnamed goal>",
                "goal has an empty name",
            ))
            continue
        if node.name in by_name:
            errors.append(ModelError(
                "DuplicateGoalName", node.name,
                f"goal name {node.name!r} is declared more than once",
            ))
            continue
        by_name[node.name] = node

    seen_edges: set[tuple[str, str]] = set()
    for ref in graph.refinements:
        where = f"refinement {ref.parent!r} <- {ref.child!r}"
        resolved = True
        for endpoint in (ref.parent, ref.child):
            if endpoint not in by_name:
                errors.append(ModelError(
                    "UnknownGoal", where,
                    f"refinement references unknown goal {endpoint!r}",
                ))
                resolved = False
        if (ref.parent, ref.child) in seen_edges:
            errors.append(ModelError(
                "DuplicateRefinement", where,
                f"refinement {ref.parent!r} <- {ref.child!r} appears more than once",
            ))
            continue
        seen_edges.add((ref.parent, ref.child))
        if not resolved:
            continue
        if (by_name[ref.parent].kind is GoalKind.REQUIREMENT
                and by_name[ref.child].kind is GoalKind.GOAL):
            errors.append(ModelError(
                "RequirementAboveGoal", where,
                f"requirement {ref.parent!r} cannot be refined by goal {ref.child!r}",
            ))

    for members in _refinement_cycles(graph):
        errors.append(ModelError(
            "CyclicRefinement", members[0],
            "refinement cycle: " + " -> ".join(members + [members[0]]),
        ))

    for stmt in graph.policy:
        where = (f"policy {stmt.subject!r} {stmt.access.value} {stmt.resource!r} "
                 f"{stmt.permission.value}")
        owner = by_name.get(stmt.requirement)
        if owner is None:
            errors.append(ModelError(
                "UnknownRequirement", where,
                f"policy statement references unknown requirement {stmt.requirement!r}",
            ))
        elif owner.kind is not GoalKind.REQUIREMENT:
            errors.append(ModelError(
                "NotARequirement", where,
                f"policy statement is owned by {stmt.requirement!r}, which is a goal, "
                "not a requirement",
            ))
        for endpoint in (stmt.subject, stmt.resource):
            if endpoint not in asset_names:
                errors.append(ModelError(
                    "UnknownAsset", where,
                    f"policy statement references unknown asset {endpoint!r}",
                ))

    seen_interactions: dict[tuple[str, AccessNeed, str], Permission] = {}
    reported_conflicts: set[tuple[str, AccessNeed, str]] = set()
    seen_statements: set[tuple[str, AccessNeed, str, Permission]] = set()
    for stmt in graph.policy:
        interaction = (stmt.subject, stmt.access, stmt.resource)
        full = interaction + (stmt.permission,)
        where = (f"policy {stmt.subject!r} {stmt.access.value} {stmt.resource!r} "
                 f"{stmt.permission.value}")
        if full in seen_statements:
            errors.append(ModelError(
                "DuplicateStatement", where,
                f"statement ({stmt.subject!r}, {stmt.access.value}, {stmt.resource!r}, "
                f"{stmt.permission.value}) is declared more than once",
            ))
            continue
        seen_statements.add(full)
        previous = seen_interactions.get(interaction)
        if previous is not None and previous is not stmt.permission:
            if interaction not in reported_conflicts:
                errors.append(ModelError(
                    "ConflictingPermission", where,
                    f"({stmt.subject!r}, {stmt.access.value}, {stmt.resource!r}) is "
                    "both allowed and denied",
                ))
                reported_conflicts.add(interaction)
            continue
        seen_interactions[interaction] = stmt.permission

    refined = {ref.parent for ref in graph.refinements}
    owning = {stmt.requirement for stmt in graph.policy}
    for node in by_name.values():
        if (node.kind is GoalKind.REQUIREMENT
                and node.name not in owning
                and node.name not in refined):
            errors.append(ModelError(
                "RequirementWithoutPolicy", node.name,
                f"requirement {node.name!r} owns no policy statement",
                severity="warning",
            ))

    return errors


def lookup_statement(
    graph: GoalGraph,
    subject: str,
    access: AccessNeed,
    resource: str,
    permission: Permission,
) -> PolicyStatement | None:
    """The unique statement matching all four fields exactly, or None."""
    for stmt in graph.policy:
        if (stmt.subject == subject and stmt.access is access
                and stmt.resource == resource and stmt.permission is permission):
            return stmt
    return None


def trace(graph: GoalGraph, statement: PolicyStatement) -> list[list[str]]:
    """Refinement paths from the statement's requirement up to every root.

    Each path starts with the owning requirement and follows child to
    parent edges depth first, visiting parents in document order.  A
    requirement that is refined from nothing yields a single one-element
    path.
    """
    parents: dict[str, list[str]] = {}
    for ref in graph.refinements:
        parents.setdefault(ref.child, []).append(ref.parent)

    paths: list[list[str]] = []

    def walk(node: str, path: list[str]) -> None:
        ups = [p for p in parents.get(node, ()) if p not in path]
        if not ups:
            paths.append(list(path))
            return
        for parent in ups:
            path.append(parent)
            walk(parent, path)
            path.pop()

    walk(statement.requirement, [statement.requirement])
    return paths
