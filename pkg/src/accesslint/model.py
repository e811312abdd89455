"""Core asset-model types and structural checks.

An asset model describes what a system under design is made of: assets
typed as system, information, or people, each carrying qualitative
confidentiality and integrity levels, plus associations whose ends may
be adorned with the access needs (read, write, interact) one asset has
upon the other.  Which asset kinds may act as subjects on which resource
kinds is governed by an access-rule matrix.

Everything here is immutable once constructed; the checks are pure
functions that return error lists rather than raising.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum, IntEnum
from typing import Mapping


class SecurityValue(IntEnum):
    """Qualitative security level, totally ordered NONE < LOW < MEDIUM < HIGH."""

    NONE = 0
    LOW = 1
    MEDIUM = 2
    HIGH = 3


def compare_levels(a: SecurityValue, b: SecurityValue) -> int:
    """Three-way comparison of two levels: -1, 0, or +1 as a is below, equal to, or above b."""
    return (a > b) - (a < b)


class AssetKind(Enum):
    SYSTEM = "system"
    INFORMATION = "information"
    PEOPLE = "people"


class AccessNeed(Enum):
    READ = "read"
    WRITE = "write"
    INTERACT = "interact"


# Canonical ordering of needs wherever a deterministic sequence is required.
ACCESS_ORDER: Mapping[AccessNeed, int] = {
    AccessNeed.READ: 0,
    AccessNeed.WRITE: 1,
    AccessNeed.INTERACT: 2,
}

# Multiplicity strings accepted on association ends (documentation only).
MULTIPLICITIES = ("1", "0..1", "1..*", "*")


@dataclass(frozen=True)
class Asset:
    """A named thing of value: a system, some information, or people.

    Confidentiality and integrity drive the rule checks; any further
    qualitative properties (availability, say) are stored under
    extra_properties and carried through untouched.  parent names
    another asset of the same kind for inheritance expansion.
    """

    name: str
    kind: AssetKind
    confidentiality: SecurityValue = SecurityValue.NONE
    integrity: SecurityValue = SecurityValue.NONE
    extra_properties: Mapping[str, SecurityValue] = field(default_factory=dict)
    parent: str | None = None


@dataclass(frozen=True)
class Association:
    """A link between two assets with per-end access-need sets.

    source_needs are the needs the source asset has upon the target;
    target_needs the reverse.  An empty set means no access is needed
    from that end.  Multiplicities are retained for diagram fidelity and
    play no part in validation.
    """

    source: str
    target: str
    source_needs: frozenset[AccessNeed] = frozenset()
    target_needs: frozenset[AccessNeed] = frozenset()
    source_multiplicity: str | None = None
    target_multiplicity: str | None = None


@dataclass(frozen=True)
class AccessRuleMatrix:
    """Which subject kinds may hold access needs upon which resource kinds."""

    allowed: Mapping[tuple[AssetKind, AssetKind], bool]

    def allows(self, subject: AssetKind, resource: AssetKind) -> bool:
        return self.allowed[(subject, resource)]


def default_matrix() -> AccessRuleMatrix:
    """Built-in access-rule matrix.

    People may access anything; system and information assets may access
    system and information assets but never people.  Individual cells can
    be overridden per model document.
    """
    allowed = {}
    for subject in AssetKind:
        for resource in AssetKind:
            allowed[(subject, resource)] = (
                subject is AssetKind.PEOPLE or resource is not AssetKind.PEOPLE
            )
    return AccessRuleMatrix(allowed)


@dataclass(frozen=True)
class AssetModel:
    assets: tuple[Asset, ...] = ()
    associations: tuple[Association, ...] = ()
    matrix: AccessRuleMatrix = field(default_factory=default_matrix)

    def asset_named(self, name: str) -> Asset | None:
        for asset in self.assets:
            if asset.name == name:
                return asset
        return None


@dataclass(frozen=True)
class ModelError:
    """A structural finding: which rule was violated, by which element.

    severity "error" findings make a model invalid; "warning" findings
    flag suspicious but legal structure.
    """

    code: str
    where: str
    message: str
    severity: str = "error"

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


def _inheritance_cycles(assets: tuple[Asset, ...]) -> list[list[str]]:
    """Cycles in the parent graph, one list of member names per cycle."""
    parent = {a.name: a.parent for a in assets}
    order = {a.name: i for i, a in enumerate(assets)}
    cycles: list[list[str]] = []
    claimed: set[str] = set()
    for asset in assets:
        if asset.name in claimed:
            continue
        seen: list[str] = []
        current: str | None = asset.name
        while current is not None and current in parent and current not in seen:
            seen.append(current)
            current = parent[current]
        if current is not None and current in seen:
            members = seen[seen.index(current):]
            if not claimed.intersection(members):
                cycles.append(sorted(members, key=order.__getitem__))
                claimed.update(members)
    return cycles


def check_structure(model: AssetModel) -> list[ModelError]:
    """Check every asset-model invariant; an empty result means the model is sound.

    Findings come out in document order so identical inputs always yield
    identical error lists.
    """
    errors: list[ModelError] = []
    by_name: dict[str, Asset] = {}

    for asset in model.assets:
        if not asset.name:
            errors.append(ModelError(
                "EmptyAssetName", "<unnamed asset>",
                "asset has an empty name",
            ))
            continue
        if asset.name in by_name:
            errors.append(ModelError(
                "DuplicateAssetName", asset.name,
                f"asset name {asset.name!r} is declared more than once",
            ))
            continue
        by_name[asset.name] = asset

    for asset in model.assets:
        if asset.parent is None or asset.name not in by_name:
            continue
        parent = by_name.get(asset.parent)
        if parent is None:
            errors.append(ModelError(
                "UnknownParent", asset.name,
                f"asset {asset.name!r} names unknown parent {asset.parent!r}",
            ))
        elif parent.kind is not asset.kind:
            errors.append(ModelError(
                "ParentKindMismatch", asset.name,
                f"asset {asset.name!r} ({asset.kind.value}) cannot inherit from "
                f"{parent.name!r} ({parent.kind.value})",
            ))

    for members in _inheritance_cycles(model.assets):
        errors.append(ModelError(
            "CyclicInheritance", members[0],
            "inheritance cycle: " + " -> ".join(members + [members[0]]),
        ))

    seen_pairs: set[frozenset[str]] = set()
    for index, assoc in enumerate(model.associations):
        where = f"association {assoc.source!r} - {assoc.target!r}"
        resolved = True
        for endpoint in (assoc.source, assoc.target):
            if endpoint not in by_name:
                errors.append(ModelError(
                    "UnknownAsset", where,
                    f"association end references unknown asset {endpoint!r}",
                ))
                resolved = False
        if assoc.source == assoc.target:
            errors.append(ModelError(
                "SelfAssociation", where,
                f"asset {assoc.source!r} cannot be associated with itself",
            ))
            continue
        pair = frozenset((assoc.source, assoc.target))
        if pair in seen_pairs:
            errors.append(ModelError(
                "DuplicateAssociation", where,
                f"more than one association between {assoc.source!r} and {assoc.target!r}",
            ))
            continue
        seen_pairs.add(pair)
        if not resolved:
            continue
        for subject, resource, needs in (
            (assoc.source, assoc.target, assoc.source_needs),
            (assoc.target, assoc.source, assoc.target_needs),
        ):
            if not needs:
                continue
            subject_kind = by_name[subject].kind
            resource_kind = by_name[resource].kind
            if not model.matrix.allows(subject_kind, resource_kind):
                errors.append(ModelError(
                    "MatrixViolation", where,
                    f"{subject_kind.value} asset {subject!r} may not hold access "
                    f"needs upon {resource_kind.value} asset {resource!r}",
                ))

    return errors
