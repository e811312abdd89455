"""Access validation: need expansion, policy resolution, and rule checks.

Every association end with needs is expanded into single-need triples
(subject, access, resource).  Each triple then resolves against the
policy in exactly one way:

* an allow statement matches: the triple is legitimate, but its
  confidentiality and integrity levels are checked against four lattice
  rules (below);
* a deny statement matches: the access is explicitly forbidden, so an
  unauthorised_access warning is raised;
* nothing matches: the policy is silent about a modelled need, so an
  undefined_access warning is raised for stakeholders to resolve.

The four lattice rules on allowed triples compare subject and resource
levels.  On confidentiality: reading a resource rated above the subject
is a potential read-up; writing one rated below is a potential
write-down.  On integrity: writing a resource rated above the subject
is a potential write-up; reading one rated below is a potential
read-down.  Interact needs never participate in level checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .goals import GoalGraph, Permission, lookup_statement
from .model import ACCESS_ORDER, AccessNeed, Asset, AssetModel, Association


class WarningKind(Enum):
    UNDEFINED_ACCESS = "undefined_access"
    UNAUTHORISED_ACCESS = "unauthorised_access"
    NO_READ_UP = "no_read_up"
    NO_WRITE_DOWN = "no_write_down"
    NO_WRITE_UP = "no_write_up"
    NO_READ_DOWN = "no_read_down"


@dataclass(frozen=True)
class AccessTriple:
    """A single-need access requirement of subject upon resource."""

    subject: str
    access: AccessNeed
    resource: str

    def __str__(self) -> str:
        return f"{self.subject} --{self.access.value}--> {self.resource}"


_MESSAGE_PREFIX = {
    WarningKind.UNDEFINED_ACCESS: "Undefined access",
    WarningKind.UNAUTHORISED_ACCESS: "Unauthorised access",
    WarningKind.NO_READ_UP: "Potential no read-up violation",
    WarningKind.NO_WRITE_DOWN: "Potential no write-down violation",
    WarningKind.NO_WRITE_UP: "Potential no write-up violation",
    WarningKind.NO_READ_DOWN: "Potential no read-down violation",
}


@dataclass(frozen=True)
class AccessWarning:
    kind: WarningKind
    triple: AccessTriple
    message: str


# Summary rule labels, in report order, with the warning kind each one counts.
RULE_RESULTS: tuple[tuple[str, str, WarningKind], ...] = (
    ("simpleSecurity", "Simple Security Property", WarningKind.NO_READ_UP),
    ("starProperty", "*-Property", WarningKind.NO_WRITE_DOWN),
    ("simpleIntegrity", "Simple Integrity Property", WarningKind.NO_WRITE_UP),
    ("integrityStar", "Integrity *-Property", WarningKind.NO_READ_DOWN),
    ("absentPolicies", "Absent policies", WarningKind.UNDEFINED_ACCESS),
)


@dataclass(frozen=True)
class ValidationReport:
    warnings: tuple[AccessWarning, ...] = ()

    @property
    def summary(self) -> dict[WarningKind, int]:
        counts = {kind: 0 for kind in WarningKind}
        for warning in self.warnings:
            counts[warning.kind] += 1
        return counts

    @property
    def rule_results(self) -> dict[str, bool]:
        counts = self.summary
        return {key: counts[kind] > 0 for key, _, kind in RULE_RESULTS}


def expand_needs(model: AssetModel) -> list[AccessTriple]:
    """Break every adorned association end into single-need triples.

    Output is sorted by subject name, then resource name, then
    read < write < interact, so repeated runs enumerate identically.
    """
    triples: list[AccessTriple] = []
    for assoc in model.associations:
        for need in assoc.source_needs:
            triples.append(AccessTriple(assoc.source, need, assoc.target))
        for need in assoc.target_needs:
            triples.append(AccessTriple(assoc.target, need, assoc.source))
    triples.sort(key=lambda t: (t.subject, t.resource, ACCESS_ORDER[t.access]))
    return triples


def _ancestors(name: str, parent: dict[str, str | None]) -> list[str]:
    chain: list[str] = []
    seen = {name}
    current = parent.get(name)
    while current is not None and current not in seen:
        chain.append(current)
        seen.add(current)
        current = parent.get(current)
    return chain


def expand_hierarchy(model: AssetModel) -> AssetModel:
    """Copy each ancestor's subject-side needs down to its descendants.

    With a chain A <- B <- C where A reads R, the result lets B and C
    read R as well.  Needs held *upon* an ancestor are not inherited,
    and a need can never be copied onto the descendant itself.  The
    input model is left untouched.
    """
    parent = {a.name: a.parent for a in model.assets}
    doc_order = {a.name: i for i, a in enumerate(model.assets)}

    subject_needs: dict[str, dict[str, set[AccessNeed]]] = {}
    for assoc in model.associations:
        if assoc.source_needs:
            subject_needs.setdefault(assoc.source, {}).setdefault(
                assoc.target, set()).update(assoc.source_needs)
        if assoc.target_needs:
            subject_needs.setdefault(assoc.target, {}).setdefault(
                assoc.source, set()).update(assoc.target_needs)

    additions: dict[str, dict[str, set[AccessNeed]]] = {}
    for asset in model.assets:
        inherited: dict[str, set[AccessNeed]] = {}
        for ancestor in _ancestors(asset.name, parent):
            for resource, needs in subject_needs.get(ancestor, {}).items():
                if resource == asset.name:
                    continue
                inherited.setdefault(resource, set()).update(needs)
        if inherited:
            additions[asset.name] = inherited

    associations: list[Association] = []
    for assoc in model.associations:
        extra_source = additions.get(assoc.source, {}).pop(assoc.target, set())
        extra_target = additions.get(assoc.target, {}).pop(assoc.source, set())
        if extra_source or extra_target:
            assoc = Association(
                source=assoc.source,
                target=assoc.target,
                source_needs=assoc.source_needs | extra_source,
                target_needs=assoc.target_needs | extra_target,
                source_multiplicity=assoc.source_multiplicity,
                target_multiplicity=assoc.target_multiplicity,
            )
        associations.append(assoc)

    for subject in sorted(additions, key=doc_order.__getitem__):
        for resource in sorted(additions[subject], key=doc_order.__getitem__):
            needs = additions[subject][resource]
            if needs:
                associations.append(Association(
                    source=subject,
                    target=resource,
                    source_needs=frozenset(needs),
                ))

    return AssetModel(
        assets=model.assets,
        associations=tuple(associations),
        matrix=model.matrix,
    )


def _warning(kind: WarningKind, triple: AccessTriple) -> AccessWarning:
    return AccessWarning(kind, triple, f"{_MESSAGE_PREFIX[kind]}: {triple}")


def validate_access(model: AssetModel, graph: GoalGraph) -> ValidationReport:
    """Resolve every expanded need against the policy and the lattice rules.

    Warnings come out in expansion order; an allowed triple can raise up
    to two level warnings (one confidentiality, one integrity), checked
    in the order read-up, write-down, write-up, read-down.
    """
    assets: dict[str, Asset] = {a.name: a for a in model.assets}
    warnings: list[AccessWarning] = []

    for triple in expand_needs(model):
        allowed = lookup_statement(
            graph, triple.subject, triple.access, triple.resource, Permission.ALLOW)
        if allowed is not None:
            subject = assets[triple.subject]
            resource = assets[triple.resource]
            if (resource.confidentiality > subject.confidentiality
                    and triple.access is AccessNeed.READ):
                warnings.append(_warning(WarningKind.NO_READ_UP, triple))
            if (subject.confidentiality > resource.confidentiality
                    and triple.access is AccessNeed.WRITE):
                warnings.append(_warning(WarningKind.NO_WRITE_DOWN, triple))
            if (resource.integrity > subject.integrity
                    and triple.access is AccessNeed.WRITE):
                warnings.append(_warning(WarningKind.NO_WRITE_UP, triple))
            if (subject.integrity > resource.integrity
                    and triple.access is AccessNeed.READ):
                warnings.append(_warning(WarningKind.NO_READ_DOWN, triple))
        elif lookup_statement(
                graph, triple.subject, triple.access, triple.resource,
                Permission.DENY) is not None:
            warnings.append(_warning(WarningKind.UNAUTHORISED_ACCESS, triple))
        else:
            warnings.append(_warning(WarningKind.UNDEFINED_ACCESS, triple))

    return ValidationReport(tuple(warnings))
