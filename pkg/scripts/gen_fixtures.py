"""Regenerate the bundled fixture documents in canonical form.

Builds each document as plain data, round-trips it through the parser
and serializer, and writes the canonical bytes into the package data
directory.  Run from the repository root after changing fixture content.
"""

import json
import pathlib
import sys

sys.path.insert(0, "src")

from accesslint.modelio import parse_model, serialize_model  # noqa: E402

DATA = pathlib.Path("src/accesslint/data")

PYRAMID = {
    "version": 1,
    "assets": [
        {"name": "Data Item", "kind": "information",
         "confidentiality": "low", "integrity": "medium"},
        {"name": "Distribution Capability", "kind": "system",
         "confidentiality": "none", "integrity": "medium"},
        {"name": "Delivery Interaction", "kind": "system",
         "confidentiality": "low", "integrity": "medium"},
        {"name": "Delivery Item", "kind": "information",
         "confidentiality": "low", "integrity": "medium"},
        {"name": "Delivery Resource", "kind": "system",
         "confidentiality": "none", "integrity": "none"},
        {"name": "Formatting Rule", "kind": "information",
         "confidentiality": "none", "integrity": "medium"},
        {"name": "Participant", "kind": "people",
         "confidentiality": "none", "integrity": "low"},
    ],
    # The first six associations carry the policy-covered needs; the last
    # four (plus the read on Distribution Capability -> Delivery Item) are
    # needs with no policy statement, kept to exercise the undefined-access
    # branch.
    "associations": [
        {"source": "Participant", "target": "Delivery Interaction",
         "sourceNeeds": ["write"]},
        {"source": "Formatting Rule", "target": "Data Item",
         "sourceNeeds": ["read"]},
        {"source": "Delivery Interaction", "target": "Distribution Capability",
         "sourceNeeds": ["read"]},
        {"source": "Distribution Capability", "target": "Delivery Item",
         "sourceNeeds": ["read", "write"]},
        {"source": "Delivery Interaction", "target": "Data Item",
         "sourceNeeds": ["read"]},
        {"source": "Formatting Rule", "target": "Delivery Item",
         "sourceNeeds": ["write"]},
        {"source": "Delivery Interaction", "target": "Delivery Resource",
         "sourceNeeds": ["read", "write"]},
        {"source": "Participant", "target": "Distribution Capability",
         "sourceNeeds": ["interact"]},
        {"source": "Delivery Item", "target": "Delivery Resource",
         "sourceNeeds": ["write"]},
        {"source": "Formatting Rule", "target": "Delivery Resource",
         "sourceNeeds": ["read"]},
    ],
    "goals": [
        {"name": "Capture requirements for data distribution",
         "kind": "requirement",
         "definition": "Access control requirements for the data distribution "
                       "component are captured and maintained."},
        {"name": "Participant interaction", "kind": "requirement",
         "definition": "Participants can initiate delivery interactions to "
                       "exchange data."},
        {"name": "Data item provision", "kind": "requirement",
         "definition": "Participants can obtain the data items the component "
                       "distributes."},
        {"name": "Delivery format", "kind": "requirement",
         "definition": "Formatting rules determine how data items are presented "
                       "for delivery."},
        {"name": "Assess distribution capability", "kind": "requirement",
         "definition": "Delivery interactions establish whether the distribution "
                       "capability can satisfy them."},
        {"name": "Distribute data", "kind": "requirement",
         "definition": "The distribution capability produces delivery items for "
                       "distribution."},
        {"name": "Gather data", "kind": "requirement",
         "definition": "Delivery interactions collect the data items to be "
                       "distributed."},
        {"name": "Format data", "kind": "requirement",
         "definition": "Formatting rules produce delivery items in the agreed "
                       "delivery format."},
    ],
    "refinements": [
        {"parent": "Capture requirements for data distribution",
         "child": "Participant interaction"},
        {"parent": "Capture requirements for data distribution",
         "child": "Data item provision"},
        {"parent": "Capture requirements for data distribution",
         "child": "Delivery format"},
        {"parent": "Capture requirements for data distribution",
         "child": "Assess distribution capability"},
        {"parent": "Capture requirements for data distribution",
         "child": "Distribute data"},
        {"parent": "Capture requirements for data distribution",
         "child": "Gather data"},
        {"parent": "Capture requirements for data distribution",
         "child": "Format data"},
    ],
    "policy": [
        {"requirement": "Participant interaction", "subject": "Participant",
         "access": "write", "resource": "Delivery Interaction",
         "permission": "allow"},
        {"requirement": "Data item provision", "subject": "Participant",
         "access": "read", "resource": "Data Item", "permission": "allow"},
        {"requirement": "Delivery format", "subject": "Formatting Rule",
         "access": "read", "resource": "Data Item", "permission": "allow"},
        {"requirement": "Assess distribution capability",
         "subject": "Delivery Interaction", "access": "read",
         "resource": "Distribution Capability", "permission": "allow"},
        {"requirement": "Distribute data", "subject": "Distribution Capability",
         "access": "write", "resource": "Delivery Item", "permission": "allow"},
        {"requirement": "Gather data", "subject": "Delivery Interaction",
         "access": "read", "resource": "Data Item", "permission": "allow"},
        {"requirement": "Format data", "subject": "Formatting Rule",
         "access": "write", "resource": "Delivery Item", "permission": "allow"},
    ],
}

WORKS_DIARY = {
    "version": 1,
    "assets": [
        {"name": "Works Diary", "kind": "information"},
        {"name": "Diary Event", "kind": "information"},
    ],
    "associations": [
        {"source": "Works Diary", "target": "Diary Event",
         "sourceNeeds": ["read", "write"],
         "sourceMultiplicity": "1", "targetMultiplicity": "1..*"},
    ],
}


def write_canonical(name: str, document: dict) -> None:
    model, graph = parse_model(json.dumps(document))
    text = serialize_model(model, graph)
    # Canonical text must be a fixed point of parse + serialize.
    again = serialize_model(*parse_model(text))
    assert again == text, f"{name}: serialization is not canonical"
    (DATA / f"{name}.json").write_text(text, encoding="utf-8")
    print(f"wrote {name}.json ({len(text)} bytes)")


if __name__ == "__main__":
    write_canonical("pyramid", PYRAMID)
    write_canonical("works-diary", WORKS_DIARY)
