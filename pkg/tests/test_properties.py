"""Property tests over randomly generated models and graphs."""

from hypothesis import given, settings
from hypothesis import strategies as st

from accesslint.goals import (
    Goal,
    GoalGraph,
    GoalKind,
    Refinement,
    check_goal_structure,
    lookup_statement,
    trace,
)
from accesslint.model import check_structure
from accesslint.modelio import parse_model, render_report, serialize_model
from accesslint.validation import (
    WarningKind,
    expand_hierarchy,
    expand_needs,
    validate_access,
)

import rule_oracle
from strategies import asset_models, goal_graphs, models_with_graphs

LEVEL_KINDS = {
    WarningKind.NO_READ_UP,
    WarningKind.NO_WRITE_DOWN,
    WarningKind.NO_WRITE_UP,
    WarningKind.NO_READ_DOWN,
}


@given(models_with_graphs())
def test_generated_pairs_satisfy_all_invariants(pair):
    model, graph = pair
    assert check_structure(model) == []
    assert [f for f in check_goal_structure(graph, model)
            if f.severity == "error"] == []


@given(asset_models())
def test_expansion_length_is_total_need_count(model):
    expected = sum(len(a.source_needs) + len(a.target_needs)
                   for a in model.associations)
    assert len(expand_needs(model)) == expected


@given(asset_models())
def test_expansion_is_deterministic(model):
    assert expand_needs(model) == expand_needs(model)


@given(models_with_graphs())
def test_lookup_returns_the_unique_exact_match(pair):
    model, graph = pair
    for stmt in graph.policy:
        found = lookup_statement(
            graph, stmt.subject, stmt.access, stmt.resource, stmt.permission)
        assert found == stmt
        matches = [s for s in graph.policy
                   if (s.subject, s.access, s.resource, s.permission)
                   == (stmt.subject, stmt.access, stmt.resource, stmt.permission)]
        assert matches == [stmt]


@given(models_with_graphs())
def test_trace_paths_start_at_requirement_and_follow_edges(pair):
    _, graph = pair
    edges = {(r.child, r.parent) for r in graph.refinements}
    for stmt in graph.policy:
        for path in trace(graph, stmt):
            assert path[0] == stmt.requirement
            for child, parent in zip(path, path[1:]):
                assert (child, parent) in edges


@given(models_with_graphs())
def test_adding_a_cycle_makes_the_graph_invalid(pair):
    model, graph = pair
    if not graph.refinements:
        return
    # Close the loop: make the first child a parent of its own root.
    first = graph.refinements[0]
    mutated = GoalGraph(
        nodes=graph.nodes,
        refinements=graph.refinements + (Refinement(first.child, first.parent),),
        policy=graph.policy,
    )
    codes = [f.code for f in check_goal_structure(mutated, model)]
    assert "CyclicRefinement" in codes


@given(models_with_graphs())
def test_engine_matches_brute_force_oracle(pair):
    model, graph = pair
    report = validate_access(model, graph)
    got = [(w.kind.value, w.triple.subject, w.triple.access.value,
            w.triple.resource) for w in report.warnings]
    assert got == rule_oracle.validate(model, graph)


@given(models_with_graphs())
def test_every_triple_resolves_to_exactly_one_branch(pair):
    model, graph = pair
    report = validate_access(model, graph)
    triples = expand_needs(model)
    branch = {
        (t.subject, t.access.value, t.resource):
            rule_oracle.resolve(graph, t.subject, t.access.value, t.resource)
        for t in triples
    }
    counts = report.summary
    allow_matched = sum(1 for b in branch.values() if b == "allow")
    assert (counts[WarningKind.UNDEFINED_ACCESS]
            + counts[WarningKind.UNAUTHORISED_ACCESS]
            + allow_matched) == len(triples)
    for warning in report.warnings:
        key = (warning.triple.subject, warning.triple.access.value,
               warning.triple.resource)
        if warning.kind in LEVEL_KINDS:
            assert branch[key] == "allow"
        elif warning.kind is WarningKind.UNAUTHORISED_ACCESS:
            assert branch[key] == "deny"
        else:
            assert branch[key] == "absent"


@given(models_with_graphs())
def test_interact_needs_never_raise_level_warnings(pair):
    model, graph = pair
    for warning in validate_access(model, graph).warnings:
        if warning.kind in LEVEL_KINDS:
            assert warning.triple.access.value in ("read", "write")


@given(models_with_graphs())
def test_summary_and_rule_results_are_consistent(pair):
    model, graph = pair
    report = validate_access(model, graph)
    counts = {kind: 0 for kind in WarningKind}
    for warning in report.warnings:
        counts[warning.kind] += 1
    assert report.summary == counts
    flags = report.rule_results
    assert flags["simpleSecurity"] == (counts[WarningKind.NO_READ_UP] > 0)
    assert flags["starProperty"] == (counts[WarningKind.NO_WRITE_DOWN] > 0)
    assert flags["simpleIntegrity"] == (counts[WarningKind.NO_WRITE_UP] > 0)
    assert flags["integrityStar"] == (counts[WarningKind.NO_READ_DOWN] > 0)
    assert flags["absentPolicies"] == (counts[WarningKind.UNDEFINED_ACCESS] > 0)


@given(models_with_graphs())
def test_reports_render_identically_on_repeat_runs(pair):
    model, graph = pair
    first = validate_access(model, graph)
    second = validate_access(model, graph)
    assert render_report(first, "text") == render_report(second, "text")
    assert render_report(first, "json") == render_report(second, "json")


@given(models_with_graphs())
def test_round_trip_preserves_structure(pair):
    model, graph = pair
    again_model, again_graph = parse_model(serialize_model(model, graph))
    assert again_model == model
    assert again_graph == graph


@given(models_with_graphs())
def test_serialization_is_canonical(pair):
    model, graph = pair
    text = serialize_model(model, graph)
    assert serialize_model(*parse_model(text)) == text


@given(asset_models(with_parents=True))
def test_hierarchy_expansion_only_adds_triples(model):
    base = set(expand_needs(model))
    expanded = set(expand_needs(expand_hierarchy(model)))
    assert base <= expanded


@given(asset_models(with_parents=True))
def test_hierarchy_expansion_is_structurally_valid(model):
    assert check_structure(expand_hierarchy(model)) == []


@given(asset_models(with_parents=True))
def test_hierarchy_expansion_matches_ancestor_closure(model):
    parent = {a.name: a.parent for a in model.assets}
    base = set(expand_needs(model))
    expected = set(base)
    for asset in model.assets:
        ancestor = parent.get(asset.name)
        seen = {asset.name}
        while ancestor is not None and ancestor not in seen:
            seen.add(ancestor)
            for triple in base:
                if triple.subject == ancestor and triple.resource != asset.name:
                    expected.add(triple.__class__(
                        asset.name, triple.access, triple.resource))
            ancestor = parent.get(ancestor)
    assert set(expand_needs(expand_hierarchy(model))) == expected
