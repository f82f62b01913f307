"""Axiom checking, random distribution generation and the fuzz harness."""

import json

import numpy as np
import pytest

from possind import (
    AXIOMS,
    Counterexample,
    FuzzConfig,
    IndependenceRelation,
    LukasiewiczLike,
    Min,
    ProductLike,
    RelationKind,
    TooLarge,
    Triplet,
    build_space,
    check_axiom,
    enumerate_relation,
    enumerate_triplets,
    fuzz_properties,
    is_graphoid,
    is_semigraphoid,
    make_distribution,
    random_distribution,
)

from conftest import SPACE3


def relation(*triplets):
    return IndependenceRelation(SPACE3, frozenset(triplets))


def symmetric_closure(*triplets):
    members = set(triplets)
    members.update(Triplet(t.b, t.a, t.c) for t in triplets)
    return IndependenceRelation(SPACE3, frozenset(members))


class TestAxioms:
    def test_empty_relation_satisfies_everything(self):
        report = is_graphoid(relation())
        assert report.holds and not report.counterexamples

    def test_full_relation_satisfies_everything(self):
        full = IndependenceRelation(SPACE3, frozenset(enumerate_triplets(SPACE3)))
        assert is_graphoid(full).holds

    def test_symmetry_violation_reported(self):
        rel = relation(Triplet.of("X1", "X2", ()))
        report = check_axiom(rel, "symmetry")
        assert not report.holds
        assert report.counterexamples == (
            Counterexample(
                "symmetry",
                (Triplet.of("X1", "X2", ()),),
                Triplet.of("X2", "X1", ()),
            ),
        )

    def test_decomposition_requires_every_nonempty_sub_block(self):
        premise = Triplet.of("X1", ("X2", "X3"), ())
        report = check_axiom(relation(premise), "decomposition")
        missing = {cx.conclusion for cx in report.counterexamples}
        assert missing == {Triplet.of("X1", "X2", ()), Triplet.of("X1", "X3", ())}
        fixed = relation(premise, *missing)
        assert check_axiom(fixed, "decomposition").holds

    def test_weak_union_moves_the_complement_into_the_condition(self):
        premise = Triplet.of("X1", ("X2", "X3"), ())
        report = check_axiom(relation(premise), "weak_union")
        missing = {cx.conclusion for cx in report.counterexamples}
        assert missing == {Triplet.of("X1", "X2", "X3"), Triplet.of("X1", "X3", "X2")}

    def test_contraction_joins_compatible_premises(self):
        t1 = Triplet.of("X1", "X2", ())
        t2 = Triplet.of("X1", "X3", "X2")
        report = check_axiom(relation(t1, t2), "contraction")
        assert [cx.conclusion for cx in report.counterexamples] == [
            Triplet.of("X1", ("X2", "X3"), ())
        ]
        assert report.counterexamples[0].premises == (t1, t2)

    def test_intersection_on_two_peak_min_relation(self, two_peak):
        rel = enumerate_relation(two_peak, Min(), RelationKind.NON_INTERACTIVITY)
        report = check_axiom(rel, "intersection")
        assert not report.holds
        expected = Counterexample(
            "intersection",
            (Triplet.of("X1", "X2", "X3"), Triplet.of("X1", "X3", "X2")),
            Triplet.of("X1", ("X2", "X3"), ()),
        )
        assert expected in report.counterexamples

    def test_axiom_verdict_matches_counterexample_emptiness(self):
        rel = symmetric_closure(Triplet.of("X1", ("X2", "X3"), ()))
        for axiom in AXIOMS:
            report = check_axiom(rel, axiom)
            assert report.verdicts[axiom] == (not report.counterexamples)

    def test_unknown_axiom_rejected(self):
        with pytest.raises(ValueError):
            check_axiom(relation(), "transitivity")


class TestLevels:
    def test_two_peak_noninteractivity_is_semigraphoid_only(self, two_peak):
        for conj in (ProductLike(), Min()):
            rel = enumerate_relation(two_peak, conj, RelationKind.NON_INTERACTIVITY)
            assert is_semigraphoid(rel).holds
            report = is_graphoid(rel)
            assert not report.holds
            assert report.failing() == ("intersection",)

    def test_semigraphoid_checks_exactly_four_axioms(self):
        report = is_semigraphoid(relation())
        assert set(report.verdicts) == {
            "symmetry",
            "decomposition",
            "weak_union",
            "contraction",
        }

    def test_graphoid_checks_all_five(self):
        assert set(is_graphoid(relation()).verdicts) == set(AXIOMS)


class TestRandomDistribution:
    def test_deterministic_and_normalised(self):
        d1 = random_distribution(SPACE3, seed=7)
        d2 = random_distribution(SPACE3, seed=7)
        assert np.array_equal(d1.table, d2.table)
        assert d1.normalised

    def test_values_stay_on_grid(self):
        dist = random_distribution(SPACE3, grid=4, seed=3)
        assert set(np.unique(dist.table * 4)) <= {0.0, 1.0, 2.0, 3.0, 4.0}

    def test_strictly_positive_has_no_zeros(self):
        for seed in range(10):
            dist = random_distribution(SPACE3, strictly_positive=True, seed=seed)
            assert np.all(dist.table > 0)

    def test_different_seeds_differ(self):
        assert not np.array_equal(
            random_distribution(SPACE3, seed=0).table,
            random_distribution(SPACE3, seed=1).table,
        )

    def test_invalid_grid_rejected(self):
        with pytest.raises(ValueError):
            random_distribution(SPACE3, grid=0)


class TestFuzz:
    def test_clean_run_under_min_and_product(self):
        config = FuzzConfig(trials=40, seed=1234, conjunctions=(Min(), ProductLike()))
        report = fuzz_properties(config)
        assert report.ok
        assert report.trials_run == 40
        assert report.relations_checked == 40 * 4

    def test_two_peak_injection_mines_the_intersection_gap(self, two_peak):
        config = FuzzConfig(trials=0, conjunctions=(Min(),), inject=(two_peak,))
        report = fuzz_properties(config)
        assert report.ok
        expected = Counterexample(
            "intersection",
            (Triplet.of("X1", "X2", "X3"), Triplet.of("X1", "X3", "X2")),
            Triplet.of("X1", ("X2", "X3"), ()),
        )
        assert any(
            m.trial == 0 and m.conjunction == "min" and m.counterexample == expected
            for m in report.mined
        )

    def test_lukasiewicz_divergence_is_reported_with_reproducer(self, tmp_path):
        # single fully-possible atom: no-interactivity strictly exceeds
        # independence under the clamped conjunction, which the harness
        # must flag as a violated equivalence claim
        atom = make_distribution(
            SPACE3, SPACE3.names, [({"X1": "0", "X2": "0", "X3": "0"}, 1.0)]
        )
        config = FuzzConfig(
            trials=0,
            conjunctions=(LukasiewiczLike(),),
            inject=(atom,),
            reproducer_dir=tmp_path,
        )
        report = fuzz_properties(config)
        assert not report.ok
        failure = report.failures[0]
        assert "coincide" in failure.prop
        assert failure.conjunction == "luka"
        doc = json.loads((tmp_path / failure.path.split("/")[-1]).read_text())
        assert doc["conjunction"] == "luka"
        assert doc["seed"] is None
        assert doc["variables"] == [
            {"name": n, "frame": ["0", "1"]} for n in ("X1", "X2", "X3")
        ]
        assert doc["values"] == [
            {"assignment": {"X1": "0", "X2": "0", "X3": "0"}, "possibility": 1.0}
        ]

    def test_deterministic_for_fixed_seed(self):
        config = FuzzConfig(trials=25, seed=77, conjunctions=(ProductLike(),))
        r1 = fuzz_properties(config)
        r2 = fuzz_properties(config)
        assert [m for m in r1.mined] == [m for m in r2.mined]
        assert r1.relations_checked == r2.relations_checked

    def test_guard_rejects_huge_spaces(self):
        with pytest.raises(TooLarge):
            fuzz_properties(FuzzConfig(trials=1, variables=9))

    def test_four_variable_run(self):
        config = FuzzConfig(
            trials=3, variables=4, seed=5, conjunctions=(Min(),)
        )
        report = fuzz_properties(config)
        assert report.ok
        assert report.trials_run == 3


def test_module_also_exposes_triplet_machinery():
    # relation containers and triplet enumeration are reachable from here too
    from possind import graphoid

    assert graphoid.enumerate_triplets is enumerate_triplets
    assert graphoid.IndependenceRelation is IndependenceRelation
    assert graphoid.triplet_count(3) == 18
