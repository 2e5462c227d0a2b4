import unittest

import hypothesis.strategies as st
import numpy as np
import pytest
import yaml
from hypothesis import given, settings

from entrench.core._private import constants
from entrench.core._private.cli_logger import cli_logger
from entrench.core._private.constants import ENTRENCH_PROFILES_ENV
from entrench.core._private.errors import (
    ProfileError, UniverseMismatchError, UnknownProfileError,
    UnknownRuleError)
from entrench.core._private.harness.random_relations import (
    random_frame, random_statements, sample_rng)
from entrench.core._private.logic.formula import parse_class
from entrench.core._private.logic.semantics import (
    AtomUniverse, SemanticClass, class_algebra)
from entrench.core._private.relation.consequence import (
    check_nm_properties, classical, close_consequence)
from entrench.core._private.relation.entrenchment import (
    check_entrenchment_properties, close_entrenchment, dominance)
from entrench.core._private.relation.entrenchment_rules import (
    ENTRENCHMENT_PROPERTIES)
from entrench.core._private.relation.horn import naive_closure
from entrench.core._private.relation.profiles import (
    NMProfile, RuleProfile, consequence_profile, entrenchment_profile,
    entrenchment_profile_of_rules)
from entrench.core._private.utils import load_presets

PQ = AtomUniverse.of("p", "q")

ENTRENCHMENT_PROFILES = ["base", "d-base", "wd-base", "bcr", "ba", "tc"]
CONSEQUENCE_PROFILES = ["nm", "c", "sc", "p"]


def _statements(seed, k=3):
    return random_statements(sample_rng(seed, 0), PQ, k)


def _as_pairs(statements):
    return [(a.mask, b.mask) for a, b in statements]


@pytest.mark.parametrize("profile", ENTRENCHMENT_PROFILES)
@pytest.mark.parametrize("seed", [1, 2])
def test_entrenchment_closure_matches_naive(profile, seed):
    statements = _statements(seed)
    rule_profile = entrenchment_profile(profile)
    rel = close_entrenchment(statements, rule_profile, PQ)
    expected = naive_closure(_as_pairs(statements), class_algebra(PQ),
                             rule_profile.properties)
    assert np.array_equal(rel.pairs, expected)
    assert rel.is_closed()


@pytest.mark.parametrize("profile", CONSEQUENCE_PROFILES)
@pytest.mark.parametrize("seed", [3, 4])
def test_consequence_closure_matches_naive(profile, seed):
    statements = _statements(seed)
    nm_profile = consequence_profile(profile)
    cons = close_consequence(statements, nm_profile, PQ)
    expected = naive_closure(_as_pairs(statements), class_algebra(PQ),
                             nm_profile.properties)
    assert np.array_equal(cons.pairs, expected)


@pytest.mark.parametrize("profile,derived", [
    ("base+WeakBoundedRightMonotonicity+WeakBoundedCut", "WeakEquivalence"),
    ("base+BoundedCut+BoundedRightMonotonicity", "Equivalence"),
    ("t", "RightMonotonicity"),
    ("base+RightMonotonicity+BoundedCut", "Transitivity"),
])
@pytest.mark.parametrize("seed", [1, 2, 3, 4, 5])
def test_derived_rules_hold_on_closed_frames(profile, derived, seed):
    rel = close_entrenchment(_statements(seed, k=4),
                             entrenchment_profile(profile), PQ)
    assert derived not in rel.profile
    report = rel.check([ENTRENCHMENT_PROPERTIES[derived]])
    assert report.holds(derived), report[derived].witness_text


@pytest.mark.parametrize("profile", ["bcr", "ba", "tc", "wd-tc"])
@pytest.mark.parametrize("seed", [7, 8, 9])
def test_intersection_of_closed_frames_is_closed(profile, seed):
    rule_profile = entrenchment_profile(profile)
    first = random_frame(seed, 2, 3, rule_profile)
    second = random_frame(seed + 100, 2, 3, rule_profile)
    both = first.intersection(second)
    assert both.profile == rule_profile
    assert both.is_closed()
    assert not (both.pairs & ~first.pairs).any()
    assert not (both.pairs & ~second.pairs).any()


@pytest.mark.parametrize("rule", [
    "WeakEquivalence", "Equivalence", "WeakBoundedCut",
    "WeakBoundedRightMonotonicity", "WeakAcyclicity", "Acyclicity",
    "WeakLeftDisjunction", "RightMonotonicity",
])
@pytest.mark.parametrize("seed", [1, 2, 3])
def test_single_rule_closure_matches_naive(rule, seed):
    statements = _statements(seed, k=4)
    rule_profile = entrenchment_profile_of_rules([rule])
    rel = close_entrenchment(statements, rule_profile, PQ)
    expected = naive_closure(_as_pairs(statements), class_algebra(PQ),
                             rule_profile.properties)
    assert np.array_equal(rel.pairs, expected)


@pytest.mark.parametrize("seed", [3, 4, 5])
def test_weak_transitivity_closure_matches_naive(seed, monkeypatch):
    monkeypatch.setattr(constants, "ENTRENCH_ENABLE_WEAK_TRANSITIVITY", True)
    statements = _statements(seed, k=4)
    nm_profile = consequence_profile("nm+WeakTransitivity")
    assert "WeakTransitivity" in nm_profile
    cons = close_consequence(statements, nm_profile, PQ)
    expected = naive_closure(_as_pairs(statements), class_algebra(PQ),
                             nm_profile.properties)
    assert np.array_equal(cons.pairs, expected)


pair_lists = st.lists(
    st.tuples(st.integers(0, PQ.full_mask), st.integers(0, PQ.full_mask)),
    max_size=3)


@given(pair_lists, pair_lists)
@settings(max_examples=25, deadline=None)
def test_closure_is_monotone(first, second):
    profile = entrenchment_profile("bcr")

    def close(pairs):
        return close_entrenchment(
            [(SemanticClass(PQ, a), SemanticClass(PQ, b)) for a, b in pairs],
            profile, PQ)

    small = close(first)
    large = close(first + second)
    assert not (small.pairs & ~large.pairs).any()
    # closing a closed relation adds nothing
    again = close(small.pair_list())
    assert again.same_pairs(small)


class EntrenchmentRelationTest(unittest.TestCase):
    def testDominanceIsEntailment(self):
        rel = dominance(PQ)
        self.assertTrue(np.array_equal(rel.pairs, class_algebra(PQ).entails))
        self.assertEqual(rel.pair_count, 81)
        p, q = PQ.atom("p"), PQ.atom("q")
        self.assertTrue(rel.holds(p & q, p))
        self.assertFalse(rel.holds(p, q))

    def testStatementsAreKept(self):
        p, q = PQ.atom("p"), PQ.atom("q")
        rel = close_entrenchment([(p, q)], entrenchment_profile("base"))
        self.assertTrue(rel.holds(p, q))
        # left monotonicity
        self.assertTrue(rel.holds(p & q, q))
        self.assertEqual(rel.source_statements, ((p, q),))

    def testEmptyStatementsNeedUniverse(self):
        with self.assertRaises(UniverseMismatchError):
            close_entrenchment([], RuleProfile(()))

    def testTransitivity(self):
        p, q = PQ.atom("p"), PQ.atom("q")
        statements = [(p, q), (q, ~p)]
        without = close_entrenchment(statements, entrenchment_profile("base"))
        with_t = close_entrenchment(statements, entrenchment_profile("t"))
        self.assertFalse(without.holds(p, ~p))
        self.assertTrue(with_t.holds(p, ~p))

    def testPropertiesOfDominance(self):
        report = check_entrenchment_properties(dominance(PQ))
        for name in ("Reflexivity", "LeftMonotonicity", "Dominance",
                     "Transitivity", "LeftDisjunction", "RightConjunction"):
            self.assertTrue(report.holds(name), name)
        connectivity = report["Connectivity"]
        self.assertFalse(connectivity.holds)
        self.assertEqual(set(connectivity.witness_text), {"alpha", "beta"})
        self.assertIn(connectivity, report.failures())

    def testWitnessIsAViolation(self):
        p, q = PQ.atom("p"), PQ.atom("q")
        rel = close_entrenchment([(p, q), (q, ~p)],
                                 entrenchment_profile("base"))
        report = check_entrenchment_properties(rel)
        transitivity = report["Transitivity"]
        self.assertFalse(transitivity.holds)
        rule = [prop for prop in entrenchment_profile("t").properties
                if prop.name == "Transitivity"][0]
        self.assertTrue(rule.is_violated_by(rel.pairs, rel.algebra,
                                            transitivity.witness))

    def testConjunctivenessWitness(self):
        rel = dominance(PQ)
        conjunctiveness = check_entrenchment_properties(rel)[
            "Conjunctiveness"]
        self.assertFalse(conjunctiveness.holds)
        self.assertEqual(set(conjunctiveness.witness_text),
                         {"alpha", "beta"})
        prop = ENTRENCHMENT_PROPERTIES["Conjunctiveness"]
        self.assertTrue(prop.is_violated_by(rel.pairs, rel.algebra,
                                            conjunctiveness.witness))
        # p and q are incomparable under entailment
        p, q = PQ.atom("p"), PQ.atom("q")
        self.assertTrue(prop.is_violated_by(rel.pairs, rel.algebra,
                                            (p.mask, q.mask)))

        # bottom on top of everything collapses the relation
        full = close_entrenchment([(PQ.top(), PQ.bottom())],
                                  entrenchment_profile("t"))
        self.assertTrue(full.pairs.all())
        self.assertTrue(full.check([prop]).holds("Conjunctiveness"))

    def testIntersection(self):
        p, q = PQ.atom("p"), PQ.atom("q")
        profile = entrenchment_profile("base")
        first = close_entrenchment([(p, q)], profile)
        second = close_entrenchment([(q, p)], profile)
        both = first.intersection(second)
        self.assertTrue(both.same_pairs(dominance(PQ)))

    def testToDict(self):
        rel = dominance(PQ)
        summary = rel.to_dict(summary=True)
        self.assertEqual(summary["relation"], "<=")
        self.assertEqual(summary["pair_count"], 81)
        self.assertNotIn("pairs", summary)
        self.assertEqual(len(rel.to_dict()["pairs"]), 81)


class ConsequenceRelationTest(unittest.TestCase):
    def testClassicalIsPreferential(self):
        report = check_nm_properties(classical(PQ))
        for name in ("Supraclassicality", "RightWeakening", "And", "Cut",
                     "CautiousMonotonicity", "Loop", "Or",
                     "RationalMonotonicity"):
            self.assertTrue(report.holds(name), name)
        self.assertEqual(report.failures(), [])

    def testCoreIsAlwaysIncluded(self):
        p, q = PQ.atom("p"), PQ.atom("q")
        cons = close_consequence([(p, q)], NMProfile(()))
        # right weakening and supraclassicality
        self.assertTrue(cons.holds(p, q | ~q))
        self.assertTrue(cons.holds(p & q, p))
        self.assertTrue(cons.holds(p, p & q))


class ProfileTest(unittest.TestCase):
    def testExpressionIsNormalized(self):
        self.assertEqual(entrenchment_profile("BASE + Right_Conjunction"),
                         entrenchment_profile("base+RightConjunction"))
        self.assertEqual(str(entrenchment_profile("base+transitivity")),
                         "base+transitivity")

    def testPresetInheritance(self):
        profile = entrenchment_profile("wd-tc")
        self.assertTrue(profile.includes(
            "Reflexivity", "LeftMonotonicity", "LogicalEquivalence",
            "Transitivity", "RightConjunction", "WeakLeftDisjunction"))
        self.assertNotIn("LeftDisjunction", profile)
        self.assertTrue(consequence_profile("p").includes(
            "Cut", "CautiousMonotonicity", "Or"))

    def testUnknownNames(self):
        with self.assertRaises(UnknownProfileError):
            entrenchment_profile("base+nothing")
        with self.assertRaises(UnknownProfileError):
            entrenchment_profile("base+")
        with self.assertRaises(UnknownRuleError):
            entrenchment_profile_of_rules(["Nothing"])

    def testCheckOnlyRulesCannotClose(self):
        with self.assertRaises(ProfileError):
            consequence_profile("nm+RationalMonotonicity")
        with self.assertRaises(ProfileError):
            entrenchment_profile("base+Connectivity")

    def testProvisionalRuleIsDisabled(self):
        with self.assertRaises(ProfileError):
            consequence_profile("nm+WeakTransitivity")

    def testWithRules(self):
        profile = entrenchment_profile("base").with_rules("Transitivity")
        self.assertEqual(profile, entrenchment_profile("t"))
        self.assertEqual(str(profile), "base+Transitivity")


def test_extra_presets(tmp_path):
    path = tmp_path / "presets.yaml"
    path.write_text(yaml.safe_dump({"entrenchment": {
        "mine": {"from": "tc", "rules": ["LeftDisjunction"]}}}))
    profile = entrenchment_profile("mine", str(path))
    assert profile == entrenchment_profile("d-tc")


def test_preset_cycle(tmp_path):
    path = tmp_path / "presets.yaml"
    path.write_text(yaml.safe_dump({"entrenchment": {
        "a": {"from": "b"}, "b": {"from": "a"}}}))
    with pytest.raises(ProfileError):
        load_presets(str(path))


@pytest.mark.parametrize("text", [
    "entrenchment:\n  bad:\n    rules: Transitivity\n",
    "entrenchment: [base]\n",
    "- just a list\n",
    "entrenchment: {bad: [\n",
])
def test_invalid_presets(tmp_path, text):
    path = tmp_path / "presets.yaml"
    path.write_text(text)
    with pytest.raises(ProfileError) as e:
        load_presets(str(path))
    assert str(e.value).startswith(str(path) + ": ")


def test_invalid_presets_message_is_short_unless_verbose(tmp_path,
                                                         monkeypatch):
    path = tmp_path / "presets.yaml"
    path.write_text(yaml.safe_dump({"entrenchment": {
        "bad": {"rules": "Transitivity"}}}))
    monkeypatch.setattr(cli_logger, "pretty", True)
    monkeypatch.setattr(cli_logger, "_verbosity_overriden", False)
    monkeypatch.setattr(cli_logger, "_verbosity", 0)
    with pytest.raises(ProfileError) as e:
        load_presets(str(path))
    assert "JSON schema validation error" in str(e.value)
    assert "\n" not in str(e.value)

    monkeypatch.setattr(cli_logger, "_verbosity", 1)
    with pytest.raises(ProfileError) as e:
        load_presets(str(path))
    assert "\n" in str(e.value)


def test_missing_presets_file(tmp_path, monkeypatch):
    missing = str(tmp_path / "nowhere.yaml")
    monkeypatch.setenv(ENTRENCH_PROFILES_ENV, missing)
    with pytest.raises(ProfileError) as e:
        load_presets()
    assert missing in str(e.value)


def test_profile_statement_parsing():
    a = parse_class("p -> q", PQ)
    rel = close_entrenchment([(a, PQ.atom("q"))],
                             entrenchment_profile("base"))
    assert rel.holds(a, PQ.atom("q"))


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main(["-v", __file__]))
