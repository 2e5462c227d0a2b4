import json
import unittest

import pytest

from entrench.core._private.errors import UnknownSuiteError
from entrench.core._private.harness.random_relations import (
    random_consequence, random_frame, sample_rng, universe_of)
from entrench.core._private.harness.suites import (
    describe_suite, list_suites, verify_suite)
from entrench.core._private.relation.entrenchment import dominance
from entrench.core._private.relation.profiles import (
    consequence_profile, entrenchment_profile)

ALL_SUITES = [
    "collapse", "lemma-conditionalization", "lemma-consistent-bases",
    "lemma-inconsistency", "lemma-inequalities", "lemma-weak-inequalities",
    "lemma-bases-and-weak-bases", "lemma-coherence", "lemma-weak-coherence",
    "lemma-ccf-to-weak", "thm-ccf-to-strong", "thm-soundness",
    "thm-weak-soundness", "cor-definition-equals-strong", "lemma-iso",
    "thm-disjunctive-soundness", "thm-completeness", "thm-weak-completeness",
    "lemma-weak-iso", "thm-completeness-preferential",
    "thm-completeness-strong-cumulative", "corollary-classes-NM",
    "corollary-classes-D", "corollary-classes-CM", "corollary-classes-C",
    "corollary-classes-SC", "corollary-classes-P",
]


def test_registry_order():
    assert list_suites() == ALL_SUITES
    assert describe_suite("corollary-classes-C") == "C is dual to d-BCR"


@pytest.mark.parametrize("name", ALL_SUITES)
def test_suite_passes(name):
    report = verify_suite(name, n_atoms=2, samples=3, seed=5)
    assert report.ok, report.render_text()
    assert report.checks > 0
    assert [r.index for r in report.results] == [0, 1, 2]


@pytest.mark.parametrize("name,seed", [
    ("thm-ccf-to-strong", 42),
    ("lemma-inconsistency", 7),
    ("corollary-classes-C", 11),
])
def test_reference_runs(name, seed):
    assert verify_suite(name, 2, 10, seed).ok


class RandomRelationsTest(unittest.TestCase):
    def testSameSeedSameRelation(self):
        profile = entrenchment_profile("tc")
        self.assertEqual(random_frame(3, 2, 5, profile),
                         random_frame(3, 2, 5, profile))
        nm = consequence_profile("c")
        self.assertEqual(random_consequence(3, 2, 5, nm),
                         random_consequence(3, 2, 5, nm))

    def testNoStatementsGivesDominance(self):
        rel = random_frame(0, 2, 0, entrenchment_profile("base"))
        self.assertTrue(rel.same_pairs(dominance(universe_of(2))))

    def testSampleStreams(self):
        first = sample_rng(1, 0).integers(0, 1 << 30, size=4)
        again = sample_rng(1, 0).integers(0, 1 << 30, size=4)
        other = sample_rng(1, 1).integers(0, 1 << 30, size=4)
        self.assertEqual(list(first), list(again))
        self.assertNotEqual(list(first), list(other))

    def testUniverseOf(self):
        self.assertEqual(universe_of(3).atoms, ("p", "q", "r"))
        with self.assertRaises(ValueError):
            universe_of(0)


class VerifySuiteTest(unittest.TestCase):
    def testUnknownSuite(self):
        with self.assertRaises(UnknownSuiteError):
            verify_suite("no-such-suite")
        # also a KeyError for plain callers
        with self.assertRaises(KeyError):
            describe_suite("no-such-suite")

    def testNegativeSamples(self):
        with self.assertRaises(ValueError):
            verify_suite("collapse", samples=-1)

    def testReportIsStable(self):
        first = verify_suite("lemma-coherence", 2, 4, 9).to_json()
        second = verify_suite("lemma-coherence", 2, 4, 9).to_json()
        self.assertEqual(first, second)
        parsed = json.loads(first)
        self.assertEqual(parsed["suite"], "lemma-coherence")
        self.assertEqual(parsed["failures"], [])
        self.assertEqual(len(parsed["statistics"]), 4)

    def testWorkersKeepSampleOrder(self):
        inline = verify_suite("thm-soundness", 2, 4, 3, workers=1)
        pooled = verify_suite("thm-soundness", 2, 4, 3, workers=3)
        self.assertEqual(inline.to_dict(), pooled.to_dict())

    def testRenderText(self):
        report = verify_suite("collapse", 2, 2, 0)
        text = report.render_text()
        self.assertTrue(text.startswith("Suite collapse: "))
        self.assertTrue(text.endswith("PASSED: 0 failure(s)\n"))

    def testZeroSamples(self):
        report = verify_suite("collapse", 2, 0, 0)
        self.assertTrue(report.ok)
        self.assertEqual(report.checks, 0)

    def testThreeAtoms(self):
        report = verify_suite("lemma-inconsistency", 3, 1, 2)
        self.assertTrue(report.ok, report.render_text())


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main(["-v", __file__]))
