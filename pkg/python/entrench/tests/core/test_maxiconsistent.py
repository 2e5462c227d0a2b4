import unittest

import numpy as np
import pytest

from entrench.core._private.harness.random_relations import random_frame
from entrench.core._private.logic.formula import parse_class
from entrench.core._private.logic.semantics import (
    AtomUniverse, Theory, class_algebra)
from entrench.core._private.maxiconsistent import (
    bases, coherent_set, conditionalize, credulous_infers, extension_counts,
    extensions, inference_matrix, infers, max_bases, sceptical, weak_bases,
    weak_max_bases)
from entrench.core._private.relation.entrenchment import dominance
from entrench.core._private.relation.profiles import entrenchment_profile

PQ = AtomUniverse.of("p", "q")


@pytest.mark.parametrize("weak", [False, True])
def test_dominance_collapses_to_entailment(weak):
    rel = dominance(PQ)
    assert np.array_equal(inference_matrix(rel, weak),
                          class_algebra(PQ).entails)


@pytest.mark.parametrize("seed", range(4))
def test_sceptical_within_credulous(seed):
    rel = random_frame(seed, 2, 4, entrenchment_profile("base"))
    for weak in (False, True):
        # without extensions the sceptical answer is everything and the
        # credulous one nothing
        has_extensions = extension_counts(rel, weak) > 0
        sceptical_m = inference_matrix(rel, weak)
        credulous_m = inference_matrix(rel, weak, credulous=True)
        assert not (sceptical_m & ~credulous_m)[has_extensions].any()
        assert sceptical_m[~has_extensions].all()
        assert not credulous_m[~has_extensions].any()
        assert not sceptical_m.flags.writeable


@pytest.mark.parametrize("seed", range(4))
def test_maximal_bases_are_bases(seed):
    rel = random_frame(seed, 2, 4, entrenchment_profile("bcr"))
    for a in PQ.classes():
        assert set(max_bases(rel, a)) <= set(bases(rel, a))
        assert set(weak_max_bases(rel, a)) <= set(weak_bases(rel, a))
        coherent = coherent_set(rel, a)
        for u in bases(rel, a):
            assert all(d in coherent for d in u.consequences())


class DominanceTest(unittest.TestCase):
    def setUp(self):
        self.rel = dominance(PQ)
        self.p = PQ.atom("p")

    def testCoherentSet(self):
        coherent = coherent_set(self.rel, self.p)
        # everything consistent with p
        self.assertEqual(len(coherent), 12)
        self.assertNotIn(~self.p, coherent)
        self.assertTrue(coherent_set(self.rel, PQ.bottom()).is_empty())

    def testExtensionsOfAnAtom(self):
        found = extensions(self.rel, self.p)
        self.assertEqual(found.generators(), [0b0010, 0b1000])
        self.assertEqual(sceptical(self.rel, self.p), Theory(self.p))
        self.assertTrue(infers(self.rel, self.p, self.p | PQ.atom("q")))
        self.assertFalse(infers(self.rel, self.p, PQ.atom("q")))
        self.assertTrue(credulous_infers(self.rel, self.p, PQ.atom("q")))

    def testInconsistentPremise(self):
        bottom = PQ.bottom()
        self.assertTrue(extensions(self.rel, bottom).is_empty())
        self.assertFalse(sceptical(self.rel, bottom).is_consistent())
        self.assertTrue(infers(self.rel, bottom, self.p))
        self.assertFalse(credulous_infers(self.rel, bottom, self.p))

    def testExtensionCounts(self):
        counts = extension_counts(self.rel)
        self.assertEqual(int(counts[PQ.full_mask]), 4)
        self.assertEqual(int(counts[0]), 0)
        self.assertEqual(int(counts[self.p.mask]), 2)

    def testConditionalization(self):
        # Cn(true) and Cn(p) share their p-conditionalization
        top = PQ.top()
        self.assertEqual(conditionalize(Theory(top), self.p), {top})
        self.assertEqual(conditionalize(Theory(self.p), self.p), {top})
        q = PQ.atom("q")
        self.assertEqual(conditionalize(Theory(q), self.p),
                         {self.p.implies(d) for d in Theory(q).consequences()})


class PenguinTest(unittest.TestCase):
    def testCoherentSetOfPenguins(self):
        from entrench.core._private.harness.demos import (
            FIGURE1_PATH, minimal_coherent)
        from entrench.core._private.harness.theory_file import (
            load_theory, theory_relation)
        theory = load_theory(FIGURE1_PATH)
        rel = theory_relation(theory)
        p = parse_class("p", theory.atoms)
        self.assertEqual(len(coherent_set(rel, p)), 208)
        self.assertEqual(
            [c.mask for c in minimal_coherent(rel, p)],
            [22, 24, 36, 40, 66, 72, 97, 129, 130, 132, 136])
        self.assertEqual(extensions(rel, p).generators(),
                         [2, 8, 32, 40, 128, 130, 136])
        self.assertEqual(sceptical(rel, p).generator, p)
        b = parse_class("b", theory.atoms)
        self.assertEqual(extensions(rel, b).generators(), [4, 8, 64, 128])
        not_f = parse_class("~f", theory.atoms)
        self.assertFalse(infers(rel, p, not_f))
        self.assertTrue(credulous_infers(rel, p, not_f))


class CompetingStatementsTest(unittest.TestCase):
    def testSkepticalAndCredulous(self):
        from entrench.core._private.harness.demos import (
            MULTIPLE_EXTENSIONS_PATH)
        from entrench.core._private.harness.theory_file import (
            load_theory, theory_relation)
        theory = load_theory(MULTIPLE_EXTENSIONS_PATH)
        rel = theory_relation(theory)
        top = theory.atoms.top()
        self.assertEqual(len(extensions(rel, top)), 4)
        for atom in ("p", "q"):
            c = parse_class(atom, theory.atoms)
            self.assertFalse(infers(rel, top, c))
            self.assertTrue(credulous_infers(rel, top, c))


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main(["-v", __file__]))
