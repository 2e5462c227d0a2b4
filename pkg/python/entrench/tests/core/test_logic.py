import unittest

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from entrench.core._private.errors import (
    FormulaSyntaxError, UniverseMismatchError, UniverseTooLargeError,
    UnknownAtomError)
from entrench.core._private.logic.formula import (
    FALSE, TRUE, And, Atom, Implies, Not, Or, parse_class, parse_formula,
    print_formula)
from entrench.core._private.logic.semantics import (
    AtomUniverse, SemanticClass, Theory, class_algebra, combine,
    consequences, describe_class, entails, negate)

PQ = AtomUniverse.of("p", "q")


def formulas():
    leaves = st.sampled_from([Atom("p"), Atom("q"), TRUE, FALSE])
    return st.recursive(
        leaves,
        lambda children: st.one_of(
            children.map(Not),
            st.tuples(children, children).map(lambda t: And(*t)),
            st.tuples(children, children).map(lambda t: Or(*t)),
            st.tuples(children, children).map(lambda t: Implies(*t))),
        max_leaves=8)


masks = st.integers(min_value=0, max_value=PQ.full_mask)


@pytest.mark.parametrize("text,mask", [
    ("p", 0b1010),
    ("q", 0b1100),
    ("~p", 0b0101),
    ("p & q", 0b1000),
    ("p | q", 0b1110),
    ("p -> q", 0b1101),
    ("true", 0b1111),
    ("false", 0),
    ("!q", 0b0011),
    ("~p & q | p", 0b1110),
    # -> associates to the right
    ("p -> q -> p", 0b1111),
    ("(p -> q) -> p", 0b1010),
])
def test_parse_class(text, mask):
    assert parse_class(text, PQ).mask == mask


@pytest.mark.parametrize("text", [
    "p -> q -> p",
    "(p -> q) -> p",
    "~(p & q)",
    "p & (q | p)",
    "p & q & p",
    "p & (q & p)",
    "~~p",
    "true | false",
])
def test_print_is_minimal(text):
    assert print_formula(parse_formula(text, PQ)) == text


@given(formulas())
@settings(max_examples=200, deadline=None)
def test_print_parse_round_trip(f):
    assert parse_formula(print_formula(f), PQ) == f


@given(masks, masks, masks)
def test_deduction_theorem(a, b, c):
    a, b, c = (SemanticClass(PQ, m) for m in (a, b, c))
    assert entails(a & b, c) == entails(a, b.implies(c))


@given(masks, masks)
def test_de_morgan(a, b):
    a, b = SemanticClass(PQ, a), SemanticClass(PQ, b)
    assert ~(a & b) == (~a | ~b)
    assert negate(negate(a)) == a


class FormulaTest(unittest.TestCase):
    def testSyntaxErrorPosition(self):
        with self.assertRaises(FormulaSyntaxError) as ctx:
            parse_formula("p &", PQ)
        self.assertEqual(ctx.exception.line, 1)
        self.assertGreaterEqual(ctx.exception.column, 2)

    def testSyntaxErrorIsValueError(self):
        with self.assertRaises(ValueError):
            parse_formula("p q", PQ)

    def testUnknownAtom(self):
        with self.assertRaises(UnknownAtomError) as ctx:
            parse_formula("p & r", PQ)
        self.assertEqual(ctx.exception.name, "r")
        self.assertEqual(ctx.exception.position, 4)

    def testConstantsAreNotAtoms(self):
        self.assertEqual(parse_formula("true", PQ), TRUE)
        self.assertEqual(parse_formula("~false", PQ), Not(FALSE))

    def testAtomPositionIgnoredInEquality(self):
        self.assertEqual(parse_formula("  p", PQ), Atom("p"))


class SemanticsTest(unittest.TestCase):
    def testDescribeClass(self):
        self.assertEqual(describe_class(PQ.top()), "true")
        self.assertEqual(describe_class(PQ.bottom()), "false")
        self.assertEqual(describe_class(parse_class("p & q", PQ)), "p & q")
        self.assertEqual(describe_class(PQ.atom("p")),
                         "(p & ~q) | (p & q)")

    def testCombine(self):
        p, q = PQ.atom("p"), PQ.atom("q")
        self.assertEqual(combine("and", p, q), p & q)
        self.assertEqual(combine("or", p, q), p | q)
        self.assertEqual(combine("implies", p, q), parse_class("~p | q", PQ))
        with self.assertRaises(ValueError):
            combine("xor", p, q)

    def testConsequences(self):
        self.assertEqual(consequences(Theory(PQ.top())), {PQ.top()})
        self.assertEqual(len(consequences(Theory(PQ.bottom()))),
                         PQ.class_count)
        theory_p = Theory(PQ.atom("p"))
        self.assertEqual(len(consequences(theory_p)), 4)
        self.assertTrue(all(theory_p.contains(c)
                            for c in consequences(theory_p)))
        self.assertFalse(theory_p.contains(PQ.atom("q")))

    def testUniverseMismatch(self):
        other = AtomUniverse.of("p", "r")
        with self.assertRaises(UniverseMismatchError):
            entails(PQ.atom("p"), other.atom("p"))

    def testUniverseLimits(self):
        with self.assertRaises(UniverseTooLargeError):
            AtomUniverse.of("p", "q", "r", "s", "t")
        # four atoms are fine for formulas, not for relations
        pqrs = AtomUniverse.of("p q r s")
        self.assertEqual(pqrs.class_count, 1 << 16)
        with self.assertRaises(UniverseTooLargeError):
            class_algebra(pqrs)

    def testInvalidAtomNames(self):
        for atoms in (("p", "p"), ("true",), ("P",), ()):
            with self.assertRaises(ValueError):
                AtomUniverse(atoms)

    def testAlgebraTables(self):
        t = class_algebra(PQ)
        self.assertEqual(t.size, 16)
        self.assertEqual(int(t.implication[0b1010, 0b1100]), 0b1101)
        self.assertTrue(t.entails[0b1000, 0b1010])
        self.assertFalse(t.strictly_entails[0b1010, 0b1010])
        self.assertEqual(int(t.entails.sum()), 3 ** 4)


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main(["-v", __file__]))
