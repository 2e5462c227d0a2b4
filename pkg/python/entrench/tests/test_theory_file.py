import unittest

import pytest

from entrench.core._private.errors import TheoryFileError
from entrench.core._private.harness.theory_file import (
    KIND_CONSEQUENCE, KIND_ENTRENCHMENT, load_theory, loads_theory,
    theory_relation)
from entrench.core._private.logic.formula import Atom, Not, Or
from entrench.core._private.relation.consequence import ConsequenceRelation
from entrench.core._private.relation.entrenchment import dominance


def test_load_penguins(penguins):
    assert str(penguins.atoms) == "p b f"
    assert penguins.profile_name == "base+transitivity"
    assert penguins.kind == KIND_ENTRENCHMENT
    assert len(penguins.statements) == 7
    assert penguins.statements[2] == (Atom("f"), Not(Atom("p")))
    assert "Transitivity" in penguins.profile()


def test_empty_statement_list_is_dominance():
    theory = loads_theory("atoms: p q\nprofile: base\n")
    assert theory_relation(theory).same_pairs(dominance(theory.atoms))


def test_consequence_file():
    theory = loads_theory("atoms: p q\ncstmt: p |~ q\n")
    assert theory.kind == KIND_CONSEQUENCE
    assert theory.profile_name == "nm"
    rel = theory_relation(theory)
    assert isinstance(rel, ConsequenceRelation)
    p, q = theory.atoms.atom("p"), theory.atoms.atom("q")
    assert rel.holds(p, q)


def test_dumps_round_trip(penguins):
    again = loads_theory(penguins.dumps())
    assert again.atoms == penguins.atoms
    assert again.profile_name == penguins.profile_name
    assert again.statements == penguins.statements


@pytest.mark.parametrize("text,line", [
    ("atoms: p q\nstmt: p <= q\ncstmt: p |~ q\n", 3),
    ("atoms: p q\nstmt: p <= r\n", 2),
    ("atoms: p q\nstmt: p & <= q\n", 2),
    ("atoms: p q\nstmt: p q\n", 2),
    ("stmt: p <= q\natoms: p q\n", 1),
    ("atoms: p q\natoms: p\n", 2),
    ("atoms: p q\n\nprofile: nothing\n", 3),
    ("atoms: p q\nprofile: base\nrules: Transitivity\n", 3),
    ("atoms: p q\nweight: 3\n", 2),
    ("atoms: p q\njust text\n", 2),
    ("# no atoms\nprofile: base\n", None),
])
def test_errors_carry_line_numbers(text, line):
    with pytest.raises(TheoryFileError) as e:
        loads_theory(text, path="t.theory")
    assert e.value.line == line
    assert e.value.path == "t.theory"


@pytest.mark.parametrize("line,expected", [
    ("cstmt: p|~q |~ r", (Or(Atom("p"), Not(Atom("q"))), Atom("r"))),
    ("cstmt: p |~ q|~r", (Atom("p"), Or(Atom("q"), Not(Atom("r"))))),
    ("cstmt: p|~r", (Atom("p"), Atom("r"))),
    ("cstmt: p\t|~\tq | ~r", (Atom("p"), Or(Atom("q"), Not(Atom("r"))))),
    ("stmt: p<=q", (Atom("p"), Atom("q"))),
])
def test_statement_separator(line, expected):
    theory = loads_theory("atoms: p q r\n{}\n".format(line))
    assert theory.statements == [expected]


def test_bare_separators_are_ambiguous():
    with pytest.raises(TheoryFileError) as e:
        loads_theory("atoms: p q r\ncstmt: p|~q|~r\n")
    assert e.value.line == 2
    assert "Ambiguous" in str(e.value)


class TheoryFileTest(unittest.TestCase):
    def testCommentsAndBlankLines(self):
        theory = loads_theory(
            "# header\n\natoms: p q   # two atoms\n"
            "stmt: p <= q # p is less entrenched\n")
        self.assertEqual(len(theory.statements), 1)

    def testExplicitRules(self):
        theory = loads_theory(
            "atoms: p q\nrules: Transitivity, right-conjunction\n"
            "stmt: p <= q\n")
        profile = theory.profile()
        self.assertTrue(profile.includes("Transitivity", "RightConjunction",
                                         "Reflexivity"))
        self.assertIn("rules: Transitivity, right-conjunction",
                      theory.dumps())

    def testMissingFile(self):
        with self.assertRaises(TheoryFileError) as ctx:
            load_theory("/nonexistent/frame.theory")
        self.assertIsNone(ctx.exception.line)

    def testRelationTooLarge(self):
        theory = loads_theory("atoms: p q r s\nstmt: p <= q\n")
        with self.assertRaises(TheoryFileError):
            theory_relation(theory)

    def testMessage(self):
        with self.assertRaises(TheoryFileError) as ctx:
            loads_theory("atoms: p\nstmt: q <= p\n", path="x.theory")
        self.assertTrue(str(ctx.exception).startswith("x.theory:2: "))


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main(["-v", __file__]))
