"""Theory files: a universe, a profile and a list of statements.

::

    # comments run to the end of the line
    atoms: p b f
    profile: base+transitivity      (or: rules: Transitivity, RightConjunction)
    stmt: f <= ~p                   (entrenchment statement, f ⪯ ~p)
    cstmt: p & b |~ ~f              (consequence statement)

A file holds either entrenchment or consequence statements, never both.
Without a profile line, entrenchment files use ``base`` and consequence
files ``nm``.
"""
import io
import logging
import re
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from entrench.core._private.errors import EntrenchError, TheoryFileError
from entrench.core._private.logic.formula import (
    Formula, classify, parse_formula, print_formula)
from entrench.core._private.logic.semantics import AtomUniverse, SemanticClass
from entrench.core._private.relation.consequence import close_consequence
from entrench.core._private.relation.entrenchment import close_entrenchment
from entrench.core._private.relation.profiles import (
    consequence_profile, consequence_profile_of_rules, entrenchment_profile,
    entrenchment_profile_of_rules)

logger = logging.getLogger(__name__)

KIND_ENTRENCHMENT = "entrenchment"
KIND_CONSEQUENCE = "consequence"

DEFAULT_PROFILES = {
    KIND_ENTRENCHMENT: "base",
    KIND_CONSEQUENCE: "nm",
}

_SEPARATORS = {
    "stmt": "<=",
    "cstmt": "|~",
}

FormulaPair = Tuple[Formula, Formula]


@dataclass
class TheoryFile:
    path: str
    atoms: AtomUniverse
    profile_name: str
    entrenchment_statements: List[FormulaPair] = field(default_factory=list)
    consequence_statements: List[FormulaPair] = field(default_factory=list)
    explicit_rules: Optional[List[str]] = None
    presets_path: Optional[str] = None

    @property
    def kind(self) -> str:
        if self.consequence_statements:
            return KIND_CONSEQUENCE
        return KIND_ENTRENCHMENT

    @property
    def statements(self) -> List[FormulaPair]:
        if self.kind == KIND_CONSEQUENCE:
            return self.consequence_statements
        return self.entrenchment_statements

    def class_statements(self) -> List[Tuple[SemanticClass, SemanticClass]]:
        return [(classify(left, self.atoms), classify(right, self.atoms))
                for left, right in self.statements]

    def profile(self):
        if self.kind == KIND_CONSEQUENCE:
            if self.explicit_rules is not None:
                return consequence_profile_of_rules(self.explicit_rules)
            return consequence_profile(self.profile_name, self.presets_path)
        if self.explicit_rules is not None:
            return entrenchment_profile_of_rules(self.explicit_rules)
        return entrenchment_profile(self.profile_name, self.presets_path)

    def relation(self):
        """The least relation over the file's statements closed under its
        profile; an EntrenchmentRelation or a ConsequenceRelation."""
        if self.kind == KIND_CONSEQUENCE:
            return close_consequence(self.class_statements(), self.profile(),
                                     self.atoms)
        return close_entrenchment(self.class_statements(), self.profile(),
                                  self.atoms)

    def dumps(self) -> str:
        out = io.StringIO()
        out.write("atoms: {}\n".format(self.atoms))
        if self.explicit_rules is not None:
            out.write("rules: {}\n".format(", ".join(self.explicit_rules)))
        else:
            out.write("profile: {}\n".format(self.profile_name))
        key = "cstmt" if self.kind == KIND_CONSEQUENCE else "stmt"
        for left, right in self.statements:
            out.write("{}: {} {} {}\n".format(
                key, print_formula(left), _SEPARATORS[key],
                print_formula(right)))
        return out.getvalue()


class _TheoryParser:
    def __init__(self, path: str, presets_path: Optional[str]):
        self.path = path
        self.presets_path = presets_path
        self.atoms: Optional[AtomUniverse] = None
        self.profile_name: Optional[str] = None
        self.profile_line: Optional[int] = None
        self.rules: Optional[List[str]] = None
        self.statements = {"stmt": [], "cstmt": []}

    def error(self, line: Optional[int], reason: str) -> TheoryFileError:
        return TheoryFileError(self.path, line, reason)

    def feed(self, number: int, raw: str):
        text = raw.split("#", 1)[0].strip()
        if not text:
            return
        key, sep, value = text.partition(":")
        key = key.strip().lower()
        value = value.strip()
        if not sep:
            raise self.error(number, "Expected 'key: value', got '{}'".format(
                text))
        if key == "atoms":
            self._atoms(number, value)
        elif key in ("profile", "rules"):
            self._profile(number, key, value)
        elif key in _SEPARATORS:
            self._statement(number, key, value)
        else:
            raise self.error(number, "Unknown key '{}'".format(key))

    def _atoms(self, number: int, value: str):
        if self.atoms is not None:
            raise self.error(number, "Duplicate 'atoms' line")
        try:
            self.atoms = AtomUniverse(tuple(value.split()))
        except ValueError as e:
            raise self.error(number, str(e)) from e

    def _profile(self, number: int, key: str, value: str):
        if self.profile_line is not None:
            raise self.error(
                number, "Only one 'profile' or 'rules' line is allowed")
        self.profile_line = number
        if key == "rules":
            self.rules = [r.strip() for r in value.split(",") if r.strip()]
        elif not value:
            raise self.error(number, "Empty profile")
        else:
            self.profile_name = value

    def _statement(self, number: int, key: str, value: str):
        if self.atoms is None:
            raise self.error(number, "'atoms' must come before statements")
        other = "cstmt" if key == "stmt" else "stmt"
        if self.statements[other]:
            raise self.error(
                number, "A file holds either 'stmt' or 'cstmt' lines, "
                "not both")
        left, right = self._split(number, value, _SEPARATORS[key])
        pair = (self._formula(number, left), self._formula(number, right))
        self.statements[key].append(pair)

    def _split(self, number: int, value: str,
               separator: str) -> Tuple[str, str]:
        # "p|~q |~ r" is p | ~q on the left: a separator with whitespace on
        # both sides wins over bare ones, the last such if several
        spaced = list(re.finditer(r"\s" + re.escape(separator) + r"\s",
                                  value))
        if spaced:
            match = spaced[-1]
            return value[:match.start()], value[match.end():]
        count = value.count(separator)
        if count == 0:
            raise self.error(number, "Expected '<formula> {} <formula>'"
                             .format(separator))
        if count > 1:
            raise self.error(
                number, "Ambiguous statement, put spaces around the '{}' "
                "between the two formulas".format(separator))
        left, _, right = value.partition(separator)
        return left, right

    def _formula(self, number: int, text: str) -> Formula:
        try:
            return parse_formula(text.strip(), self.atoms)
        except EntrenchError as e:
            raise self.error(number, str(e)) from e

    def finish(self) -> TheoryFile:
        if self.atoms is None:
            raise self.error(None, "Missing 'atoms' line")
        kind = KIND_CONSEQUENCE if self.statements["cstmt"] \
            else KIND_ENTRENCHMENT
        theory = TheoryFile(
            path=self.path,
            atoms=self.atoms,
            profile_name=self.profile_name or DEFAULT_PROFILES[kind],
            entrenchment_statements=self.statements["stmt"],
            consequence_statements=self.statements["cstmt"],
            explicit_rules=self.rules,
            presets_path=self.presets_path)
        # resolve now so a bad profile is reported against its line
        try:
            theory.profile()
        except EntrenchError as e:
            raise self.error(self.profile_line, str(e)) from e
        return theory


def loads_theory(text: str, path: str = "<string>",
                 presets_path: Optional[str] = None) -> TheoryFile:
    parser = _TheoryParser(path, presets_path)
    for number, raw in enumerate(text.splitlines(), start=1):
        parser.feed(number, raw)
    theory = parser.finish()
    logger.debug("Loaded %s: %d %s statements, profile %s", path,
                 len(theory.statements), theory.kind, theory.profile_name)
    return theory


def load_theory(path: str, presets_path: Optional[str] = None) -> TheoryFile:
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise TheoryFileError(path, None, e.strerror or str(e)) from e
    except UnicodeDecodeError as e:
        raise TheoryFileError(path, None, "Not UTF-8 text: {}".format(e)) \
            from e
    return loads_theory(text, path, presets_path)


def theory_relation(theory: TheoryFile):
    """Close the theory, reporting a universe too large for relations
    against the file."""
    try:
        return theory.relation()
    except EntrenchError as e:
        if isinstance(e, TheoryFileError):
            raise
        raise TheoryFileError(theory.path, None, str(e)) from e
