"""Public interface of the entrench library.

Formulas are parsed over an ``AtomUniverse`` into ``SemanticClass`` values;
relations over classes are closed under rule profiles; inference, the
duality maps and the verification suites work on the closed relations.
"""
from typing import Optional, Union

from entrench.core._private.duality import (
    MAPS, map_N, map_N_arrow, map_P, map_P_arrow, map_P_tr)
from entrench.core._private.errors import (
    EntrenchError, FormulaSyntaxError, ProfileError, TheoryFileError,
    UniverseMismatchError, UniverseTooLargeError, UnknownAtomError,
    UnknownProfileError, UnknownRuleError, UnknownSuiteError)
from entrench.core._private.harness.random_relations import (
    random_consequence, random_frame)
from entrench.core._private.harness.suites import (
    describe_suite, list_suites, verify_suite)
from entrench.core._private.harness.theory_file import (
    TheoryFile, load_theory, loads_theory)
from entrench.core._private.harness.verification import VerificationReport
from entrench.core._private.logic.formula import (
    classify, parse_class, parse_formula, print_formula)
from entrench.core._private.logic.semantics import (
    AtomUniverse, SemanticClass, Theory, combine, consequences,
    describe_class, entails, negate)
from entrench.core._private.maxiconsistent import (
    CoherentSet, ExtensionSet, bases, coherent_set, conditionalize,
    credulous_infers, extensions, inference_matrix, infers, max_bases,
    sceptical, weak_bases, weak_max_bases)
from entrench.core._private.relation.consequence import (
    ConsequenceRelation, check_nm_properties, classical, close_consequence)
from entrench.core._private.relation.entrenchment import (
    EntrenchmentRelation, check_entrenchment_properties, close_entrenchment,
    dominance, holds)
from entrench.core._private.relation.horn import PropertyReport
from entrench.core._private.relation.profiles import (
    NMProfile, RuleProfile, consequence_profile, entrenchment_profile)

ClassLike = Union[str, SemanticClass]


def as_class(value: ClassLike, universe: AtomUniverse) -> SemanticClass:
    """A class from formula text, or the class itself."""
    if isinstance(value, SemanticClass):
        universe.check_same(value.universe)
        return value
    return parse_class(value, universe)


def query(rel: EntrenchmentRelation, premise: ClassLike,
          conclusion: ClassLike, *, weak: bool = False,
          credulous: bool = False) -> bool:
    """Whether ``premise`` (weak) maxiconsistently infers ``conclusion``.

    Args:
        rel (EntrenchmentRelation): The closed frame.
        premise: Formula text over the frame's atoms, or a class.
        conclusion: Formula text over the frame's atoms, or a class.
        weak (bool): Use weak maxiconsistent inference.
        credulous (bool): Accept conclusions of at least one extension
            instead of all of them.
    """
    a = as_class(premise, rel.universe)
    b = as_class(conclusion, rel.universe)
    if credulous:
        return credulous_infers(rel, a, b, weak)
    return infers(rel, a, b, weak)


def load_relation(path: str, presets_path: Optional[str] = None):
    """Load a theory file and close its statements under its profile."""
    return load_theory(path, presets_path).relation()


__all__ = [
    "AtomUniverse", "SemanticClass", "Theory", "ClassLike",
    "parse_formula", "print_formula", "classify", "parse_class", "as_class",
    "entails", "combine", "negate", "consequences", "describe_class",
    "RuleProfile", "NMProfile", "entrenchment_profile", "consequence_profile",
    "EntrenchmentRelation", "ConsequenceRelation", "PropertyReport",
    "close_entrenchment", "close_consequence", "dominance", "classical",
    "holds", "check_entrenchment_properties", "check_nm_properties",
    "CoherentSet", "ExtensionSet", "coherent_set", "conditionalize",
    "bases", "max_bases", "weak_bases", "weak_max_bases", "extensions",
    "sceptical", "infers", "credulous_infers", "inference_matrix", "query",
    "MAPS", "map_N", "map_P", "map_N_arrow", "map_P_arrow", "map_P_tr",
    "TheoryFile", "load_theory", "loads_theory", "load_relation",
    "random_frame", "random_consequence",
    "VerificationReport", "verify_suite", "list_suites", "describe_suite",
    "EntrenchError", "FormulaSyntaxError", "UnknownAtomError",
    "UniverseMismatchError", "UniverseTooLargeError", "UnknownRuleError",
    "UnknownProfileError", "ProfileError", "TheoryFileError",
    "UnknownSuiteError",
]
