"""Formula syntax: the pyparsing grammar, syntax trees and the printer.

Precedence from loosest to tightest is ``->``, ``|``, ``&``, negation.
``->`` associates to the right, ``&`` and ``|`` to the left.
"""
import functools
from dataclasses import dataclass, field
from typing import Iterator, Optional, Union

import pyparsing as pp

from entrench.core._private.errors import (
    FormulaSyntaxError, UnknownAtomError)
from entrench.core._private.logic.semantics import (
    AtomUniverse, SemanticClass)

pp.ParserElement.enable_packrat()

PRECEDENCE_IMPLIES = 1
PRECEDENCE_OR = 2
PRECEDENCE_AND = 3
PRECEDENCE_NOT = 4
PRECEDENCE_ATOMIC = 5


@dataclass(frozen=True)
class Atom:
    name: str
    # Offset in the parsed text, kept for error reporting only
    position: Optional[int] = field(default=None, compare=False)


@dataclass(frozen=True)
class Constant:
    value: bool


@dataclass(frozen=True)
class Not:
    child: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


Formula = Union[Atom, Constant, Not, And, Or, Implies]

TRUE = Constant(True)
FALSE = Constant(False)


def _build_grammar() -> pp.ParserElement:
    expression = pp.Forward()

    constant = (pp.Keyword("true") | pp.Keyword("false")).set_parse_action(
        lambda t: TRUE if t[0] == "true" else FALSE)
    atom = pp.Regex(r"(?!(?:true|false)\b)[a-z][a-z0-9_]*").set_parse_action(
        lambda s, loc, t: Atom(t[0], loc))
    atom.set_name("atom")
    group = pp.Suppress("(") + expression + pp.Suppress(")")
    primary = constant | atom | group

    negation = pp.Forward()
    negated = (pp.one_of("~ !") + negation).set_parse_action(
        lambda t: Not(t[1]))
    negation <<= negated | primary

    conjunction = (negation + pp.ZeroOrMore(pp.Suppress("&") + negation)
                   ).set_parse_action(lambda t: functools.reduce(And, t))
    disjunction = (conjunction + pp.ZeroOrMore(
        pp.Suppress("|") + conjunction)).set_parse_action(
        lambda t: functools.reduce(Or, t))

    implication = pp.Forward()
    implication <<= (disjunction + pp.Optional(
        pp.Suppress("->") + implication)).set_parse_action(
        lambda t: t[0] if len(t) == 1 else Implies(t[0], t[1]))

    expression <<= implication
    return expression + pp.StringEnd()


_GRAMMAR = _build_grammar()


def atoms_of(f: Formula) -> Iterator[Atom]:
    if isinstance(f, Atom):
        yield f
    elif isinstance(f, Not):
        yield from atoms_of(f.child)
    elif isinstance(f, (And, Or, Implies)):
        yield from atoms_of(f.left)
        yield from atoms_of(f.right)


def parse_formula(text: str, universe: AtomUniverse) -> Formula:
    """Parse ``text`` into a syntax tree over ``universe``.

    Raises FormulaSyntaxError with the failing position when the text does
    not match the grammar, and UnknownAtomError for identifiers that are
    not atoms of the universe.
    """
    try:
        result = _GRAMMAR.parse_string(text, parse_all=True)
    except pp.ParseBaseException as e:
        raise FormulaSyntaxError(text, e.loc, e.msg) from None
    formula = result[0]
    for atom in atoms_of(formula):
        if atom.name not in universe.atoms:
            raise UnknownAtomError(atom.name, atom.position)
    return formula


def precedence(f: Formula) -> int:
    if isinstance(f, Implies):
        return PRECEDENCE_IMPLIES
    if isinstance(f, Or):
        return PRECEDENCE_OR
    if isinstance(f, And):
        return PRECEDENCE_AND
    if isinstance(f, Not):
        return PRECEDENCE_NOT
    return PRECEDENCE_ATOMIC


def _print_operand(f: Formula, minimum: int) -> str:
    text = print_formula(f)
    if precedence(f) < minimum:
        return "(" + text + ")"
    return text


def print_formula(f: Formula) -> str:
    """Render with the fewest parentheses that parse back to ``f``."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Constant):
        return "true" if f.value else "false"
    if isinstance(f, Not):
        return "~" + _print_operand(f.child, PRECEDENCE_NOT)
    if isinstance(f, And):
        return "{} & {}".format(
            _print_operand(f.left, PRECEDENCE_AND),
            _print_operand(f.right, PRECEDENCE_AND + 1))
    if isinstance(f, Or):
        return "{} | {}".format(
            _print_operand(f.left, PRECEDENCE_OR),
            _print_operand(f.right, PRECEDENCE_OR + 1))
    if isinstance(f, Implies):
        return "{} -> {}".format(
            _print_operand(f.left, PRECEDENCE_IMPLIES + 1),
            _print_operand(f.right, PRECEDENCE_IMPLIES))
    raise TypeError("Not a formula: {!r}".format(f))


def _mask_of(f: Formula, universe: AtomUniverse) -> int:
    full = universe.full_mask
    if isinstance(f, Atom):
        if f.name not in universe.atoms:
            raise UnknownAtomError(f.name, f.position)
        return universe.atom_mask(f.name)
    if isinstance(f, Constant):
        return full if f.value else 0
    if isinstance(f, Not):
        return full ^ _mask_of(f.child, universe)
    left = _mask_of(f.left, universe)
    right = _mask_of(f.right, universe)
    if isinstance(f, And):
        return left & right
    if isinstance(f, Or):
        return left | right
    if isinstance(f, Implies):
        return (full ^ left) | right
    raise TypeError("Not a formula: {!r}".format(f))


def classify(f: Formula, universe: AtomUniverse) -> SemanticClass:
    """The class of valuations over ``universe`` satisfying ``f``.

    Every valuation is evaluated at once: an atom is the bit mask of the
    valuations making it true, and connectives act bitwise on masks.
    """
    return SemanticClass(universe, _mask_of(f, universe))


def parse_class(text: str, universe: AtomUniverse) -> SemanticClass:
    return classify(parse_formula(text, universe), universe)
