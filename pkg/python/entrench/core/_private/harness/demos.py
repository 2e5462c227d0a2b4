"""Shipped demo frames and their text rendering.

The rendering is deterministic (classes in mask order) so the output can be
compared byte for byte against the committed snapshot.
"""
import io
import os
from typing import List, Optional, Sequence

import numpy as np

import entrench
from entrench.core._private.errors import TheoryFileError
from entrench.core._private.harness.theory_file import (
    KIND_ENTRENCHMENT, TheoryFile, load_theory, theory_relation)
from entrench.core._private.logic.formula import parse_class, print_formula
from entrench.core._private.logic.semantics import SemanticClass
from entrench.core._private.maxiconsistent import (
    coherence_matrix, credulous_infers, extensions, infers, sceptical)
from entrench.core._private.relation.entrenchment import (
    EntrenchmentRelation)

DEMOS_DIR = os.path.join(os.path.dirname(entrench.__file__), "demos")
FIGURE1_PATH = os.path.join(DEMOS_DIR, "figure1.theory")
FIGURE1_SNAPSHOT_PATH = os.path.join(DEMOS_DIR, "figure1.expected")
MULTIPLE_EXTENSIONS_PATH = os.path.join(DEMOS_DIR,
                                        "multiple-extensions.theory")

FIGURE1_PREMISES = ("p", "b", "true")
FIGURE1_ATOMS = ("p", "b", "f")

FIGURE1_NOTE = (
    "Note: read informally, this frame has p infer ~f: among the sentences\n"
    "drawn in the diagram only p -> ~f survives next to p. Over all\n"
    "deductively closed sets it does not: Cn(p & b) is a maximal base of p\n"
    "without p -> ~f, so Cn(p & b & f) is an extension and p does not infer\n"
    "~f. The statements that would make the informal reading hold are not\n"
    "part of the frame, so none are added here.\n")


def _load_frame(path: str, atoms: Sequence[str] = ()) -> TheoryFile:
    """Load an entrenchment frame that declares at least ``atoms``."""
    theory = load_theory(path)
    if theory.kind != KIND_ENTRENCHMENT:
        raise TheoryFileError(
            path, None, "The demo renders entrenchment frames, got "
            "'cstmt' lines")
    missing = [a for a in atoms if a not in theory.atoms.atoms]
    if missing:
        raise TheoryFileError(
            path, None, "The demo needs atoms {}, missing {}".format(
                " ".join(atoms), " ".join(missing)))
    return theory


def _write_header(out: io.StringIO, title: str, theory: TheoryFile):
    out.write("{}\n".format(title))
    out.write("atoms: {}\n".format(theory.atoms))
    out.write("profile: {}\n".format(theory.profile_name))
    out.write("statements:\n")
    for left, right in theory.statements:
        out.write("  {} <= {}\n".format(print_formula(left),
                                        print_formula(right)))


def _write_extensions(out: io.StringIO, rel: EntrenchmentRelation,
                      text: str, premise: SemanticClass):
    found = extensions(rel, premise)
    out.write("extensions at {}: {}\n".format(text, len(found)))
    for theory in found:
        out.write("  {}\n".format(theory))
    out.write("sceptical at {}: {}\n".format(text, sceptical(rel, premise)))


def minimal_coherent(rel: EntrenchmentRelation,
                     premise: SemanticClass) -> List[SemanticClass]:
    """Members of Coh(premise) that no other member strictly entails."""
    t = rel.algebra
    members = np.flatnonzero(coherence_matrix(rel)[premise.mask])
    below = t.strictly_entails[np.ix_(members, members)].any(axis=0)
    return [t.cls(m) for m in members[~below]]


def render_figure1(path: Optional[str] = None) -> str:
    theory = _load_frame(path or FIGURE1_PATH, FIGURE1_ATOMS)
    rel = theory_relation(theory)
    universe = theory.atoms
    out = io.StringIO()
    _write_header(out, "penguin frame: p penguin, b bird, f flies", theory)

    p = parse_class("p", universe)
    coh = coherence_matrix(rel)[p.mask]
    minimal = minimal_coherent(rel, p)
    out.write("Coh(p): {} of {} classes, {} minimal:\n".format(
        int(coh.sum()), universe.class_count, len(minimal)))
    for c in minimal:
        out.write("  {}\n".format(c))

    for text in FIGURE1_PREMISES:
        _write_extensions(out, rel, text, parse_class(text, universe))

    not_f = parse_class("~f", universe)
    out.write("p |~ ~f: {}\n".format("yes" if infers(rel, p, not_f)
                                      else "no"))
    out.write("\n")
    out.write(FIGURE1_NOTE)
    return out.getvalue()


def render_multiple_extensions(path: Optional[str] = None) -> str:
    theory = _load_frame(path or MULTIPLE_EXTENSIONS_PATH)
    rel = theory_relation(theory)
    universe = theory.atoms
    out = io.StringIO()
    _write_header(out, "competing statements", theory)
    top = universe.top()
    _write_extensions(out, rel, "true", top)
    for text in universe.atoms:
        c = parse_class(text, universe)
        out.write("true |~ {}: sceptical {}, credulous {}\n".format(
            text,
            "yes" if infers(rel, top, c) else "no",
            "yes" if credulous_infers(rel, top, c) else "no"))
    return out.getvalue()
