"""Bookkeeping for verification suites: the per-sample context handed to a
suite, the failures it records, and the report assembled from all samples.

A suite is a function of one ``SampleContext``. It draws its relations
through the context (so they can be replayed from ``(seed, sample)``) and
states expectations as boolean matrices over class tuples; the first
disagreement of every expectation becomes a ``Failure``.
"""
import json
import logging
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence

import numpy as np
import prettytable as pt

from entrench.core._private import constants
from entrench.core._private.harness.random_relations import (
    random_consequence, random_frame, sample_rng, universe_of)
from entrench.core._private.logic.semantics import class_algebra
from entrench.core._private.maxiconsistent import extension_counts
from entrench.core._private.relation.class_relation import ClassRelation
from entrench.core._private.relation.consequence import ConsequenceRelation
from entrench.core._private.relation.entrenchment import (
    EntrenchmentRelation)
from entrench.core._private.relation.horn import PropertyReport
from entrench.core._private.relation.profiles import (
    consequence_profile, entrenchment_profile)

logger = logging.getLogger(__name__)

DEFAULT_LABELS = ("alpha", "beta", "gamma", "delta")


@dataclass
class Failure:
    sample: int
    seed: int
    check: str
    relation: str
    profile: str
    statements: List[List[str]]
    instantiation: Dict[str, str]
    expected: str
    actual: str

    def to_dict(self) -> Dict[str, Any]:
        return OrderedDict([
            ("sample", self.sample),
            ("seed", self.seed),
            ("check", self.check),
            ("relation", self.relation),
            ("profile", self.profile),
            ("statements", self.statements),
            ("instantiation", self.instantiation),
            ("expected", self.expected),
            ("actual", self.actual),
        ])


@dataclass
class SampleResult:
    index: int
    checks: int = 0
    pairs: int = 0
    extensions: int = 0
    failures: List[Failure] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return OrderedDict([
            ("sample", self.index),
            ("checks", self.checks),
            ("pairs", self.pairs),
            ("extensions", self.extensions),
            ("failures", len(self.failures)),
        ])


@dataclass
class VerificationReport:
    suite: str
    description: str
    atoms: int
    samples: int
    seed: int
    results: List[SampleResult]

    @property
    def failures(self) -> List[Failure]:
        return [f for r in self.results for f in r.failures]

    @property
    def checks(self) -> int:
        return sum(r.checks for r in self.results)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        return OrderedDict([
            ("suite", self.suite),
            ("description", self.description),
            ("atoms", self.atoms),
            ("samples", self.samples),
            ("seed", self.seed),
            ("checks", self.checks),
            ("ok", self.ok),
            ("failures", [f.to_dict() for f in self.failures]),
            ("statistics", [r.to_dict() for r in self.results]),
        ])

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def render_text(self) -> str:
        lines = ["Suite {}: {}".format(self.suite, self.description),
                 "atoms={} samples={} seed={} checks={}".format(
                     self.atoms, self.samples, self.seed, self.checks)]
        tb = pt.PrettyTable()
        tb.field_names = ["sample", "checks", "pairs", "extensions",
                          "failures"]
        for result in self.results:
            tb.add_row([result.index, result.checks, result.pairs,
                        result.extensions, len(result.failures)])
        lines.append(tb.get_string())
        for failure in self.failures:
            lines.append(
                "FAILED {} (sample {}, {} under {}): {}; expected {}, "
                "got {}".format(
                    failure.check, failure.sample, failure.relation,
                    failure.profile,
                    ", ".join("{}={}".format(k, v)
                              for k, v in failure.instantiation.items()),
                    failure.expected, failure.actual))
        lines.append("{}: {} failure(s)".format(
            "PASSED" if self.ok else "FAILED", len(self.failures)))
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    run: Callable[["SampleContext"], None]


SUITES: Dict[str, Suite] = OrderedDict()


def suite(name: str, description: str):
    """Register the decorated function as verification suite ``name``."""

    def decorator(fn):
        SUITES[name] = Suite(name, description, fn)
        return fn

    return decorator


class SampleContext:
    """State of one sample: its random stream, relations and findings."""

    def __init__(self, index: int, seed: int, n_atoms: int):
        self.index = index
        self.seed = seed
        self.n_atoms = n_atoms
        self.rng = sample_rng(seed, index)
        self.universe = universe_of(n_atoms)
        self.algebra = class_algebra(self.universe)
        self.result = SampleResult(index)

    def draw_k(self) -> int:
        return int(self.rng.integers(
            0, constants.ENTRENCH_MAX_STATEMENTS + 1))

    def draw_class(self) -> int:
        return int(self.rng.integers(0, self.algebra.size))

    def frame(self, profile: str,
              k_statements: Optional[int] = None) -> EntrenchmentRelation:
        if k_statements is None:
            k_statements = self.draw_k()
        rel = random_frame(self.seed, self.n_atoms, k_statements,
                           entrenchment_profile(profile), rng=self.rng)
        self.result.pairs += rel.pair_count
        return rel

    def consequence(self, profile: str,
                    k_statements: Optional[int] = None
                    ) -> ConsequenceRelation:
        if k_statements is None:
            k_statements = self.draw_k()
        rel = random_consequence(self.seed, self.n_atoms, k_statements,
                                 consequence_profile(profile), rng=self.rng)
        self.result.pairs += rel.pair_count
        return rel

    def count_extensions(self, rel: EntrenchmentRelation,
                         weak: bool = False):
        self.result.extensions += int(extension_counts(rel, weak).sum())

    def fail(self, check: str, subject: Optional[ClassRelation],
             instantiation: Dict[str, str], expected: Any, actual: Any):
        if subject is None:
            relation, profile, statements = "none", "", []
        else:
            relation = type(subject).__name__
            profile = str(subject.profile)
            t = subject.algebra
            statements = [[t.describe(a.mask), t.describe(b.mask)]
                          for a, b in subject.source_statements]
        failure = Failure(self.index, self.seed, check, relation, profile,
                          statements, instantiation, str(expected),
                          str(actual))
        logger.debug("Sample %d: %s failed at %s", self.index, check,
                     instantiation)
        self.result.failures.append(failure)

    def describe(self, labels: Sequence[str], values) -> Dict[str, str]:
        t = self.algebra
        return OrderedDict((label, t.describe(int(v)))
                           for label, v in zip(labels, values))

    def expect(self, check: str, subject: Optional[ClassRelation],
               condition: bool, instantiation: Dict[str, str],
               expected: Any = True, actual: Any = False) -> bool:
        self.result.checks += 1
        if not condition:
            self.fail(check, subject, instantiation, expected, actual)
        return bool(condition)

    def expect_equal(self, check: str, subject: Optional[ClassRelation],
                     expected: np.ndarray, actual: np.ndarray,
                     labels: Sequence[str] = DEFAULT_LABELS) -> bool:
        """Elementwise equality of two boolean arrays over class tuples."""
        expected = np.asarray(expected)
        actual = np.broadcast_to(np.asarray(actual), expected.shape)
        self.result.checks += int(expected.size)
        diff = expected != actual
        if not diff.any():
            return True
        where = tuple(int(i) for i in np.argwhere(diff)[0])
        self.fail(check, subject, self.describe(labels, where),
                  bool(expected[where]), bool(actual[where]))
        return False

    def expect_implies(self, check: str, subject: Optional[ClassRelation],
                       premise: np.ndarray, conclusion: np.ndarray,
                       labels: Sequence[str] = DEFAULT_LABELS) -> bool:
        """``premise[i] => conclusion[i]`` for every class tuple i."""
        premise = np.asarray(premise, dtype=bool)
        conclusion = np.broadcast_to(np.asarray(conclusion, dtype=bool),
                                     premise.shape)
        self.result.checks += int(premise.size)
        bad = premise & ~conclusion
        if not bad.any():
            return True
        where = tuple(int(i) for i in np.argwhere(bad)[0])
        self.fail(check, subject, self.describe(labels, where), True, False)
        return False

    def expect_properties(self, check: str, subject: ClassRelation,
                          report: PropertyReport,
                          names: Sequence[str]) -> bool:
        ok = True
        for name in names:
            result = report[name]
            self.result.checks += 1
            if not result.holds:
                ok = False
                self.fail("{}: {}".format(check, name), subject,
                          dict(result.witness_text), "holds", "fails")
        return ok

    def expect_row_inclusions(self, check: str, subject: ClassRelation,
                              m: np.ndarray, condition: np.ndarray,
                              small: np.ndarray, large: np.ndarray) -> bool:
        """Whenever ``condition[a, b]``, row ``small[a, b]`` of ``m`` is a
        subset of row ``large[a, b]``; rows are indexed by class."""
        ok = True
        for alpha in range(condition.shape[0]):
            betas = np.flatnonzero(condition[alpha])
            if not len(betas):
                continue
            self.result.checks += len(betas)
            bad = m[small[alpha, betas]] & ~m[large[alpha, betas]]
            if bad.any():
                i, delta = (int(v) for v in np.argwhere(bad)[0])
                self.fail(check, subject,
                          self.describe(("alpha", "beta", "delta"),
                                        (alpha, betas[i], delta)),
                          True, False)
                ok = False
        return ok
