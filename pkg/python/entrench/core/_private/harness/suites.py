"""Verification suites over seeded random relations.

Every suite compares inference computed from its definition (enumerating
theories in ``maxiconsistent``) against an independent characterization:
a contraposition map, a rule check or a matrix identity over the class
algebra. Whole |C| x |C| matrices are compared, so every premise and
conclusion pair is covered for each sampled relation.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence

import numpy as np

from entrench.core._private import constants
from entrench.core._private.duality import (
    map_N, map_N_arrow, map_P, map_P_arrow, map_P_tr)
from entrench.core._private.errors import UnknownSuiteError
from entrench.core._private.harness.random_relations import universe_of
from entrench.core._private.harness.verification import (
    SUITES, SampleContext, SampleResult, VerificationReport, suite)
from entrench.core._private.logic.semantics import (
    SemanticClass, Theory, class_algebra, consequences)
from entrench.core._private.maxiconsistent import (
    base_matrix, coherence_matrix, conditionalize, extensions,
    inference_matrix, max_bases, weak_base_matrix, weak_max_bases)
from entrench.core._private.relation.consequence import ConsequenceRelation
from entrench.core._private.relation.consequence_rules import (
    CONSEQUENCE_PROPERTIES, NM_CORE)
from entrench.core._private.relation.entrenchment import (
    EntrenchmentRelation, dominance)
from entrench.core._private.relation.entrenchment_rules import (
    ENTRENCHMENT_PROPERTIES, FRAME_AXIOMS)
from entrench.core._private.relation.horn import bool_product
from entrench.core._private.relation.profiles import (
    NMProfile, consequence_profile, entrenchment_profile)

logger = logging.getLogger(__name__)

PAIR = ("alpha", "beta")


def _mode(check: str, weak: bool) -> str:
    return "{} ({})".format(check, "weak" if weak else "strong")


def _grid(ctx: SampleContext):
    t = ctx.algebra
    rows = np.broadcast_to(t.index[:, None], (t.size, t.size))
    return rows, rows.T


def _inference(rel: EntrenchmentRelation, weak: bool) -> ConsequenceRelation:
    """Inference of ``rel`` as a consequence relation to run checks on."""
    return ConsequenceRelation(
        rel.universe, inference_matrix(rel, weak),
        NMProfile((), name="{}({})".format("Cw" if weak else "C",
                                           rel.profile)),
        rel.source_statements)


def _check_consequence(ctx: SampleContext, check: str,
                       cons: ConsequenceRelation, names: Sequence[str]):
    report = cons.check([CONSEQUENCE_PROPERTIES[n] for n in names])
    ctx.expect_properties(check, cons, report, names)


def _check_entrenchment(ctx: SampleContext, check: str,
                        rel: EntrenchmentRelation, names: Sequence[str]):
    report = rel.check([ENTRENCHMENT_PROPERTIES[n] for n in names])
    ctx.expect_properties(check, rel, report, names)


@suite("collapse", "Inference over the Dominance frame is classical "
       "entailment")
def _collapse(ctx: SampleContext):
    t = ctx.algebra
    rel = dominance(ctx.universe)
    for weak in (False, True):
        ctx.expect_equal(_mode("inference equals entailment", weak), rel,
                         t.entails, inference_matrix(rel, weak), PAIR)
    ctx.count_extensions(rel)


@suite("lemma-conditionalization", "Conditionalization determines a "
       "theory containing the premise and adds nothing beyond it")
def _conditionalization(ctx: SampleContext):
    t = ctx.algebra
    rows, _ = _grid(ctx)
    for a in range(t.size):
        # theories containing a are Cn(g) with g ⊢ a
        generators = np.flatnonzero(t.entails[:, a])
        keys = t.implication[a, generators]
        ctx.result.checks += len(generators)
        unique, counts = np.unique(keys, return_counts=True)
        if (counts > 1).any():
            shared = unique[np.argmax(counts > 1)]
            u, v = generators[keys == shared][:2]
            ctx.fail("theories with the premise share a conditionalization",
                     None, ctx.describe(("alpha", "U", "V"), (a, u, v)),
                     "distinct", "equal")
    ctx.expect_equal("Cn(U^alpha, alpha) = Cn(U, alpha)", None,
                     t.meet, t.meet[rows, t.implication], ("alpha", "U"))

    premise = SemanticClass(ctx.universe, ctx.draw_class())
    generator = SemanticClass(ctx.universe, ctx.draw_class())
    ctx.expect("U^alpha is the theory of alpha -> U", None,
               conditionalize(Theory(generator), premise)
               == consequences(Theory(premise.implies(generator))),
               ctx.describe(("alpha", "U"), (premise.mask, generator.mask)))


@suite("lemma-consistent-bases", "Coherent sets avoid the negated premise; "
       "bases, weak bases and extensions are consistent with it")
def _consistent_bases(ctx: SampleContext):
    t = ctx.algebra
    rel = ctx.frame("base")
    coh = coherence_matrix(rel)
    ctx.expect_implies("coherent sentences do not entail ~alpha", rel,
                       coh, ~t.entails[:, t.negation].T, PAIR)
    consistent = t.meet != 0
    ctx.expect_implies("bases are consistent with alpha", rel,
                       base_matrix(rel), consistent, ("alpha", "U"))
    ctx.expect_implies("weak bases are consistent with alpha", rel,
                       weak_base_matrix(rel), consistent, ("alpha", "U"))
    for premise in ctx.universe.classes():
        for u in weak_max_bases(rel, premise):
            ctx.expect("maximal weak bases contain alpha", rel,
                       u.contains(premise),
                       ctx.describe(("alpha", "U"),
                                    (premise.mask, u.generator.mask)))
        if not coh[premise.mask].any():
            continue
        for weak in (False, True):
            for e in extensions(rel, premise, weak):
                ctx.expect(_mode("extensions are consistent", weak), rel,
                           e.is_consistent(),
                           ctx.describe(("alpha", "E"),
                                        (premise.mask, e.generator.mask)))
    ctx.count_extensions(rel)


@suite("lemma-inconsistency", "alpha infers false iff Coh(alpha) is empty "
       "iff true <= ~alpha iff everything is below ~alpha")
def _inconsistency(ctx: SampleContext):
    t = ctx.algebra
    rel = ctx.frame("base")
    r = rel.pairs
    characterizations = (
        ("Coh(alpha) is empty", ~coherence_matrix(rel).any(axis=1)),
        ("true <= ~alpha", r[t.top, t.negation]),
        ("every beta <= ~alpha", r[:, t.negation].all(axis=0)),
    )
    for weak in (False, True):
        infers_bottom = inference_matrix(rel, weak)[:, t.bottom]
        for name, m in characterizations:
            ctx.expect_equal(_mode("alpha |~ false iff " + name, weak), rel,
                             infers_bottom, m, ("alpha",))


@suite("lemma-inequalities", "Upward closure of Coh and the entrenchment "
       "bounds of maxiconsistent inference")
def _inequalities(ctx: SampleContext):
    t = ctx.algebra
    rel = ctx.frame("base")
    coh = coherence_matrix(rel)
    ctx.expect_implies("Coh(alpha) is closed under consequence", rel,
                       coh, ~bool_product(~coh, t.entails.T), PAIR)
    s = inference_matrix(rel)
    below = rel.pairs[t.implication[:, t.negation], t.negation[:, None]]
    ctx.expect_implies("alpha |~ beta gives alpha -> ~beta <= ~alpha", rel,
                       s, below, PAIR)
    ctx.expect_implies("alpha |~ beta gives ~beta <= ~alpha", rel,
                       s, map_N(rel).pairs, PAIR)

    d = ctx.frame("d-base")
    ctx.expect_equal("left disjunction: alpha <= beta iff "
                     "alpha | beta <= beta", d,
                     d.pairs, d.pairs[t.join, t.index[None, :]], PAIR)


@suite("lemma-weak-inequalities", "Weak bases from coherent implications "
       "and the entrenchment bounds of weak inference")
def _weak_inequalities(ctx: SampleContext):
    t = ctx.algebra
    rows, _ = _grid(ctx)
    rel = ctx.frame("base")
    coh = coherence_matrix(rel)
    ctx.expect_implies("alpha -> beta in Coh(alpha) gives a weak base Cn(beta)",
                       rel, coh[rows, t.implication], weak_base_matrix(rel),
                       PAIR)
    w = inference_matrix(rel, weak=True)
    below = rel.pairs[t.implication[:, t.negation], t.negation[:, None]]
    ctx.expect_implies("alpha |~w beta gives alpha -> ~beta <= ~alpha", rel,
                       w, below, PAIR)
    ctx.expect_implies("alpha |~w beta gives ~beta <= ~alpha", rel,
                       w, map_N(rel).pairs, PAIR)


@suite("lemma-bases-and-weak-bases", "Maximal bases give weak bases; "
       "maximal weak bases conditionalize into Coh")
def _bases_and_weak_bases(ctx: SampleContext):
    t = ctx.algebra
    rel = ctx.frame("base")
    bases_ok = base_matrix(rel)
    weak_ok = weak_base_matrix(rel)
    for premise in ctx.universe.classes():
        a = premise.mask
        for u in max_bases(rel, premise):
            g = u.generator.mask
            ctx.expect("Cn(U, alpha) is a weak base for maximal U", rel,
                       bool(weak_ok[a, t.meet[g, a]]),
                       ctx.describe(("alpha", "U"), (a, g)))
        for u in weak_max_bases(rel, premise):
            g = u.generator.mask
            ctx.expect("Cn(U^alpha) is a base for maximal weak U", rel,
                       bool(bases_ok[a, t.implication[a, g]]),
                       ctx.describe(("alpha", "U"), (a, g)))
    ctx.count_extensions(rel, weak=True)


@suite("lemma-coherence", "How Coh moves between premises under bounded "
       "cut, bounded right monotonicity and right monotonicity")
def _coherence(ctx: SampleContext):
    t = ctx.algebra
    rows, cols = _grid(ctx)

    rel = ctx.frame("base")
    ctx.expect_row_inclusions(
        "Coh is the same for equivalent premises", rel,
        coherence_matrix(rel), t.entails & t.entails.T, rows, t.meet)

    bc = ctx.frame("bc")
    ctx.expect_row_inclusions(
        "bounded cut: ~beta <= ~alpha gives Coh(alpha) in Coh(alpha & beta)",
        bc, coherence_matrix(bc), map_N(bc).pairs, rows, t.meet)

    br = ctx.frame("br")
    ctx.expect_row_inclusions(
        "bounded right monotonicity: ~beta <= ~alpha gives "
        "Coh(alpha & beta) in Coh(alpha)",
        br, coherence_matrix(br), map_N(br).pairs, t.meet, rows)

    bcr = ctx.frame("bcr")
    coh = coherence_matrix(bcr)
    condition = map_N(bcr).pairs
    check = "bounded cut and right monotonicity: Coh(alpha) = Coh(alpha & beta)"
    ctx.expect_row_inclusions(check, bcr, coh, condition, rows, t.meet)
    ctx.expect_row_inclusions(check, bcr, coh, condition, t.meet, rows)

    rm = ctx.frame("base+RightMonotonicity")
    ctx.expect_row_inclusions(
        "right monotonicity: alpha |- beta gives Coh(alpha) in Coh(beta)",
        rm, coherence_matrix(rm), t.entails, rows, cols)


@suite("lemma-weak-coherence", "How weak bases move between premises under "
       "the weak bounded rules")
def _weak_coherence(ctx: SampleContext):
    t = ctx.algebra
    rows, cols = _grid(ctx)

    wbc = ctx.frame("base+WeakBoundedCut")
    ctx.expect_row_inclusions(
        "weak bounded cut: ~alpha | ~beta <= ~alpha gives "
        "Bw(alpha) in Bw(alpha & beta)",
        wbc, weak_base_matrix(wbc), map_N_arrow(wbc).pairs, rows, t.meet)

    wbr = ctx.frame("base+WeakBoundedRightMonotonicity")
    ctx.expect_row_inclusions(
        "weak bounded right monotonicity: ~alpha | ~beta <= ~alpha gives "
        "Bw(alpha & beta) in Bw(alpha)",
        wbr, weak_base_matrix(wbr), map_N_arrow(wbr).pairs, t.meet, rows)

    both = ctx.frame("base+WeakBoundedCut+WeakBoundedRightMonotonicity")
    weak_ok = weak_base_matrix(both)
    condition = map_N_arrow(both).pairs
    check = "weak bounded rules: Bw(alpha) = Bw(alpha & beta)"
    ctx.expect_row_inclusions(check, both, weak_ok, condition, rows, t.meet)
    ctx.expect_row_inclusions(check, both, weak_ok, condition, t.meet, rows)

    rel = ctx.frame("t")
    report = rel.check([ENTRENCHMENT_PROPERTIES["WeakRightMonotonicity"]])
    if report.holds("WeakRightMonotonicity"):
        ctx.expect_row_inclusions(
            "weak right monotonicity: alpha |- beta gives Bw(alpha) in "
            "Bw(beta)", rel, weak_base_matrix(rel), t.entails, rows, cols)


@suite("lemma-ccf-to-weak", "On weak disjunctive frames weak inference is "
       "~alpha | ~beta <= ~alpha, and it agrees with strong inference")
def _ccf_to_weak(ctx: SampleContext):
    rel = ctx.frame("wd-base")
    s = inference_matrix(rel)
    w = inference_matrix(rel, weak=True)
    ctx.expect_equal("alpha |~w beta iff ~alpha | ~beta <= ~alpha", rel,
                     map_N_arrow(rel).pairs, w, PAIR)
    ctx.expect_implies("strong inference implies weak inference", rel,
                       s, w, PAIR)

    tc = ctx.frame("wd-tc")
    s = inference_matrix(tc)
    w = inference_matrix(tc, weak=True)
    ctx.expect_equal("alpha |~w beta iff ~alpha | ~beta <= ~alpha", tc,
                     map_N_arrow(tc).pairs, w, PAIR)
    ctx.expect_implies("transitive and conjunctive: weak implies strong",
                       tc, w, s, PAIR)
    ctx.count_extensions(rel, weak=True)


@suite("thm-ccf-to-strong", "On disjunctive frames alpha |~ beta iff "
       "~beta <= ~alpha, and strong equals weak inference")
def _ccf_to_strong(ctx: SampleContext):
    rel = ctx.frame("d-base")
    s = inference_matrix(rel)
    ctx.expect_equal("alpha |~ beta iff ~beta <= ~alpha", rel,
                     map_N(rel).pairs, s, PAIR)
    ctx.expect_equal("strong equals weak inference", rel,
                     s, inference_matrix(rel, weak=True), PAIR)
    ctx.count_extensions(rel)


SOUNDNESS_TIERS = (
    ("base", NM_CORE),
    ("bcr", NM_CORE + ("Cut", "CautiousMonotonicity")),
    ("ba", NM_CORE + ("Cut", "CautiousMonotonicity", "Loop")),
    ("tc", NM_CORE + ("Or",)),
)


@suite("thm-soundness", "Maxiconsistent inference is a nonmonotonic "
       "consequence relation, gaining rules with the frame's rules")
def _soundness(ctx: SampleContext):
    for profile, names in SOUNDNESS_TIERS:
        rel = ctx.frame(profile)
        _check_consequence(ctx, "inference of a {} frame".format(profile),
                           _inference(rel, weak=False), names)
        ctx.count_extensions(rel)


@suite("thm-weak-soundness", "Weak maxiconsistent inference is a "
       "nonmonotonic consequence relation")
def _weak_soundness(ctx: SampleContext):
    rel = ctx.frame("base")
    _check_consequence(ctx, "weak inference of a base frame",
                       _inference(rel, weak=True), NM_CORE)
    ctx.count_extensions(rel, weak=True)


@suite("cor-definition-equals-strong", "N is maxiconsistent inference on "
       "disjunctive frames and N-> is weak inference on weak disjunctive "
       "frames")
def _definition_equals_strong(ctx: SampleContext):
    for profile in ("d-base", "d-bcr", "d-tc"):
        rel = ctx.frame(profile)
        ctx.expect_equal("N(<=) = |~ on {}".format(profile), rel,
                         map_N(rel).pairs, inference_matrix(rel), PAIR)
    for profile in ("wd-base", "wd-tc"):
        rel = ctx.frame(profile)
        ctx.expect_equal("N->(<=) = |~w on {}".format(profile), rel,
                         map_N_arrow(rel).pairs,
                         inference_matrix(rel, weak=True), PAIR)


@suite("lemma-iso", "P and N are inverse to each other")
def _iso(ctx: SampleContext):
    rel = ctx.frame("base")
    ctx.expect_equal("P(N(<=)) = <=", rel,
                     rel.pairs, map_P(map_N(rel)).pairs, PAIR)
    cons = ctx.consequence("nm")
    ctx.expect_equal("N(P(|~)) = |~", cons,
                     cons.pairs, map_N(map_P(cons)).pairs, PAIR)


DISJUNCTIVE_SOUNDNESS = (
    ("d-base", NM_CORE),
    ("d-bc", ("Cut",)),
    ("d-br", ("CautiousMonotonicity",)),
    ("d-base+Acyclicity", ("Loop",)),
    ("d-base+RightConjunction", ("Or",)),
)


@suite("thm-disjunctive-soundness", "On disjunctive frames N(<=) is "
       "inference and each bounded rule yields its consequence rule")
def _disjunctive_soundness(ctx: SampleContext):
    for profile, names in DISJUNCTIVE_SOUNDNESS:
        rel = ctx.frame(profile)
        mapped = map_N(rel)
        ctx.expect_equal("N(<=) = |~ on {}".format(profile), rel,
                         mapped.pairs, inference_matrix(rel), PAIR)
        _check_consequence(ctx, "N of a {} frame".format(profile),
                           mapped, names)


COMPLETENESS = (
    ("nm", FRAME_AXIOMS + ("LeftDisjunction",)),
    ("d", ("BoundedCut",)),
    ("cm", ("BoundedRightMonotonicity",)),
    ("nm+Loop", ("Acyclicity",)),
    ("nm+Or", ("RightConjunction",)),
)


@suite("thm-completeness", "P(|~) is a disjunctive frame whose inference "
       "is |~, gaining bounded rules from consequence rules")
def _completeness(ctx: SampleContext):
    for profile, names in COMPLETENESS:
        cons = ctx.consequence(profile)
        rel = map_P(cons)
        ctx.expect_equal("inference of P(|~) is |~ for {}".format(profile),
                         cons, cons.pairs, inference_matrix(rel), PAIR)
        _check_entrenchment(ctx, "P of a {} relation".format(profile),
                            rel, names)


WEAK_COMPLETENESS = (
    ("wd-base", NM_CORE),
    ("wd-base+WeakBoundedCut", ("Cut",)),
    ("wd-base+WeakBoundedRightMonotonicity", ("CautiousMonotonicity",)),
    ("wd-base+WeakAcyclicity", ("Loop",)),
    ("wd-base+RightConjunction", ("Or",)),
)


@suite("thm-weak-completeness", "On weak disjunctive frames N->(<=) is weak "
       "inference and each weak bounded rule yields its consequence rule")
def _weak_completeness(ctx: SampleContext):
    for profile, names in WEAK_COMPLETENESS:
        rel = ctx.frame(profile)
        ctx.expect_equal("N->(<=) = |~w on {}".format(profile), rel,
                         map_N_arrow(rel).pairs,
                         inference_matrix(rel, weak=True), PAIR)
        _check_consequence(ctx, "weak inference of a {} frame".format(
            profile), _inference(rel, weak=True), names)


@suite("lemma-weak-iso", "Round trips through P->, N-> and Ptr")
def _weak_iso(ctx: SampleContext):
    cons = ctx.consequence("nm")
    ctx.expect_equal("N->(P->(|~)) = |~", cons,
                     cons.pairs, map_N_arrow(map_P_arrow(cons)).pairs, PAIR)

    rel = ctx.frame("base+RightMonotonicity+RightConjunction")
    ctx.expect_equal("P->(N->(<=)) = <= with right monotonicity and "
                     "conjunction", rel,
                     rel.pairs, map_P_arrow(map_N_arrow(rel)).pairs, PAIR)

    rel = ctx.frame("tc")
    ctx.expect_equal("Ptr(N->(<=)) = <= for transitive conjunctive <=", rel,
                     rel.pairs, map_P_tr(map_N_arrow(rel)).pairs, PAIR)

    cons = ctx.consequence("nm+Loop")
    ctx.expect_equal("N->(Ptr(|~)) = |~ with loop", cons,
                     cons.pairs, map_N_arrow(map_P_tr(cons)).pairs, PAIR)


@suite("thm-completeness-preferential", "For preferential |~, P->(|~) is "
       "weak disjunctive, transitive and conjunctive, and both inference "
       "modes give back |~")
def _completeness_preferential(ctx: SampleContext):
    cons = ctx.consequence("p")
    rel = map_P_arrow(cons)
    for weak in (False, True):
        ctx.expect_equal(_mode("inference of P->(|~) is |~", weak), cons,
                         cons.pairs, inference_matrix(rel, weak), PAIR)
    _check_entrenchment(ctx, "P-> of a preferential relation", rel,
                        FRAME_AXIOMS + ("WeakLeftDisjunction", "Transitivity",
                                        "RightConjunction"))


@suite("thm-completeness-strong-cumulative", "For |~ with loop, Ptr(|~) is "
       "weak disjunctive and transitive and its weak inference is |~")
def _completeness_strong_cumulative(ctx: SampleContext):
    cons = ctx.consequence("nm+Loop")
    rel = map_P_tr(cons)
    ctx.expect_equal("weak inference of Ptr(|~) is |~", cons,
                     cons.pairs, inference_matrix(rel, weak=True), PAIR)
    _check_entrenchment(ctx, "Ptr of a relation with loop", rel,
                        FRAME_AXIOMS + ("WeakLeftDisjunction",
                                        "Transitivity"))


def _class_duality(ctx: SampleContext, consequence_class: str,
                   entrenchment_class: str, to_entrenchment, modes,
                   image_class: Optional[str] = None):
    """Both compositions of ``to_entrenchment`` with (weak) inference are
    identities on the sampled members of the two classes.

    ``image_class`` is where the map sends consequence relations when it
    is wider than ``entrenchment_class``.
    """
    image_class = image_class or entrenchment_class
    cons_rules = [p.name for p in consequence_profile(
        consequence_class).properties]
    frame_rules = [p.name for p in entrenchment_profile(
        image_class).properties]

    cons = ctx.consequence(consequence_class)
    mapped = to_entrenchment(cons)
    _check_entrenchment(ctx, "map of a {} relation is in {}".format(
        consequence_class, image_class), mapped, frame_rules)
    for weak in modes:
        ctx.expect_equal(
            _mode("inference after the map is the identity", weak), cons,
            cons.pairs, inference_matrix(mapped, weak), PAIR)

    rel = ctx.frame(entrenchment_class)
    for weak in modes:
        inferred = _inference(rel, weak)
        _check_consequence(ctx, _mode("inference of a {} frame is in {}"
                                      .format(entrenchment_class,
                                              consequence_class), weak),
                           inferred, cons_rules)
        ctx.expect_equal(
            _mode("the map after inference is the identity", weak), rel,
            rel.pairs, to_entrenchment(inferred).pairs, PAIR)
    ctx.count_extensions(rel)


BOTH_MODES = (False, True)


@suite("corollary-classes-NM", "NM is dual to d-E")
def _classes_nm(ctx: SampleContext):
    _class_duality(ctx, "nm", "d-base", map_P, BOTH_MODES)


@suite("corollary-classes-D", "D is dual to d-BC")
def _classes_d(ctx: SampleContext):
    _class_duality(ctx, "d", "d-bc", map_P, BOTH_MODES)


@suite("corollary-classes-CM", "CM is dual to d-BR")
def _classes_cm(ctx: SampleContext):
    _class_duality(ctx, "cm", "d-br", map_P, BOTH_MODES)


@suite("corollary-classes-C", "C is dual to d-BCR")
def _classes_c(ctx: SampleContext):
    _class_duality(ctx, "c", "d-bcr", map_P, BOTH_MODES)


@suite("corollary-classes-SC", "SC is dual to d-BA and weakly dual to "
       "transitive conjunctive weak disjunctive frames")
def _classes_sc(ctx: SampleContext):
    _class_duality(ctx, "sc", "d-bcr+Acyclicity", map_P, BOTH_MODES)
    _class_duality(ctx, "sc", "wd-tc", map_P_tr, (True,),
                   image_class="wd-t")


@suite("corollary-classes-P", "P is dual and weakly dual to wd-TC")
def _classes_p(ctx: SampleContext):
    _class_duality(ctx, "p", "wd-tc", map_P_arrow, BOTH_MODES)


def list_suites() -> List[str]:
    return list(SUITES)


def describe_suite(name: str) -> str:
    if name not in SUITES:
        raise UnknownSuiteError(name)
    return SUITES[name].description


def _run_sample(name: str, index: int, seed: int,
                n_atoms: int) -> SampleResult:
    ctx = SampleContext(index, seed, n_atoms)
    SUITES[name].run(ctx)
    return ctx.result


def verify_suite(name: str, n_atoms: int = 2, samples: int = 20,
                 seed: Optional[int] = None,
                 workers: Optional[int] = None) -> VerificationReport:
    """Run suite ``name`` on ``samples`` seeded samples.

    Samples are independent; with more than one worker they run on a
    thread pool, and results are still reported in sample order.
    """
    if name not in SUITES:
        raise UnknownSuiteError(name)
    if samples < 0:
        raise ValueError("samples must not be negative")
    if seed is None:
        seed = constants.ENTRENCH_DEFAULT_SEED
    if workers is None:
        workers = constants.ENTRENCH_VERIFY_WORKERS
    # fail early on an unusable universe
    class_algebra(universe_of(n_atoms))

    def run(index: int) -> SampleResult:
        return _run_sample(name, index, seed, n_atoms)

    if workers > 1 and samples > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(run, range(samples)))
    else:
        results = [run(index) for index in range(samples)]

    report = VerificationReport(name, SUITES[name].description, n_atoms,
                                samples, seed, results)
    logger.info("Suite %s: %d samples, %d checks, %d failures", name,
                samples, report.checks, len(report.failures))
    return report
