import json
import logging

import click
import prettytable as pt

import entrench

from entrench.core._private import constants, logging_utils
from entrench.core._private.cli_logger import (
    add_click_logging_options, cli_logger, handle_entrench_errors)
from entrench.core._private.duality import MAPS
from entrench.core._private.harness.random_relations import ATOM_NAMES
from entrench.core._private.harness.suites import list_suites, verify_suite
from entrench.core._private.harness.theory_file import (
    KIND_CONSEQUENCE, KIND_ENTRENCHMENT, load_theory, theory_relation)
from entrench.core._private.log_timer import LogTimer
from entrench.core._private.logic.formula import parse_class
from entrench.core._private.maxiconsistent import (
    credulous_infers, extensions as extensions_of, infers, sceptical)
from entrench.core._private.relation.consequence import check_nm_properties
from entrench.core._private.relation.entrenchment import (
    check_entrenchment_properties)
from entrench.scripts.demo import demo

logger = logging.getLogger(__name__)

SUITE_ALL = "all"
OUTPUT_FORMATS = ["text", "json"]


def profiles_option(f):
    return click.option(
        "--profiles",
        "profiles_file",
        required=False,
        type=click.Path(exists=True, dir_okay=False),
        help="A YAML file of extra profile presets merged over the "
        "shipped ones.")(f)


def _load(theory_file, profiles_file):
    theory = load_theory(theory_file, profiles_file)
    with LogTimer("Closing {} statements of {}".format(
            len(theory.statements), theory_file)):
        rel = theory_relation(theory)
    return theory, rel


def _require_frame(theory, command):
    if theory.kind != KIND_ENTRENCHMENT:
        cli_logger.abort(
            "'{}' needs an entrenchment frame; {} holds consequence "
            "statements.", command, theory.path)


def _property_report(theory, rel):
    if theory.kind == KIND_CONSEQUENCE:
        return check_nm_properties(rel)
    return check_entrenchment_properties(rel)


def _properties_table(report) -> str:
    tb = pt.PrettyTable()
    tb.field_names = ["property", "kind", "status", "witness"]
    tb.align = "l"
    for result in report:
        witness = ", ".join("{}={}".format(k, v)
                            for k, v in result.witness_text.items())
        tb.add_row([result.name, result.kind, result.status, witness])
    return tb.get_string()


@click.group()
@click.option(
    "--logging-level",
    required=False,
    default=constants.LOGGER_LEVEL,
    type=str,
    help=constants.LOGGER_LEVEL_HELP)
@click.option(
    "--logging-format",
    required=False,
    default=constants.LOGGER_FORMAT,
    type=str,
    help=constants.LOGGER_FORMAT_HELP)
@click.version_option(version=entrench.__version__)
def cli(logging_level, logging_format):
    level = logging.getLevelName(logging_level.upper())
    logging_utils.setup_logger(level, logging_format)
    cli_logger.set_format(format_tmpl=logging_format)


@cli.command()
@click.argument("theory_file", required=True, type=str)
@click.option(
    "--premise", required=True, type=str, help="The premise formula.")
@click.option(
    "--conclusion", required=True, type=str, help="The conclusion formula.")
@click.option(
    "--weak",
    is_flag=True,
    default=False,
    help="Use weak maxiconsistent inference.")
@click.option(
    "--credulous",
    is_flag=True,
    default=False,
    help="Accept a conclusion that holds in at least one extension.")
@profiles_option
@add_click_logging_options
@handle_entrench_errors
def query(theory_file, premise, conclusion, weak, credulous, profiles_file):
    """Answer whether the premise infers the conclusion.

    For a frame this is (weak) maxiconsistent inference; for a file of
    consequence statements it is membership in the closed relation."""
    theory, rel = _load(theory_file, profiles_file)
    a = parse_class(premise, theory.atoms)
    b = parse_class(conclusion, theory.atoms)
    if theory.kind == KIND_CONSEQUENCE:
        if weak or credulous:
            cli_logger.abort("--weak and --credulous only apply to "
                             "entrenchment frames.")
        answer = rel.holds(a, b)
    elif credulous:
        answer = credulous_infers(rel, a, b, weak)
    else:
        answer = infers(rel, a, b, weak)
    click.echo("yes" if answer else "no")


@cli.command()
@click.argument("theory_file", required=True, type=str)
@click.option(
    "--premise", required=True, type=str, help="The premise formula.")
@click.option(
    "--weak",
    is_flag=True,
    default=False,
    help="List weak extensions instead.")
@profiles_option
@add_click_logging_options
@handle_entrench_errors
def extensions(theory_file, premise, weak, profiles_file):
    """List the extensions of a premise and their intersection."""
    theory, rel = _load(theory_file, profiles_file)
    _require_frame(theory, "extensions")
    a = parse_class(premise, theory.atoms)
    found = extensions_of(rel, a, weak)
    click.echo("{}extensions at {}: {}".format(
        "weak " if weak else "", premise, len(found)))
    for u in found:
        click.echo("  {}".format(u))
    click.echo("sceptical: {}".format(sceptical(rel, a, weak)))


@cli.command()
@click.argument("theory_file", required=True, type=str)
@click.option(
    "--format",
    "output_format",
    type=click.Choice(OUTPUT_FORMATS),
    default="text",
    help="Output format.")
@profiles_option
@add_click_logging_options
@handle_entrench_errors
def properties(theory_file, output_format, profiles_file):
    """Check the closed relation of a theory file against every rule."""
    theory, rel = _load(theory_file, profiles_file)
    report = _property_report(theory, rel)
    if output_format == "json":
        result = rel.to_dict(summary=True)
        result.update(report.to_dict())
        click.echo(json.dumps(result, indent=2))
        return
    cli_logger.labeled_value("Relation", repr(rel))
    click.echo(_properties_table(report))


@cli.command()
@click.argument("theory_file", required=True, type=str)
@click.option(
    "--map",
    "map_name",
    required=True,
    type=click.Choice(list(MAPS)),
    help="The duality map to apply.")
@click.option(
    "--summary",
    is_flag=True,
    default=False,
    help="Print the pair count instead of the pairs.")
@click.option(
    "--format",
    "output_format",
    type=click.Choice(OUTPUT_FORMATS),
    default="text",
    help="Output format.")
@profiles_option
@add_click_logging_options
@handle_entrench_errors
def dual(theory_file, map_name, summary, output_format, profiles_file):
    """Translate a closed relation with one of the duality maps."""
    theory, rel = _load(theory_file, profiles_file)
    duality = MAPS[map_name]
    if theory.kind != duality.source:
        cli_logger.abort("Map {} applies to {} relations; {} holds {} "
                         "statements.", map_name, duality.source,
                         theory_file, theory.kind)
    mapped = duality.apply(rel)
    if duality.target == KIND_CONSEQUENCE:
        report = check_nm_properties(mapped)
    else:
        report = check_entrenchment_properties(mapped)

    if output_format == "json":
        result = {"map": map_name, "relation": mapped.to_dict(summary)}
        result.update(report.to_dict())
        click.echo(json.dumps(result, indent=2))
        return
    click.echo("{}: {} pairs".format(mapped.profile, mapped.pair_count))
    if not summary:
        for left, right in mapped.describe_pairs():
            click.echo("  {} {} {}".format(left, mapped.symbol, right))
    click.echo(_properties_table(report))


@cli.command()
@click.option(
    "--suite",
    "suite_name",
    required=False,
    type=str,
    help="The suite to run, or '{}' for every suite.".format(SUITE_ALL))
@click.option(
    "--atoms",
    "n_atoms",
    type=click.IntRange(min=1, max=len(ATOM_NAMES)),
    default=2,
    show_default=True,
    help="Number of atoms of the sampled universe.")
@click.option(
    "--samples",
    type=click.IntRange(min=0),
    default=20,
    show_default=True,
    help="Number of seeded samples.")
@click.option(
    "--seed",
    type=int,
    default=None,
    help="Base seed of the samples. Defaults to ENTRENCH_DEFAULT_SEED.")
@click.option(
    "--workers",
    type=click.IntRange(min=1),
    default=None,
    help="Samples verified concurrently. Defaults to "
    "ENTRENCH_VERIFY_WORKERS.")
@click.option(
    "--format",
    "output_format",
    type=click.Choice(OUTPUT_FORMATS),
    default="text",
    help="Output format.")
@click.option(
    "--list",
    "list_only",
    is_flag=True,
    default=False,
    help="List the available suites and exit.")
@add_click_logging_options
@handle_entrench_errors
def verify(suite_name, n_atoms, samples, seed, workers, output_format,
           list_only):
    """Run theorem-verification suites on seeded random relations."""
    if list_only:
        for name in list_suites():
            click.echo(name)
        return
    if not suite_name:
        cli_logger.abort("Either --suite or --list is required.")

    if samples == 0:
        cli_logger.warning("No samples requested, nothing will be checked.")
    names = list_suites() if suite_name == SUITE_ALL else [suite_name]
    reports = []
    for name in names:
        with LogTimer("Suite {}".format(name)):
            reports.append(verify_suite(name, n_atoms, samples, seed,
                                        workers))

    if output_format == "json":
        if suite_name == SUITE_ALL:
            click.echo(json.dumps([r.to_dict() for r in reports], indent=2))
        else:
            click.echo(reports[0].to_json())
    else:
        click.echo("\n".join(r.render_text() for r in reports), nl=False)

    failures = sum(len(r.failures) for r in reports)
    if failures:
        cli_logger.abort("{} failure(s) in {} suite(s).", failures,
                         sum(1 for r in reports if not r.ok))
    if output_format == "text":
        cli_logger.success("All {} suite(s) passed.", len(reports))


cli.add_command(query)
cli.add_command(extensions)
cli.add_command(properties)
cli.add_command(dual)
cli.add_command(verify)

# Demo commands
cli.add_command(demo)


def main():
    return cli()


if __name__ == "__main__":
    main()
