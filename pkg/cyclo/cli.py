"""
Command-line interface for cyclo
"""

import json
import logging
import sys
import traceback
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

import click
from rich.console import Console
from rich.markup import escape

from cyclo import __version__
from cyclo.catalog import CatalogRef, build, build_matrix
from cyclo.classify import classify as classify_digraph
from cyclo.config import ConfigManager, Profile
from cyclo.digraph import Digraph, from_hermitian, hermitian_adjacency
from cyclo.equivalence import Mode, canonical_form, equiv as equiv_matrices, strong_equiv
from cyclo.exceptions import CapExceeded, CycloError, FormatError
from cyclo.formats import dump_json, encode_document, load_document, poly_to_json, to_dot
from cyclo.gaussint import HermMatrix, RadiusClass, char_poly, displaced_rank, min_eigen_exceeds, numeric_spectrum, radius_class
from cyclo.harness import (
    RadiusFilter,
    collect_classes,
    resolve_threads,
    verify_gm2_table,
    verify_lattice_table,
    verify_mckee_smyth,
    verify_sqrt2,
    verify_theorem,
)
from cyclo.reporter import Reporter
from cyclo.signed import SignedGraph

logger = logging.getLogger(__name__)

console = Console()


def _fail(error: Exception, verbose: bool):
    """Print an error in red and exit 1"""
    console.print(f"[red]✗ Error: {escape(str(error))}[/red]")
    if verbose:
        console.print(escape(traceback.format_exc()))
    else:
        console.print("[dim]Run with --verbose for more details[/dim]")
    sys.exit(1)


def _matrix_of(document: Any) -> HermMatrix:
    if isinstance(document, Digraph):
        return hermitian_adjacency(document)
    if isinstance(document, SignedGraph):
        return document.adjacency()
    if isinstance(document, HermMatrix):
        return document
    raise FormatError("Expected a digraph, signed graph or matrix document")


def _digraph_of(document: Any) -> Digraph:
    if isinstance(document, Digraph):
        return document
    if isinstance(document, HermMatrix):
        return from_hermitian(document)
    raise FormatError("Expected a digraph or adjacency-matrix document")


def _wants_json(ctx: click.Context, json_flag: Optional[bool]) -> bool:
    if json_flag is not None:
        return json_flag
    return ctx.obj['profile'].output_format == 'json'


def _finish(ctx: click.Context, data: Dict[str, Any], output: Optional[str], passed: bool = True):
    """Write the JSON report when asked for, then exit 0 iff passed"""
    if output:
        ctx.obj['reporter'].generate_json_report(data, output)
        console.print(f"[green]✓ Report saved: {escape(output)}[/green]")
    sys.exit(0 if passed else 1)


@click.group()
@click.version_option(version=__version__)
@click.option('--verbose', '-v', is_flag=True, help='Debug logging and tracebacks on error')
@click.option('--config', '-c', type=click.Path(), help='Path to config file (default: ~/.cyclo/config.yaml or .cyclo.yaml)')
@click.option('--profile', help='Use a profile from the config file')
@click.pass_context
def main(ctx: click.Context, verbose: bool, config: Optional[str], profile: Optional[str]):
    """
    cyclo - exact spectral classification of digraphs

    Quick Examples:

        cyclo gen Delta1 3                     # Generate a catalog digraph
        cyclo gen "Square(1,0,2,0)" -f dot     # DOT source for a figure
        cyclo spectrum digraph.json            # Exact radius class
        cyclo classify digraph.json            # Container and lattice
        cyclo equiv a.json b.json --strong     # Switching equivalence
        cyclo enumerate --n 4 --radius le2     # Exhaustive enumeration
        cyclo verify theorem --n 4             # End-to-end check
    """
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING)
    ctx.ensure_object(dict)
    ctx.obj['verbose'] = verbose
    ctx.obj['config_path'] = Path(config) if config else None
    ctx.obj['reporter'] = Reporter(console)
    if ctx.invoked_subcommand == 'config':
        return
    try:
        ctx.obj['profile'] = ConfigManager(ctx.obj['config_path']).resolve_profile(profile)
    except ValueError as e:
        _fail(e, verbose)


@main.command()
@click.argument('family')
@click.argument('params', nargs=-1)
@click.option('--format', '-f', 'fmt', type=click.Choice(['json', 'dot', 'matrix']), default='json', help='Output format')
@click.option('--output', '-o', type=click.Path(), help='Write to a file instead of stdout')
@click.pass_context
def gen(ctx: click.Context, family: str, params: Tuple[str, ...], fmt: str, output: Optional[str]):
    """
    Generate a catalog digraph or signed graph

    FAMILY is a name such as Delta1, DeltaI, S14, Square, SignedO; parameters
    follow as words or in parentheses: "Delta1 3" or "Delta1(3)".
    """
    try:
        ref = CatalogRef.parse(family, params)
        if fmt == 'matrix':
            text = dump_json(encode_document(build_matrix(ref)))
        elif fmt == 'dot':
            text = to_dot(build(ref), str(ref))
        else:
            text = dump_json(encode_document(build(ref)))
        if output:
            Path(output).write_text(text if text.endswith('\n') else text + '\n', encoding='utf-8')
            console.print(f"[green]✓ Wrote {ref} to {escape(output)}[/green]")
        else:
            click.echo(text)
    except (CycloError, ValueError) as e:
        _fail(e, ctx.obj['verbose'])


@main.command()
@click.argument('file', type=click.Path(exists=True, readable=True))
@click.option('--json', 'json_flag', flag_value=True, default=None, help='Print JSON instead of a panel')
@click.pass_context
def spectrum(ctx: click.Context, file: str, json_flag: Optional[bool]):
    """Exact characteristic polynomial and radius class of a document"""
    try:
        H = _matrix_of(load_document(file))
        poly = char_poly(H)
        radius = radius_class(H)
        rank = displaced_rank(H) if radius is not RadiusClass.GREATER_THAN_2 else None
        above = min_eigen_exceeds(H)
        eigenvalues = [float(x) for x in numeric_spectrum(H)]
        if _wants_json(ctx, json_flag):
            click.echo(dump_json({
                'char_poly': poly_to_json(poly),
                'radius': radius.value,
                'displaced_rank': rank,
                'min_eigen_exceeds_neg_sqrt2': above,
                'numeric_spectrum': eigenvalues,
            }))
        else:
            ctx.obj['reporter'].print_spectrum(poly, radius, rank, above, eigenvalues)
    except (CycloError, ValueError, FileNotFoundError) as e:
        _fail(e, ctx.obj['verbose'])


@main.command()
@click.argument('file', type=click.Path(exists=True, readable=True))
@click.option('--json/--text', 'json_flag', default=None, help='Output format (default from profile)')
@click.option('--output', '-o', type=click.Path(), help='Write a JSON report')
@click.pass_context
def classify(ctx: click.Context, file: str, json_flag: Optional[bool], output: Optional[str]):
    """Radius class, container with witness, and lattice of a connected digraph"""
    try:
        digraph = _digraph_of(load_document(file))
        result = classify_digraph(digraph, cap=ctx.obj['profile'].equivalence_cap)
        if _wants_json(ctx, json_flag):
            click.echo(dump_json(result.to_dict()))
        else:
            ctx.obj['reporter'].print_classification(result)
    except (CycloError, ValueError, FileNotFoundError) as e:
        _fail(e, ctx.obj['verbose'])
    found = result.container is not None or result.radius is RadiusClass.GREATER_THAN_2
    _finish(ctx, {'classification': result.to_dict()}, output, found)


@main.command()
@click.argument('first', type=click.Path(exists=True, readable=True))
@click.argument('second', type=click.Path(exists=True, readable=True))
@click.option('--strong', is_flag=True, help='Strong equivalence only (no negation)')
@click.option('--json', 'json_flag', flag_value=True, default=None, help='Print the witness as JSON')
@click.pass_context
def equiv(ctx: click.Context, first: str, second: str, strong: bool, json_flag: Optional[bool]):
    """
    Decide equivalence of two documents and print a witness

    Exit code is 0 when equivalent, 1 otherwise.
    """
    try:
        H1 = _matrix_of(load_document(first))
        H2 = _matrix_of(load_document(second))
        cap = ctx.obj['profile'].equivalence_cap
        witness = strong_equiv(H1, H2, cap) if strong else equiv_matrices(H1, H2, cap)
    except (CycloError, ValueError, FileNotFoundError) as e:
        _fail(e, ctx.obj['verbose'])
    mode = 'strong' if strong else 'equiv'
    if _wants_json(ctx, json_flag):
        click.echo(dump_json({'mode': mode, 'witness': witness.to_dict() if witness else None}))
    else:
        ctx.obj['reporter'].print_equivalence(witness, 'strongly' if strong else 'matrix')
    sys.exit(0 if witness is not None else 1)


@main.command()
@click.argument('file', type=click.Path(exists=True, readable=True))
@click.option('--format', '-f', 'fmt', type=click.Choice(['dot', 'json', 'canonical']), default='dot', help='Export format')
@click.option('--output', '-o', type=click.Path(), help='Write to a file instead of stdout')
@click.pass_context
def export(ctx: click.Context, file: str, fmt: str, output: Optional[str]):
    """Convert a document to DOT, normalised JSON or its canonical form"""
    try:
        document = load_document(file)
        if fmt == 'dot':
            text = to_dot(document, Path(file).stem)
        elif fmt == 'canonical':
            text = dump_json(encode_document(canonical_form(_matrix_of(document), Mode.STRONG,
                                                            ctx.obj['profile'].equivalence_cap)))
        else:
            text = dump_json(encode_document(document))
        if output:
            Path(output).write_text(text if text.endswith('\n') else text + '\n', encoding='utf-8')
            console.print(f"[green]✓ Exported to {escape(output)}[/green]")
        else:
            click.echo(text)
    except (CycloError, ValueError, FileNotFoundError) as e:
        _fail(e, ctx.obj['verbose'])


def _check_enumeration_n(n: int, profile: Profile):
    if n > profile.enumeration_cap:
        raise CapExceeded(f"n = {n} exceeds the enumeration cap of {profile.enumeration_cap} in profile '{profile.name}'")


@main.command(name='enumerate')
@click.option('--n', 'n', type=int, required=True, help='Number of vertices (1..6)')
@click.option('--radius', type=click.Choice([f.value for f in RadiusFilter]), default='le2', help='Spectral filter')
@click.option('--dedup/--no-dedup', default=None, help='One digraph per switching class (default from profile)')
@click.option('--prune/--no-prune', default=None, help='Cut subtrees whose leading block fails the filter')
@click.option('--threads', type=int, help='Worker count (overrides the profile; capped by CYCLO_THREADS)')
@click.option('--list', 'list_digraphs', is_flag=True, help='Print the digraphs as JSON lines')
@click.option('--output', '-o', type=click.Path(), help='Write a JSON report')
@click.pass_context
def enumerate_command(ctx: click.Context, n: int, radius: str, dedup: Optional[bool], prune: Optional[bool],
                      threads: Optional[int], list_digraphs: bool, output: Optional[str]):
    """
    Enumerate connected digraphs on n vertices

    Prints the counts, or with --list the digraphs themselves (one class
    representative each under --dedup).
    """
    profile = ctx.obj['profile']
    dedup = profile.dedup if dedup is None else dedup
    prune = profile.prune if prune is None else prune
    try:
        _check_enumeration_n(n, profile)
        worker_count = resolve_threads(threads, profile.threads)
        report, digraphs = collect_classes(n, RadiusFilter(radius), prune, worker_count, dedup)
    except (CycloError, ValueError) as e:
        _fail(e, ctx.obj['verbose'])
    if list_digraphs:
        for digraph in digraphs:
            click.echo(json.dumps(encode_document(digraph)))
    else:
        ctx.obj['reporter'].print_enumeration(report)
    _finish(ctx, {'enumeration': report.to_dict()}, output, report.passed)


@main.command()
@click.argument('target', type=click.Choice(['theorem', 'sqrt2', 'gm2', 'lattice', 'mckee']))
@click.option('--n', 'n', type=int, default=4, help='Number of vertices for theorem and sqrt2 (default 4)')
@click.option('--threads', type=int, help='Worker count (overrides the profile; capped by CYCLO_THREADS)')
@click.option('--output', '-o', type=click.Path(), help='Write a JSON report')
@click.pass_context
def verify(ctx: click.Context, target: str, n: int, threads: Optional[int], output: Optional[str]):
    """
    Run an end-to-end verification; exit code 0 iff there are no failures

    theorem and sqrt2 enumerate all digraphs on n vertices; gm2, lattice and
    mckee check the tables of maximal digraphs and signed graphs.
    """
    profile = ctx.obj['profile']
    reporter = ctx.obj['reporter']
    reporter.print_header(f"verify {target}")
    try:
        if target in ('theorem', 'sqrt2'):
            _check_enumeration_n(n, profile)
            worker_count = resolve_threads(threads, profile.threads)
            run = verify_theorem if target == 'theorem' else verify_sqrt2
            report = run(n, threads=worker_count)
            reporter.print_enumeration(report)
        else:
            runs = {'gm2': verify_gm2_table, 'lattice': verify_lattice_table, 'mckee': verify_mckee_smyth}
            report = runs[target]()
            reporter.print_table_report(report)
    except (CycloError, ValueError) as e:
        _fail(e, ctx.obj['verbose'])
    _finish(ctx, {'verify': target, 'report': report.to_dict()}, output, report.passed)


@main.command()
@click.option('--init', 'init_config', is_flag=True, help='Create an example config file')
@click.option('--list', 'list_profiles', is_flag=True, help='List available profiles')
@click.pass_context
def config(ctx: click.Context, init_config: bool, list_profiles: bool):
    """Create or list configuration profiles"""
    try:
        manager = ConfigManager(ctx.obj['config_path'])
    except ValueError as e:
        _fail(e, ctx.obj['verbose'])
    if init_config:
        path = manager.create_default_config()
        console.print(f"[green]✓ Created example config file: {escape(str(path))}[/green]")
        console.print("\nEdit the file to add your own profiles.")
        console.print("Then use profiles with: cyclo --profile <name> <command>")
        sys.exit(0)
    profiles = manager.list_profiles()
    if not profiles:
        console.print("[yellow]No profiles found.[/yellow]")
        console.print("\nTo create a config file with example profiles, run:")
        console.print("  cyclo config --init")
        sys.exit(0)
    console.print("\n[bold]Available Profiles:[/bold]\n")
    for name, profile in profiles.items():
        desc = f" - {escape(str(profile.description))}" if profile.description else ""
        console.print(f"  [cyan]{escape(str(name))}[/cyan]{desc}")
        console.print(
            f"    [dim]threads={profile.threads or 1} equivalence_cap={profile.equivalence_cap} "
            f"enumeration_cap={profile.enumeration_cap} prune={profile.prune} dedup={profile.dedup} "
            f"output={profile.output_format}[/dim]"
        )
    sys.exit(0)


if __name__ == '__main__':
    main()
