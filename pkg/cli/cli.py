import functools
import sys
from pathlib import Path

import click
from loguru import logger
from rich.markup import escape
from rich.panel import Panel
from rich.progress import Progress, SpinnerColumn, TextColumn

from groups import automorphisms, is_isomorphic
from lambdaenum import Config, count_lambda, enumerate_lambda, load_or_compute
from lambdaop import MAX_LAMBDA_HOME, build_lambda
from morphisms import automorphisms_seeded, semigroup_isomorphic
from setfam import GroundSet
from structure import build_T17, idempotents, zero_element

from .report import aut_summary, export_lambda
from .utils import console, display_table, resolve_group, setup_logging, write_json
from .verify import CHECK_GROUPS, FAULTS, run_suite

MAX_COUNT_GROUND = 7
MAX_DISPLAYED_TABLE = 12


def handle_errors(command):
    """Map library exceptions to exit codes: validation 2, I/O 3, anything else 1."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except (click.ClickException, click.exceptions.Exit, click.Abort):
            raise
        except ValueError as e:
            raise click.UsageError(str(e)) from e
        except OSError as e:
            console.print(f"[red]I/O error: {escape(str(e))}[/red]")
            sys.exit(3)
        except KeyboardInterrupt:
            console.print("\n[yellow]Cancelled by user.[/yellow]")
            sys.exit(1)
        except Exception as e:
            logger.exception(e)
            console.print(f"[red]An error occurred: {escape(str(e))}[/red]")
            sys.exit(1)

    return wrapper


def spinner():
    return Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        console=console,
        transient=True,
    )


@click.group()
@click.option("--log-level", default=Config.LOG_LEVEL, show_default=True, help="Log level for stderr output")
def main(log_level: str):
    """Superextensions λ(G) of small groups."""
    setup_logging(log_level)


@main.command()
@click.argument("n", type=click.IntRange(1, MAX_COUNT_GROUND))
@click.option("--workers", default=Config.WORKERS, show_default=True, type=click.IntRange(1))
@click.option("--split-depth", default=Config.SPLIT_DEPTH, show_default=True, type=click.IntRange(0))
@click.option("--cache-dir", default=Config.CACHE_DIR, show_default=True, type=click.Path(file_okay=False))
@click.option("--write-cache", is_flag=True, help="Load the enumeration cache, enumerating and saving on a miss")
@handle_errors
def count(n: int, workers: int, split_depth: int, cache_dir: str, write_cache: bool):
    """Number of maximal linked upfamilies on N points."""
    with spinner() as progress:
        progress.add_task(description=f"Counting λ({n})...", total=None)
        if write_cache:
            total = len(load_or_compute(cache_dir, n, workers=workers).families)
        else:
            total = count_lambda(n, workers=workers, split_depth=split_depth)
    console.print(str(total))


@main.command(name="enum")
@click.argument("n", type=click.IntRange(1, MAX_COUNT_GROUND))
@click.option("--workers", default=Config.WORKERS, show_default=True, type=click.IntRange(1))
@click.option("--limit", default=None, type=click.IntRange(0), help="Print at most this many families")
@handle_errors
def enum_command(n: int, workers: int, limit):
    """List the maximal linked upfamilies on N points by their minimal members."""
    with spinner() as progress:
        progress.add_task(description=f"Enumerating λ({n})...", total=None)
        families = enumerate_lambda(GroundSet(n), workers=workers)
    shown = families if limit is None else families[:limit]
    for family in shown:
        console.print(family.describe(), markup=False, highlight=False)
    console.print(f"[bold]{len(families)}[/bold] families")


@main.command(name="lambda")
@click.argument("group")
@click.option("--out", type=click.Path(file_okay=False, path_type=Path), help="Write CSV tables and a JSON report here")
@click.option("--t17", is_flag=True, help="Also build the table of the 17 named representatives (C5 only)")
@click.option("--aut/--no-aut", default=True, show_default=True, help="Include the automorphism summary in the report")
@handle_errors
def lambda_command(group: str, out, t17: bool, aut: bool):
    """Build λ(GROUP) and report its structure."""
    g = resolve_group(group)
    with spinner() as progress:
        progress.add_task(description=f"Building λ({g.name})...", total=None)
        L = build_lambda(g)
        table = build_T17(L) if t17 else None

    zero = zero_element(L.semigroup)
    console.print(Panel.fit(
        f"[bold green]{L.name}[/bold green] has {L.size} elements\n"
        f"idempotents: {', '.join(L.label(e) for e in idempotents(L.semigroup))}\n"
        f"zero: {'none' if zero is None else L.label(zero)}",
        border_style="green",
    ))
    if L.size <= MAX_DISPLAYED_TABLE:
        labels = [L.label(i) for i in range(L.size)]
        display_table(f"Cayley table of {L.name}", labels, ([labels[i]] + [labels[x] for x in row] for i, row in enumerate(L.table)), "∗")
    if table is not None:
        display_table("Named representatives", table.names, ([row] + list(entries) for row, entries in zip(table.names, table.entries)), "∗")
        if not table.matches:
            console.print(f"[red]{len(table.mismatches)} products differ from the known table[/red]")
    if out is not None:
        for path in export_lambda(L, out, with_aut=aut, t17=table):
            console.print(f"[green]Wrote {path}[/green]")


@main.command(name="aut")
@click.argument("group")
@handle_errors
def aut_command(group: str):
    """Automorphism groups of GROUP and of λ(GROUP)."""
    g = resolve_group(group)
    with spinner() as progress:
        progress.add_task(description=f"Searching automorphisms of λ({g.name})...", total=None)
        L = build_lambda(g)
        summary = aut_summary(L, automorphisms_seeded(L))
    console.print(f"Aut(G)={summary.group_name}, Aut(lambda(G))={summary.lambda_name}")
    display_table(
        f"Automorphisms of {g.name}",
        ["value"],
        [
            ["|Aut(G)|", summary.group_order],
            ["|Aut(λ(G))|", summary.lambda_order],
            ["kernel of restriction", summary.kernel_size],
            ["lifted Aut(G) normal", summary.lifted_normal],
        ],
    )


@main.command(name="iso")
@click.argument("first")
@click.argument("second")
@handle_errors
def iso_command(first: str, second: str):
    """Decide whether λ(FIRST) and λ(SECOND) are isomorphic."""
    g, h = resolve_group(first), resolve_group(second)
    with spinner() as progress:
        progress.add_task(description="Searching for an isomorphism...", total=None)
        L, M = build_lambda(g), build_lambda(h)
        witness = semigroup_isomorphic(L, M)
    groups_iso = is_isomorphic(g, h) is not None
    console.print(f"groups: {'isomorphic' if groups_iso else 'not isomorphic'}")
    console.print(f"superextensions: {'isomorphic' if witness is not None else 'not isomorphic'}")
    if witness is not None and L.size <= MAX_DISPLAYED_TABLE:
        display_table("Witness", ["image"], ([L.label(i), M.label(j)] for i, j in enumerate(witness)), L.name)


@main.command(name="verify-paper")
@click.option("--output", type=click.Path(dir_okay=False, path_type=Path), help="Write the JSON report here")
@click.option("--only", multiple=True, type=click.Choice(CHECK_GROUPS), help="Run only these check groups")
@click.option("--quick", is_flag=True, help="Skip the λ(7) count")
@click.option("--inject-fault", type=click.Choice(FAULTS), default=None, help="Corrupt a table before checking")
@click.option("--workers", default=Config.WORKERS, show_default=True, type=click.IntRange(1))
@handle_errors
def verify_command(output, only, quick: bool, inject_fault, workers: int):
    """Recompute every known result about λ(G) for |G| <= 5."""
    with spinner() as progress:
        progress.add_task(description="Running checks...", total=None)
        report = run_suite(only=only or None, quick=quick, fault=inject_fault, workers=workers)
    display_table(
        "Verification",
        ["claim", "expected", "computed", "result"],
        (
            [check.id, escape(check.claim), escape(check.expected), escape(check.computed), "[green]PASS[/green]" if check.passed else "[red]FAIL[/red]"]
            for check in report.checks
        ),
        "id",
    )
    for skipped in report.skipped:
        console.print(f"[yellow]skipped {skipped}[/yellow]")
    for note in report.notes:
        console.print(f"[dim]{note}[/dim]")
    if output is not None:
        write_json(output, report)
    passed = sum(check.passed for check in report.checks)
    console.print(f"{passed}/{len(report.checks)} checks passed")
    if not report.passed:
        for check in report.failures:
            console.print(f"[red]FAILED {check.id}[/red]")
        sys.exit(1)


main.add_command(verify_command, name="verify")


@main.command()
@click.option("--max-order", default=MAX_LAMBDA_HOME, show_default=True, type=click.IntRange(1))
@handle_errors
def experiment(max_order: int):
    """Compare |Aut(G)| with |Aut(λ(G))| for cyclic groups of odd order."""
    if max_order > MAX_LAMBDA_HOME:
        raise click.UsageError(f"λ(G) is only built for |G| <= {MAX_LAMBDA_HOME}")
    rows = []
    for n in range(1, max_order + 1, 2):
        g = resolve_group(f"c{n}")
        with spinner() as progress:
            progress.add_task(description=f"Automorphisms of λ(C{n})...", total=None)
            lambda_order = automorphisms_seeded(build_lambda(g)).order
        group_order = len(automorphisms(g))
        rows.append([f"C{n}", group_order, lambda_order, "yes" if group_order == lambda_order else "no"])
    display_table("Odd cyclic groups", ["|Aut(G)|", "|Aut(λ(G))|", "equal"], rows, "G")


if __name__ == "__main__":
    main()
