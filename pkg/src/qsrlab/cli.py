"""qsrlab command line: reproduce the classification tables and run the
property suites.

Exit codes: 0 all checks passed, 1 at least one mismatch, 2 usage or data
errors.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from .datasets import DatasetError
from .harness import (
    RunConfig, cmd_tables_symalt, cmd_sporadic, cmd_structural, cmd_affine,
    cmd_verify, SPORADIC_ORDER, VERIFY_SUITES,
)


@click.group()
@click.option('--data', 'data_dir', type=click.Path(exists=True, file_okay=False),
              default=None, help='dataset directory (defaults to bundled data)')
@click.option('--format', 'fmt', type=click.Choice(['text', 'jsonl']),
              default='text', show_default=True)
@click.option('--seed', type=click.IntRange(0, 2 ** 64 - 1), default=0,
              show_default=True, help='RNG seed recorded in every report')
@click.option('--max-order', type=str, default=str(10 ** 9), show_default=True,
              help='largest group order any command may touch')
@click.option('--max-degree', type=int, default=10 ** 6, show_default=True,
              help='largest action degree any command may build')
@click.option('--plot', 'plot_dir', type=click.Path(file_okay=False),
              default=None, help='also render a summary figure into this directory')
@click.option('--out', 'out_path', type=click.Path(dir_okay=False), default=None,
              help='write the report to a file as well as stdout')
@click.option('--timings', is_flag=True,
              help='embed wall-clock timings (breaks byte-identical reruns)')
@click.pass_context
def main(ctx, data_dir, fmt, seed, max_order, max_degree, plot_dir, out_path,
         timings):
    ctx.obj = {
        'config': RunConfig(
            seed=seed,
            data_dir=Path(data_dir) if data_dir else None,
            fmt=fmt,
            max_degree=max_degree,
            max_order=int(max_order),
            plot_dir=Path(plot_dir) if plot_dir else None,
            timings=timings,
        ),
        'out_path': out_path,
    }


def _emit(ctx, report):
    config = ctx.obj['config']
    text = report.render(config.fmt)
    click.echo(text, nl=False)
    out_path = ctx.obj['out_path']
    if out_path:
        Path(out_path).write_text(text, encoding='utf-8')
    if config.plot_dir is not None:
        from .plots import render_report
        path = render_report(report, config.plot_dir)
        click.echo(f'# figure: {path}', err=True)
    sys.exit(report.exit_code)


def _run(ctx, fn, *args, **kwargs):
    try:
        report = fn(ctx.obj['config'], *args, **kwargs)
    except DatasetError as exc:
        click.echo(f'dataset error: {exc}', err=True)
        sys.exit(2)
    except ValueError as exc:
        click.echo(f'error: {exc}', err=True)
        sys.exit(2)
    _emit(ctx, report)


@main.command()
@click.option('--max-n', type=click.IntRange(5, 13), default=13,
              show_default=True)
@click.pass_context
def tables(ctx, max_n):
    """Subset/partition verdicts vs closed forms, plus checkable
    exceptional rows."""
    _run(ctx, cmd_tables_symalt, max_n=max_n)


@main.command()
@click.option('--only', type=click.Choice(SPORADIC_ORDER), default=None,
              help='restrict to one dataset')
@click.pass_context
def sporadic(ctx, only):
    """Mathieu-group coset rows vs the embedded expected table."""
    _run(ctx, cmd_sporadic, only=only)


@main.command()
@click.pass_context
def structural(ctx):
    """Product-action, diagonal and doubled-action checks."""
    _run(ctx, cmd_structural)


@main.command()
@click.pass_context
def affine(ctx):
    """Existence verdicts for the constructible affine instances."""
    _run(ctx, cmd_affine)


@main.command()
@click.option('--suite', type=click.Choice(sorted(VERIFY_SUITES)), default=None,
              help='run a single suite instead of all of them')
@click.pass_context
def verify(ctx, suite):
    """Cross-module invariant suites; exit 0 iff everything passes."""
    _run(ctx, cmd_verify, suite=suite)


if __name__ == '__main__':
    main()
