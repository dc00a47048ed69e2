"""Figure rendering for command reports.

Each command gets one summary figure saved beside the delimited output.
Rendering is headless (Agg) and entirely optional: nothing here is
imported unless a plot directory was requested.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt

__all__ = ['render_report']

PASS_COLOR = '#2ca02c'
FAIL_COLOR = '#d62728'
WARN_COLOR = '#ff7f0e'


def _status_color(status):
    return {'PASS': PASS_COLOR, 'FAIL': FAIL_COLOR, 'WARN': WARN_COLOR}.get(
        status, '#7f7f7f')


def render_report(report, plot_dir):
    plot_dir = Path(plot_dir)
    plot_dir.mkdir(parents=True, exist_ok=True)
    fn = {
        'tables': _render_tables,
        'sporadic': _render_sporadic,
        'structural': _render_status_bars,
        'affine': _render_affine,
        'verify': _render_status_bars,
    }.get(report.command, _render_status_bars)
    path = plot_dir / f'{report.command}.png'
    fig = fn(report)
    fig.savefig(path, dpi=150, bbox_inches='tight')
    plt.close(fig)
    return path


def _render_tables(report):
    rows = [r for r in report.records if r['kind'] in ('ksubsets', 'partitions')]
    fig, ax = plt.subplots(figsize=(10, 6))
    ys, xs, colors, sizes = [], [], [], []
    for r in rows:
        ys.append(r['n'] + (0.2 if r['kind'] == 'partitions' else 0)
                  + (0.4 if r['group'].startswith('Alt') else 0))
        xs.append(r['k'])
        colors.append(_status_color(r['status']))
        sizes.append(30 + 25 * len(r['computed']))
    ax.scatter(xs, ys, c=colors, s=sizes)
    ax.set_xlabel('k (subset or part size)')
    ax.set_ylabel('n (marker offset: partitions +0.2, Alt +0.4)')
    ax.set_title('subset/partition qsr verdicts vs closed form '
                 '(size = number of qsr primes)')
    ax.grid(alpha=0.3)
    return fig


def _render_sporadic(report):
    rows = [r for r in report.records if r['kind'] == 'row']
    fig, ax = plt.subplots(figsize=(9, max(3, 0.35 * len(rows))))
    labels, counts, colors = [], [], []
    for r in rows:
        labels.append(f"{r['group']}:{r['subgroup']}")
        computed = r['computed']
        counts.append(sum(computed.values()) if isinstance(computed, dict) else 0)
        colors.append(_status_color(r['status']))
    ax.barh(range(len(rows)), counts, color=colors)
    ax.set_yticks(range(len(rows)))
    ax.set_yticklabels(labels, fontsize=8)
    ax.invert_yaxis()
    ax.set_xlabel('number of qsr classes found')
    ax.set_title('coset-action rows vs embedded expectations')
    return fig


def _render_affine(report):
    rows = [r for r in report.records if r['kind'] == 'affine']
    fig, ax = plt.subplots(figsize=(9, 5))
    for r in rows:
        y = 1 if r['exists'] else 0
        ax.scatter(r['degree'], y, color=_status_color(r['status']), s=45)
        ax.annotate(r['instance'], (r['degree'], y), fontsize=6,
                    rotation=45, xytext=(2, 4), textcoords='offset points')
    ax.set_xscale('log')
    ax.set_yticks([0, 1])
    ax.set_yticklabels(['no qsr', 'qsr exists'])
    ax.set_xlabel('degree')
    ax.set_title('affine instances')
    ax.set_ylim(-0.4, 1.6)
    return fig


def _render_status_bars(report):
    rows = [r for r in report.records if 'status' in r]
    fig, ax = plt.subplots(figsize=(8, max(3, 0.3 * len(rows))))
    labels = []
    for r in rows:
        bits = [str(v) for k, v in r.items()
                if k not in ('kind', 'status') and not isinstance(v, (list, dict))]
        labels.append(f"{r['kind']}: " + ' '.join(bits[:4]))
    ax.barh(range(len(rows)), [1] * len(rows),
            color=[_status_color(r['status']) for r in rows])
    ax.set_yticks(range(len(rows)))
    ax.set_yticklabels(labels, fontsize=7)
    ax.invert_yaxis()
    ax.set_xticks([])
    ax.set_title(f'{report.command}: green = pass')
    return fig
