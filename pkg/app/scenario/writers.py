"""
Output files: trajectory CSVs, SVG plots, sweep summaries and JSON reports.

Every writer is deterministic: the same inputs give byte-identical files.
"""
import csv
import math
from pathlib import Path

import matplotlib
import numpy as np
from matplotlib.figure import Figure
from rest_framework.renderers import JSONRenderer

from stability.serializers import StabilityReportSerializer

CANVAS_PT = (800, 600)
SVG_RC = {
    'svg.hashsalt': 'fracdyn',
    'svg.fonttype': 'path',
    'path.simplify': False,
}
FLOAT_FORMAT = '%.17g'


def alpha_tag(alpha):
    return f'{alpha:g}'


def trajectory_filename(stem, alpha):
    return f'{stem}_alpha_{alpha_tag(alpha)}.csv'


def write_trajectory_csv(path, run):
    """Columns t, compartments, N; one row per grid point."""
    trajectory = run.trajectory
    table = np.column_stack([trajectory.as_table(), trajectory.states.sum(axis=1)])
    header = ','.join(('t',) + tuple(run.labels) + ('N',))
    np.savetxt(path, table, fmt=FLOAT_FORMAT, delimiter=',', header=header, comments='')
    return Path(path)


def _new_figure():
    return Figure(figsize=(CANVAS_PT[0] / 72, CANVAS_PT[1] / 72))


def _save(figure, path):
    with matplotlib.rc_context(SVG_RC):
        figure.savefig(path, format='svg', metadata={'Date': None})
    return Path(path)


def write_timeseries_svg(path, runs, component, title):
    """One polyline per alpha of a single compartment against time."""
    figure = _new_figure()
    axes = figure.subplots()
    for run in runs:
        index = run.labels.index(component)
        axes.plot(run.trajectory.times, run.trajectory.column(index),
                  label=f'alpha = {alpha_tag(run.alpha)}')
    axes.set_xlabel('t')
    axes.set_ylabel(component)
    axes.set_title(title)
    axes.grid(True)
    axes.legend()
    return _save(figure, path)


def write_compartments_svg(path, runs, title):
    """One panel per compartment, one polyline per alpha."""
    figure = _new_figure()
    labels = runs[0].labels
    panels = figure.subplots(len(labels), 1, sharex=True)
    for index, (axes, label) in enumerate(zip(panels, labels)):
        for run in runs:
            axes.plot(run.trajectory.times, run.trajectory.column(index),
                      label=f'alpha = {alpha_tag(run.alpha)}')
        axes.set_ylabel(label)
        axes.grid(True)
    panels[0].set_title(title)
    panels[0].legend()
    panels[-1].set_xlabel('t')
    return _save(figure, path)


def write_phase_svg(path, runs, title):
    """SI-plane portraits, Q_I against Q_S, one panel per alpha."""
    figure = _new_figure()
    columns = min(2, len(runs))
    rows = math.ceil(len(runs) / columns)
    panels = figure.subplots(rows, columns, squeeze=False).ravel()
    for axes, run in zip(panels, runs):
        susceptible = run.trajectory.column(run.labels.index('Q_S'))
        infected = run.trajectory.column(run.labels.index('Q_I'))
        axes.plot(susceptible, infected, label=f'alpha = {alpha_tag(run.alpha)}')
        axes.set_xlabel('Q_S')
        axes.set_ylabel('Q_I')
        axes.grid(True)
        axes.legend()
    for axes in panels[len(runs):]:
        axes.set_visible(False)
    figure.suptitle(title)
    return _save(figure, path)


def write_sweep_csv(path, rows, labels):
    header = ['alpha', *labels, 'distance', 'verdict', 'margin']
    with open(path, 'w', newline='', encoding='utf-8') as handle:
        writer = csv.writer(handle, lineterminator='\n')
        writer.writerow(header)
        for row in rows:
            writer.writerow([
                FLOAT_FORMAT % row.alpha,
                *(FLOAT_FORMAT % value for value in row.final_state),
                FLOAT_FORMAT % row.distance,
                row.verdict,
                '' if row.margin is None else FLOAT_FORMAT % row.margin,
            ])
    return Path(path)


def render_reports(reports):
    """JSON bytes for a list of stability reports."""
    data = StabilityReportSerializer(reports, many=True).data
    return JSONRenderer().render(data, renderer_context={'indent': 2})


def write_reports_json(path, reports):
    Path(path).write_bytes(render_reports(reports) + b'\n')
    return Path(path)
