"""
Django command to regenerate the data and plot behind one figure preset.
"""
from core.management.base import FracDynCommand
from scenario.presets import get_preset
from scenario.runner import analyze_scenario, run_scenario
from scenario.writers import (
    trajectory_filename,
    write_phase_svg,
    write_reports_json,
    write_timeseries_svg,
    write_trajectory_csv,
)


class Command(FracDynCommand):
    help = 'Reproduce a figure preset (fig1 .. fig14) as CSV trajectories and an SVG plot.'

    def add_arguments(self, parser):
        parser.add_argument('figure', help='Figure id, e.g. fig2.')
        self.add_output_arguments(parser)
        self.add_grid_arguments(parser)

    def run(self, *args, **options):
        preset = get_preset(options['figure'])
        scenario = self.apply_overrides(preset.scenario, options)
        out = self.output_dir(options)
        stem = preset.figure_id

        self.stdout.write(f'Reproducing {stem}: {preset.description}')
        runs = run_scenario(scenario, workers=options.get('workers'))

        if 'csv' in scenario.outputs:
            for run in runs:
                self.wrote(write_trajectory_csv(out / trajectory_filename(stem, run.alpha), run))
        if 'svg' in scenario.outputs:
            if preset.content == 'phase':
                path = write_phase_svg(out / f'{stem}.svg', runs, preset.description)
            else:
                path = write_timeseries_svg(
                    out / f'{stem}.svg', runs, preset.component, preset.description,
                )
            self.wrote(path)
        if 'report' in scenario.outputs:
            self.wrote(write_reports_json(out / f'{stem}_report.json', analyze_scenario(scenario)))
        self.stdout.write(self.style.SUCCESS(f'{stem} reproduced.'))
