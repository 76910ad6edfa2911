"""
Django command to simulate a scenario file at each of its fractional orders.
"""
from pathlib import Path

from core.management.base import FracDynCommand
from scenario.loaders import load_scenario
from scenario.runner import analyze_scenario, run_scenario
from scenario.writers import (
    trajectory_filename,
    write_compartments_svg,
    write_reports_json,
    write_trajectory_csv,
)


class Command(FracDynCommand):
    help = 'Simulate a scenario file; one CSV trajectory per fractional order.'

    def add_arguments(self, parser):
        parser.add_argument('scenario', help='Path to a scenario JSON file.')
        self.add_output_arguments(parser)
        self.add_grid_arguments(parser)

    def run(self, *args, **options):
        scenario = self.apply_overrides(load_scenario(options['scenario']), options)
        out = self.output_dir(options)
        stem = Path(options['scenario']).stem

        self.stdout.write(
            f'Simulating {scenario.model} for alpha in '
            f'{", ".join(f"{a:g}" for a in scenario.alphas)}...'
        )
        runs = run_scenario(scenario, workers=options.get('workers'))

        if 'csv' in scenario.outputs:
            for run in runs:
                self.wrote(write_trajectory_csv(out / trajectory_filename(stem, run.alpha), run))
        if 'svg' in scenario.outputs:
            title = f'{scenario.model.upper()} trajectories'
            self.wrote(write_compartments_svg(out / f'{stem}.svg', runs, title))
        if 'report' in scenario.outputs:
            self.wrote(write_reports_json(out / f'{stem}_report.json', analyze_scenario(scenario)))
        self.stdout.write(self.style.SUCCESS('Simulation complete.'))
