"""
Django command sweeping the fractional order of a scenario.
"""
from pathlib import Path

from core.management.base import FracDynCommand
from epidemic.registry import get_model
from scenario.loaders import load_scenario
from scenario.runner import parse_alpha_range, sweep
from scenario.writers import write_sweep_csv


class Command(FracDynCommand):
    help = (
        'Simulate and analyse a scenario over a range of fractional orders; '
        'writes one summary row per order.'
    )

    def add_arguments(self, parser):
        parser.add_argument('scenario', help='Path to a scenario JSON file.')
        parser.add_argument('alphas', help='Range START:END[:STEP], e.g. 0.90:1.00:0.05.')
        self.add_output_arguments(parser, formats=False)
        self.add_grid_arguments(parser)

    def run(self, *args, **options):
        alphas = parse_alpha_range(options['alphas'])
        scenario = self.apply_overrides(load_scenario(options['scenario']), options)
        out = self.output_dir(options)

        self.stdout.write(f'Sweeping {len(alphas)} fractional orders...')
        rows = sweep(scenario, alphas, workers=options.get('workers'))
        labels = get_model(scenario.model).labels
        path = out / f'{Path(options["scenario"]).stem}_sweep.csv'
        self.wrote(write_sweep_csv(path, rows, labels))
        self.stdout.write(self.style.SUCCESS('Sweep complete.'))
