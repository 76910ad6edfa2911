"""
Django command printing the stability report of a scenario file as JSON.
"""
from core.management.base import FracDynCommand
from scenario.loaders import load_scenario
from scenario.runner import analyze_scenario
from scenario.writers import render_reports


class Command(FracDynCommand):
    help = 'Print one stability report per fractional order of a scenario file.'

    def add_arguments(self, parser):
        parser.add_argument('scenario', help='Path to a scenario JSON file.')

    def run(self, *args, **options):
        reports = analyze_scenario(load_scenario(options['scenario']))
        self.stdout.write(render_reports(reports).decode('utf-8'))
