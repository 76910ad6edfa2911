"""
Shared plumbing for the simulation commands.
"""
from pathlib import Path

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from core.exceptions import (
    ConfigurationError,
    DimensionError,
    DomainError,
    NumericalFailure,
)

EXIT_CONFIGURATION = 2
EXIT_NUMERICAL = 3

# --format value -> scenario output kind
FORMAT_OUTPUTS = {'csv': 'csv', 'svg': 'svg', 'json': 'report'}


class FracDynCommand(BaseCommand):
    """Base command translating domain errors into exit codes."""

    def add_grid_arguments(self, parser):
        parser.add_argument('--h', type=float, dest='step', help='Step size override.')
        parser.add_argument('--t-end', type=float, dest='t_end', help='Horizon override.')
        parser.add_argument(
            '--workers', type=int,
            help='Parallel runs across fractional orders (default from settings).',
        )
        parser.add_argument(
            '--clamp', action='store_true', default=None,
            help='Floor negative compartments at 0 after each corrector pass.',
        )

    def add_output_arguments(self, parser, formats=True):
        parser.add_argument(
            '--out', default=settings.FRACDYN['OUTPUT_DIR'],
            help='Output directory (created if missing).',
        )
        if formats:
            parser.add_argument(
                '--format', action='append', dest='formats', choices=sorted(FORMAT_OUTPUTS),
                help='Output format; may be given more than once.',
            )

    def handle(self, *args, **options):
        try:
            self.run(*args, **options)
        except (ConfigurationError, DomainError, DimensionError) as exc:
            raise CommandError(str(exc), returncode=EXIT_CONFIGURATION)
        except NumericalFailure as exc:
            raise CommandError(str(exc), returncode=EXIT_NUMERICAL)

    def run(self, *args, **options):
        raise NotImplementedError('subclasses of FracDynCommand must provide a run() method')

    def apply_overrides(self, scenario, options):
        formats = options.get('formats')
        return scenario.with_overrides(
            step=options.get('step'),
            t_end=options.get('t_end'),
            clamp=options.get('clamp'),
            outputs=[FORMAT_OUTPUTS[name] for name in formats] if formats else None,
        )

    def output_dir(self, options):
        path = Path(options['out'])
        try:
            path.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise ConfigurationError(f'Cannot create output directory {path}: {exc.strerror}')
        return path

    def wrote(self, path):
        self.stdout.write(f'  wrote {path}')
