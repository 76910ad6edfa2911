"""
Django command listing the figure presets.
"""
from django.core.management.base import BaseCommand

from scenario.presets import all_presets


class Command(BaseCommand):
    help = 'List the figure presets accepted by reproduce.'

    def handle(self, *args, **options):
        for preset in all_presets():
            self.stdout.write(
                f'{preset.figure_id:<6} {preset.scenario.model:<5} {preset.description}'
            )
