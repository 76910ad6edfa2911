from django.apps import AppConfig


class ScenarioConfig(AppConfig):
    name = 'scenario'
    verbose_name = 'Simulation scenarios and figure presets'
