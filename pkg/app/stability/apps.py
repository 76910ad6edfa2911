from django.apps import AppConfig


class StabilityConfig(AppConfig):
    name = 'stability'
    verbose_name = 'Equilibria and local stability'
