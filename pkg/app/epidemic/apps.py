from django.apps import AppConfig


class EpidemicConfig(AppConfig):
    name = 'epidemic'
    verbose_name = 'Fractional SIS and SIRS models'
