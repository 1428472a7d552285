from django.apps import AppConfig


class IdealsConfig(AppConfig):
    name = 'ideals'
    verbose_name = 'Trace T-ideals generated by polynomials'
