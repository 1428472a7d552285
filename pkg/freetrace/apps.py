from django.apps import AppConfig


class FreetraceConfig(AppConfig):
    name = 'freetrace'
    verbose_name = 'Free trace monomials and polynomials'
