from django.apps import AppConfig


class AlgebraConfig(AppConfig):
    name = 'algebra'
    verbose_name = 'Finite-dimensional algebras with trace'
