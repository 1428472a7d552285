from django.apps import AppConfig


class ExactlinalgConfig(AppConfig):
    name = 'exactlinalg'
    verbose_name = 'Exact rational linear algebra'
