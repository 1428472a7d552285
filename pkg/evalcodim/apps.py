from django.apps import AppConfig


class EvalcodimConfig(AppConfig):
    name = 'evalcodim'
    verbose_name = 'Evaluation, trace identities and codimensions'
