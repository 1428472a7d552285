"""
Development settings for the Tracepi_lab project.
"""

from .base import *
from decouple import config

DEBUG = config('DEBUG', default=True, cast=bool)

TRACEPI_LOG_LEVEL = config('TRACEPI_LOG_LEVEL', default='DEBUG')

for _logger in LOGGING['loggers'].values():
    _logger['level'] = TRACEPI_LOG_LEVEL
