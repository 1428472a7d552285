"""
Production settings for the Tracepi_lab project.

Batch runs (long codimension sequences, claim verification) use these:
budgets may be raised from the environment, logging stays at WARNING.
"""

from .base import *
from decouple import config

DEBUG = False

SECRET_KEY = config('SECRET_KEY', default=SECRET_KEY)

TRACEPI_EVALUATION_BUDGET = config('TRACEPI_EVALUATION_BUDGET', default=50_000_000, cast=int)
