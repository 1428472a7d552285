"""
Base settings for the Tracepi_lab project.
Common settings shared across all environments.
"""

from pathlib import Path
from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent.parent

SECRET_KEY = config('SECRET_KEY', default='django-insecure-tracepi-lab-local-only')

DEBUG = False

# Application definition
THIRD_PARTY_APPS = [
    'rest_framework',
]

LOCAL_APPS = [
    'core',
    'exactlinalg',
    'algebra',
    'freetrace',
    'ideals',
    'evalcodim',
    'cli',
]

INSTALLED_APPS = THIRD_PARTY_APPS + LOCAL_APPS

# The lab keeps no persistent state.
DATABASES = {}

USE_TZ = True

# Shipped algebra specifications and generator sets
DATA_DIR = BASE_DIR / 'data'

# Computation limits
TRACEPI_MT_DEGREE_CAP = config('TRACEPI_MT_DEGREE_CAP', default=6, cast=int)
TRACEPI_IDEAL_DEGREE_CAP = config('TRACEPI_IDEAL_DEGREE_CAP', default=5, cast=int)
TRACEPI_EVALUATION_BUDGET = config('TRACEPI_EVALUATION_BUDGET', default=10_000_000, cast=int)

# Seed used whenever a parameter is sampled and no --seed is given
TRACEPI_DEFAULT_SEED = config('TRACEPI_DEFAULT_SEED', default=20210, cast=int)

TRACEPI_LOG_LEVEL = config('TRACEPI_LOG_LEVEL', default='WARNING')

# Logging goes to standard error; standard output carries command results only.
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'verbose',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
    'loggers': {
        name: {
            'handlers': ['console'],
            'level': TRACEPI_LOG_LEVEL,
            'propagate': False,
        }
        for name in LOCAL_APPS
    },
}
