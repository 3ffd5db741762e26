"""
Django settings for the lambek_engine project.

The project has no database and serves no HTTP; Django provides the
management command runner, settings, logging and test runner. Engine
knobs are the LAMBEK_* settings below, each read from the environment
or a .env file through python-decouple.
"""

from pathlib import Path
from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


SECRET_KEY = config('SECRET_KEY', default='django-insecure-lambek-engine-local-only')

DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',

    # Third party apps
    'rest_framework',

    # Local apps
    'categories',
    'sequents',
    'bridges',
    'grammar',
]

MIDDLEWARE = []

# Proof files and lexicons live on disk; nothing is stored in a database
DATABASES = {}

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

LANGUAGE_CODE = 'en-us'

TIME_ZONE = config('TIME_ZONE', default='UTC')

USE_I18N = False

USE_TZ = True

REST_FRAMEWORK = {
    'UNAUTHENTICATED_USER': None,
}


# Engine configuration

def _optional_int(value):
    return int(value) if value not in (None, '', 'none', 'None') else None


# Log level of the categories, sequents, bridges and grammar loggers
LAMBEK_LOG = config('LAMBEK_LOG', default='WARNING').upper()

# Extension used when a command gets no --ext
LAMBEK_DEFAULT_EXT = config('LAMBEK_DEFAULT_EXT', default='NL')

# Proof search defaults
LAMBEK_MAX_DEPTH = config('LAMBEK_MAX_DEPTH', default=None, cast=_optional_int)
LAMBEK_MAX_SOLUTIONS = config('LAMBEK_MAX_SOLUTIONS', default=1, cast=int)
LAMBEK_EXPANSION_BUDGET = config('LAMBEK_EXPANSION_BUDGET', default=1_000_000, cast=_optional_int)

# Depth of the brute-force oracle
LAMBEK_ORACLE_DEPTH = config('LAMBEK_ORACLE_DEPTH', default=10, cast=int)

# Lexicons and proof fixtures
LAMBEK_DATA_DIR = Path(config('LAMBEK_DATA_DIR', default=str(BASE_DIR / 'data')))


LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name}: {message}',
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
    'loggers': {
        app: {
            'handlers': ['console'],
            'level': LAMBEK_LOG,
            'propagate': False,
        }
        for app in ('categories', 'sequents', 'bridges', 'grammar')
    },
}
