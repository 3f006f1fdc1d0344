"""
Django settings for the folkman witness toolkit.

The computations live in folkman_module and take explicit arguments;
the FOLKMAN block below holds the defaults the management commands
hand to them.
"""

import os
from pathlib import Path

from folkman_module import __version__ as FOLKMAN_VERSION

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get(
    'DJANGO_SECRET_KEY',
    'django-insecure-folkman-(local-use-only)-b7q2k9x4m1v8n3c6z0p5',
)

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = os.environ.get('DJANGO_DEBUG', '') == '1'

ALLOWED_HOSTS = ['localhost', '127.0.0.1']

# Application definition

INSTALLED_APPS = [
    'django.contrib.admin',
    'django.contrib.auth',
    'django.contrib.contenttypes',
    'django.contrib.sessions',
    'django.contrib.messages',
    'django.contrib.staticfiles',
    # Custom apps
    'certificates',
    'verification',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.contrib.sessions.middleware.SessionMiddleware',
    'django.middleware.common.CommonMiddleware',
    'django.middleware.csrf.CsrfViewMiddleware',
    'django.contrib.auth.middleware.AuthenticationMiddleware',
    'django.contrib.messages.middleware.MessageMiddleware',
    'django.middleware.clickjacking.XFrameOptionsMiddleware',
]

ROOT_URLCONF = 'config.urls'

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [
                'django.template.context_processors.debug',
                'django.template.context_processors.request',
                'django.contrib.auth.context_processors.auth',
                'django.contrib.messages.context_processors.messages',
            ],
        },
    },
]

WSGI_APPLICATION = 'config.wsgi.application'


# Database
# Stored certificates only; the computations never touch it.

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    }
}


# Password validation (admin accounts)

AUTH_PASSWORD_VALIDATORS = [
    {
        'NAME': 'django.contrib.auth.password_validation.UserAttributeSimilarityValidator',
    },
    {
        'NAME': 'django.contrib.auth.password_validation.MinimumLengthValidator',
    },
    {
        'NAME': 'django.contrib.auth.password_validation.CommonPasswordValidator',
    },
    {
        'NAME': 'django.contrib.auth.password_validation.NumericPasswordValidator',
    },
]


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True


# Static files (admin only)

STATIC_URL = 'static/'
STATIC_ROOT = BASE_DIR / 'staticfiles'

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# Search and verification defaults
FOLKMAN = {
    'SCHEMA_VERSION': '1.0',
    'TOOL_VERSION': FOLKMAN_VERSION,
    'NODE_BUDGET': int(os.environ.get('FOLKMAN_NODE_BUDGET', 50_000_000)),
    'WORKER_WIDTH': int(os.environ.get('FOLKMAN_WORKER_WIDTH', 1)),
    'VERTEX_ORDER': 'degree',
    # inclusive p ranges the exhaustive checks accept
    'LEMMA_P_RANGE': (2, 6),
    'THEOREM1_P_RANGE': (3, 5),
}


# Logging
FOLKMAN_LOG_LEVEL = os.environ.get('FOLKMAN_LOG_LEVEL', 'WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '{levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'folkman_module': {
            'handlers': ['console'],
            'level': FOLKMAN_LOG_LEVEL,
            'propagate': False,
        },
        'certificates': {
            'handlers': ['console'],
            'level': FOLKMAN_LOG_LEVEL,
            'propagate': False,
        },
        'verification': {
            'handlers': ['console'],
            'level': FOLKMAN_LOG_LEVEL,
            'propagate': False,
        },
    },
}
