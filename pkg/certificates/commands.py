"""Shared pieces of the management commands"""
import argparse
import logging
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError
from django.db import DatabaseError

from folkman_module.exceptions import CertificateError, FolkmanError, InstanceTooLarge

from .cli import EXIT_GUARD, EXIT_NEGATIVE, EXIT_USAGE
from .formats import graph6_decode
from .models import Certificate
from .serializers import dumps

logger = logging.getLogger(__name__)


def parse_tuple(text):
    """argparse type for A1,...,AR"""
    try:
        values = tuple(int(part) for part in text.split(','))
    except ValueError:
        raise argparse.ArgumentTypeError(f'expected comma-separated integers, got {text!r}')
    if any(x < 1 for x in values):
        raise argparse.ArgumentTypeError(f'tuple entries must be positive, got {text!r}')
    return values


def load_graph(source):
    """A graph6 string, or a file whose first non-blank line is graph6"""
    try:
        is_file = Path(source).is_file()
    except OSError:
        is_file = False
    if is_file:
        try:
            data = Path(source).read_bytes()
        except OSError as exc:
            raise CommandError(f'cannot read {source}: {exc}', returncode=EXIT_USAGE)
        lines = [line for line in data.splitlines() if line.strip()]
        if not lines:
            raise CommandError(f'{source} holds no graph6 line', returncode=EXIT_USAGE)
        source = lines[0]
    return graph6_decode(source)


class FolkmanCommand(BaseCommand):
    """
    Base for the tool's commands. Subclasses implement run(); errors from
    folkman_module become CommandError with the matching exit code.
    """
    requires_system_checks = []

    def add_save_argument(self, parser):
        parser.add_argument(
            '--save',
            action='store_true',
            help='Store the certificate in the database (run migrate first)',
        )

    def handle(self, *args, **options):
        try:
            self.run(*args, **options)
        except InstanceTooLarge as exc:
            raise CommandError(str(exc), returncode=EXIT_GUARD)
        except CertificateError as exc:
            raise CommandError(str(exc), returncode=EXIT_NEGATIVE)
        except FolkmanError as exc:
            raise CommandError(str(exc), returncode=EXIT_USAGE)

    def usage_error(self, message):
        raise CommandError(message, returncode=EXIT_USAGE)

    def run(self, *args, **options):
        raise NotImplementedError('subclasses of FolkmanCommand must provide a run() method')

    def emit(self, payload, save=False):
        self.stdout.write(dumps(payload))
        if save:
            self.save(payload)

    def save(self, payload):
        try:
            certificate = Certificate.from_payload(payload)
            certificate.save()
        except DatabaseError as exc:
            raise CommandError(f'could not save the certificate: {exc}', returncode=EXIT_USAGE)
        logger.info('saved certificate %d', certificate.pk)
        if certificate.is_negative():
            self.stderr.write(self.style.WARNING(f'[+] Saved negative result as certificate #{certificate.pk}'))
        else:
            self.stderr.write(self.style.SUCCESS(f'[+] Saved certificate #{certificate.pk}'))
        return certificate
