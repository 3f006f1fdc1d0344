"""
Run a check suite, or replay a saved certificate
Run: python manage.py verify --suite lemma1 --p 3
     python manage.py verify --replay certificate.json
"""
import json
from pathlib import Path

from django.conf import settings
from django.core.management.base import CommandError

from certificates.cli import EXIT_NEGATIVE, EXIT_USAGE
from certificates.commands import FolkmanCommand, parse_tuple
from certificates.forms import CertificateForm
from certificates.serializers import check_report_certificate, dumps
from folkman_module.arrowing import SearchConfig
from folkman_module.construct import make_instance
from folkman_module.exceptions import CertificateError
from verification.oracle import SUITES, run_suite
from verification.reports import write_workbook


class Command(FolkmanCommand):
    help = 'Run exhaustive checks and print a check-report certificate, or replay a certificate'

    def add_arguments(self, parser):
        parser.add_argument('--suite', choices=SUITES)
        parser.add_argument('--p', type=int, metavar='P', help='single p instead of the default sweep')
        parser.add_argument('--tuple', type=parse_tuple, metavar='A1,...,AR', help='tuple for prop1 and main')
        parser.add_argument('--k-max', type=int, default=16, metavar='K', help='longest path for the paths suite')
        parser.add_argument('--budget', type=int, metavar='NODES', help='node budget of each search')
        parser.add_argument('--xlsx', metavar='PATH', help='also write the reports to an .xlsx workbook')
        parser.add_argument('--replay', metavar='FILE', help='validate a certificate JSON file')
        parser.add_argument(
            '--rerun',
            action='store_true',
            help='with --replay: search arrows verdicts again and replay failed checks',
        )
        self.add_save_argument(parser)

    def run(self, *args, **options):
        if (options['suite'] is None) == (options['replay'] is None):
            self.usage_error('give exactly one of --suite or --replay')
        if options['replay']:
            return self.replay(options['replay'], options['rerun'])

        suite = options['suite']
        budget = options['budget'] if options['budget'] is not None else settings.FOLKMAN['NODE_BUDGET']
        cfg = SearchConfig(node_budget=budget)
        reports = run_suite(suite, p=options['p'], a=options['tuple'], k_max=options['k_max'], cfg=cfg)
        instance = make_instance(options['tuple']) if options['tuple'] else None
        certificate = check_report_certificate(suite, reports, instance)
        self.emit(certificate, save=options['save'])

        for report in reports:
            style = self.style.SUCCESS if report.passed else self.style.ERROR
            self.stderr.write(style(f'[{report.verdict}] {report.check_id} {report.params} ({report.cases_examined} cases)'))
            for discrepancy in report.discrepancies:
                self.stderr.write(self.style.WARNING(f'    discrepancy: {discrepancy}'))
        if options['xlsx']:
            write_workbook(reports, options['xlsx'], suite)
            self.stderr.write(self.style.SUCCESS(f'[+] Wrote {options["xlsx"]}'))

        failed = [r.check_id for r in reports if not r.passed]
        if failed:
            raise CommandError(f'failed checks: {", ".join(failed)}', returncode=EXIT_NEGATIVE)

    def replay(self, filename, rerun):
        try:
            payload = json.loads(Path(filename).read_text(encoding='utf-8'))
        except (OSError, ValueError) as exc:
            raise CommandError(f'cannot read {filename}: {exc}', returncode=EXIT_USAGE)
        if not isinstance(payload, dict):
            raise CertificateError(f'{filename} does not hold a JSON object')

        form = CertificateForm(data=payload, rerun=rerun)
        if not form.is_valid():
            for field, errors in form.errors.items():
                for error in errors:
                    self.stderr.write(self.style.ERROR(f'{field}: {error}'))
            raise CertificateError(f'{filename}: certificate rejected')
        self.stdout.write(dumps({
            'replay': 'accepted',
            'verdict': form.cleaned_data['verdict'],
            'rerun': rerun,
        }))
