"""
Known bounds on F(a_1, ..., a_r; m-1)
Run: python manage.py bounds --tuple 3,3,2
"""
from certificates.commands import FolkmanCommand, parse_tuple
from certificates.serializers import dumps
from folkman_module.construct import HYPOTHESIS_NOTE, bounds_report, make_instance


class Command(FolkmanCommand):
    help = 'Print the bound report for a tuple, each value with its validity window'

    def add_arguments(self, parser):
        parser.add_argument('--tuple', type=parse_tuple, required=True, metavar='A1,...,AR')

    def run(self, *args, **options):
        instance = make_instance(options['tuple'])
        self.stdout.write(dumps({
            'instance': instance.as_dict(),
            'bounds': bounds_report(instance).as_dict(),
            'hypothesis_note': HYPOTHESIS_NOTE,
        }))
