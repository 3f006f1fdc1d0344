"""
Build Gamma_p or the witness graph K_(m-p-2) + Gamma_p
Run: python manage.py construct --gamma 3
     python manage.py construct --witness 3,3,2
"""
from certificates.commands import FolkmanCommand, parse_tuple
from certificates.formats import graph6_encode
from certificates.serializers import dumps
from folkman_module.construct import build_gamma, build_witness, make_instance


class Command(FolkmanCommand):
    help = 'Print graph6, order, edge count and vertex labels of a constructed graph'

    def add_arguments(self, parser):
        source = parser.add_mutually_exclusive_group(required=True)
        source.add_argument('--gamma', type=int, metavar='P', help='Gamma_p for p >= 2')
        source.add_argument(
            '--witness',
            type=parse_tuple,
            metavar='A1,...,AR',
            help='K_(m-p-2) + Gamma_p for this tuple',
        )

    def run(self, *args, **options):
        instance = None
        if options['gamma'] is not None:
            built = build_gamma(options['gamma'])
        else:
            instance = make_instance(options['witness'])
            built = build_witness(instance)
        graph = built.graph
        self.stdout.write(dumps({
            'graph6': graph6_encode(graph),
            'n': graph.n,
            'edges': graph.edge_count,
            'labels': built.labels(),
            'instance': instance.as_dict() if instance else None,
        }))
