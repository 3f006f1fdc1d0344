"""
Decide G -> (a_1, ..., a_r) and print the certificate
Run: python manage.py arrows --gamma 3 --tuple 3,3 --deterministic --sigma
     python manage.py arrows 'C~' --tuple 3,3
"""
from django.conf import settings
from django.core.management.base import CommandError

from certificates.cli import EXIT_NEGATIVE
from certificates.commands import FolkmanCommand, load_graph, parse_tuple
from certificates.serializers import arrowing_certificate
from folkman_module.arrowing import ORDER_POLICIES, SearchConfig, arrows
from folkman_module.cliques import clique_number
from folkman_module.construct import build_gamma, build_witness, make_instance


class Command(FolkmanCommand):
    help = 'Search for a free coloring; print an arrows or not-arrows certificate'

    def add_arguments(self, parser):
        parser.add_argument('graph', nargs='?', help='graph6 string or path to a graph6 file')
        parser.add_argument('--gamma', type=int, metavar='P', help='search on Gamma_p')
        parser.add_argument(
            '--from-witness',
            action='store_true',
            help='search on K_(m-p-2) + Gamma_p built for --tuple',
        )
        parser.add_argument('--tuple', type=parse_tuple, required=True, metavar='A1,...,AR')
        parser.add_argument(
            '--deterministic',
            action='store_true',
            help='Sequential search; the certificate omits wall time',
        )
        parser.add_argument(
            '--sigma',
            action='store_true',
            help='Use the cyclic automorphism of Gamma_p (constructed graphs only)',
        )
        parser.add_argument('--budget', type=int, metavar='NODES', help='node budget of the search')
        parser.add_argument('--workers', type=int, metavar='W', help='parallel subtree workers')
        parser.add_argument('--order', choices=ORDER_POLICIES, help='vertex order policy')
        self.add_save_argument(parser)

    def run(self, *args, **options):
        sources = [options['graph'] is not None, options['gamma'] is not None, options['from_witness']]
        if sum(sources) != 1:
            self.usage_error('give exactly one of GRAPH, --gamma or --from-witness')

        instance = make_instance(options['tuple'])
        sigma = None
        labels = None
        if options['gamma'] is not None:
            built = build_gamma(options['gamma'])
            graph, labels, sigma = built.graph, built.labels(), built.sigma
        elif options['from_witness']:
            built = build_witness(instance)
            graph, labels, sigma = built.graph, built.labels(), built.sigma
        else:
            graph = load_graph(options['graph'])
        if options['sigma'] and sigma is None:
            self.usage_error('--sigma needs a graph built here (--gamma or --from-witness)')

        folkman = settings.FOLKMAN
        budget = options['budget'] if options['budget'] is not None else folkman['NODE_BUDGET']
        workers = options['workers'] if options['workers'] is not None else folkman['WORKER_WIDTH']
        if budget < 1 or workers < 1:
            self.usage_error('--budget and --workers must be positive')
        cfg = SearchConfig(
            vertex_order=options['order'] or folkman['VERTEX_ORDER'],
            symmetry_generators=(sigma,) if options['sigma'] else (),
            deterministic=options['deterministic'],
            worker_width=workers,
            node_budget=budget,
        )

        result = arrows(graph, instance, cfg)
        certificate = arrowing_certificate(
            graph,
            instance,
            result,
            cfg,
            labels=labels,
            clique_size=clique_number(graph).size,
        )
        self.emit(certificate, save=options['save'])
        if not result.arrows:
            raise CommandError(
                f'graph does not arrow {instance.a}; the certificate holds a free coloring',
                returncode=EXIT_NEGATIVE,
            )
