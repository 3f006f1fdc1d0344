"""
Write a graph as graph6 or as a DIMACS edge file
Run: python manage.py export --gamma 3 --format dimacs
"""
from certificates.commands import FolkmanCommand, load_graph
from certificates.formats import export_dimacs_col, graph6_encode
from folkman_module.construct import build_gamma


class Command(FolkmanCommand):
    help = 'Export a graph6 graph or Gamma_p in graph6 or DIMACS format'

    def add_arguments(self, parser):
        parser.add_argument('graph', nargs='?', help='graph6 string or path to a graph6 file')
        parser.add_argument('--gamma', type=int, metavar='P')
        parser.add_argument('--format', choices=('graph6', 'dimacs'), default='graph6')

    def run(self, *args, **options):
        if (options['graph'] is None) == (options['gamma'] is None):
            self.usage_error('give exactly one of GRAPH or --gamma')
        if options['gamma'] is not None:
            graph = build_gamma(options['gamma']).graph
        else:
            graph = load_graph(options['graph'])
        if options['format'] == 'dimacs':
            self.stdout.write(export_dimacs_col(graph), ending='')
        else:
            self.stdout.write(graph6_encode(graph))
