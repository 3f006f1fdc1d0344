"""
Exact clique number with the lexicographically smallest maximum clique
Run: python manage.py clique 'Bw'
"""
from certificates.commands import FolkmanCommand, load_graph
from certificates.serializers import clique_certificate
from folkman_module.cliques import clique_number


class Command(FolkmanCommand):
    help = 'Compute cl(G) for a graph6 string or file and print a clique certificate'

    def add_arguments(self, parser):
        parser.add_argument('graph', help='graph6 string or path to a graph6 file')
        self.add_save_argument(parser)

    def run(self, *args, **options):
        graph = load_graph(options['graph'])
        result = clique_number(graph)
        self.emit(clique_certificate(graph, result), save=options['save'])
