"""
Text formats for graphs: graph6 in both directions and the DIMACS edge
format used by coloring solvers.

networkx does the bit packing. graph6_decode validates the text first so
that every parse error carries the offset of the offending byte, which
networkx does not report.
"""
import networkx as nx

from folkman_module.exceptions import Graph6Error, InvalidParameter
from folkman_module.graphs import MAX_VERTICES, Graph

GRAPH6_HEADER = '>>graph6<<'


def to_networkx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def from_networkx(G: nx.Graph) -> Graph:
    """Graph on nodes relabeled 0..n-1 in G's node order"""
    index = {node: i for i, node in enumerate(G.nodes)}
    return Graph.from_edges(len(index), ((index[u], index[v]) for u, v in G.edges))


def graph6_encode(g: Graph) -> str:
    if g.n > MAX_VERTICES:
        raise InvalidParameter(f'graph6 export supports n <= {MAX_VERTICES}, got {g.n}')
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode('ascii').rstrip('\n')


def _size(values, start):
    """(n, position of the first data byte)"""
    if values[0] < 63:
        return values[0], 1
    if len(values) >= 2 and values[1] < 63:
        if len(values) < 4:
            raise Graph6Error('truncated size header', start + len(values))
        return values[1] << 12 | values[2] << 6 | values[3], 4
    if len(values) < 8:
        raise Graph6Error('truncated size header', start + len(values))
    n = 0
    for x in values[2:8]:
        n = n << 6 | x
    return n, 8


def graph6_decode(s) -> Graph:
    """
    Inverse of graph6_encode. Leading/trailing whitespace and the optional
    '>>graph6<<' header are skipped; offsets in errors refer to s itself.
    Accepts str or bytes.
    """
    if isinstance(s, bytes):
        try:
            s = s.decode('ascii')
        except UnicodeDecodeError as exc:
            raise Graph6Error('non-ASCII byte', exc.start) from exc
    start = len(s) - len(s.lstrip())
    text = s.strip()
    if text.startswith(GRAPH6_HEADER):
        start += len(GRAPH6_HEADER)
        text = text[len(GRAPH6_HEADER):]
    if not text:
        raise Graph6Error('empty graph6 string', start)

    for i, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f'character {ch!r} outside the graph6 range 63..126', start + i)
    values = [ord(ch) - 63 for ch in text]

    n, pos = _size(values, start)
    if n > MAX_VERTICES:
        raise Graph6Error(f'graph has {n} vertices, at most {MAX_VERTICES} are supported', start)

    bit_count = n * (n - 1) // 2
    expected = (bit_count + 5) // 6
    found = len(values) - pos
    if found < expected:
        raise Graph6Error(f'expected {expected} data bytes, found {found}', start + len(values))
    if found > expected:
        raise Graph6Error(f'{found - expected} trailing bytes after the data', start + pos + expected)

    padding = expected * 6 - bit_count
    if padding and values[-1] & ((1 << padding) - 1):
        raise Graph6Error('nonzero padding bits', start + len(values) - 1)

    return from_networkx(nx.from_graph6_bytes(text.encode('ascii')))


def export_dimacs_col(g: Graph) -> str:
    """'p edge n m' followed by one 1-based 'e u v' line per edge"""
    edges = g.edges()
    lines = [f'p edge {g.n} {len(edges)}']
    lines.extend(f'e {u + 1} {v + 1}' for u, v in edges)
    return '\n'.join(lines) + '\n'
