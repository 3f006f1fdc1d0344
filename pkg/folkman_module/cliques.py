"""
Exact clique computations on bitmask graphs.

clique_number is a branch-and-bound over candidate bitsets, pruned by a
greedy sequential coloring of the candidates (one color class bounds the
clique by one vertex). has_k_clique_within stops at the first k-clique;
the arrowing search calls it for every tentative color assignment.
"""
from __future__ import annotations

from dataclasses import dataclass

from .exceptions import InvalidParameter
from .graphs import Graph, VertexSet, induced, iter_bits


@dataclass(frozen=True)
class CliqueResult:
    size: int
    witness: VertexSet
    nodes_explored: int


class NodeCounter:
    """Per-call node counter; never shared between calls"""
    __slots__ = ('nodes',)

    def __init__(self):
        self.nodes = 0


def _color_sort(adj, cand):
    """
    Greedy sequential coloring of cand in index order.
    Returns the vertices and their color numbers, colors non-decreasing.
    """
    order = []
    bounds = []
    color = 0
    uncolored = cand
    while uncolored:
        color += 1
        available = uncolored
        while available:
            low = available & -available
            v = low.bit_length() - 1
            available &= ~adj[v] & ~low
            uncolored &= ~low
            order.append(v)
            bounds.append(color)
    return order, bounds


def clique_in_mask(adj, cand, k, counter=None):
    """
    True iff the vertices of bitmask cand contain a k-clique.
    adj is a tuple of neighbor bitmasks.
    """
    if k <= 0:
        return True
    if k == 1:
        return cand != 0
    if cand.bit_count() < k:
        return False
    if k == 2:
        for v in iter_bits(cand):
            if adj[v] & cand:
                return True
        return False

    order, bounds = _color_sort(adj, cand)
    for i in range(len(order) - 1, -1, -1):
        # order[0..i] is properly colored with bounds[i] colors
        if bounds[i] < k:
            return False
        v = order[i]
        if counter is not None:
            counter.nodes += 1
        if clique_in_mask(adj, cand & adj[v], k - 1, counter):
            return True
        cand &= ~(1 << v)
    return False


def _expand(adj, cand, size, best, counter):
    order, bounds = _color_sort(adj, cand)
    for i in range(len(order) - 1, -1, -1):
        if size + bounds[i] <= best:
            return best
        v = order[i]
        counter.nodes += 1
        below = cand & adj[v]
        if below:
            best = _expand(adj, below, size + 1, best, counter)
        elif size + 1 > best:
            best = size + 1
        cand &= ~(1 << v)
    return best


def degeneracy_order(g: Graph) -> list:
    """
    Reverse smallest-last order: repeatedly remove a vertex of minimum
    remaining degree (smallest index on ties), densest core first.
    """
    degree = [row.bit_count() for row in g.adj]
    alive = (1 << g.n) - 1
    removed = []
    while alive:
        v = min(iter_bits(alive), key=lambda x: (degree[x], x))
        removed.append(v)
        alive &= ~(1 << v)
        for w in iter_bits(g.adj[v] & alive):
            degree[w] -= 1
    removed.reverse()
    return removed


def _relabel(g, order):
    position = [0] * g.n
    for i, v in enumerate(order):
        position[v] = i
    rows = []
    for v in order:
        row = 0
        for w in iter_bits(g.adj[v]):
            row |= 1 << position[w]
        rows.append(row)
    return tuple(rows)


def smallest_clique(adj, cand, k, counter=None):
    """
    Lexicographically smallest k-clique inside cand, as a sorted list of
    vertices, or None when cand holds no k-clique
    """
    chosen = []
    while k > 0:
        for v in iter_bits(cand):
            later = cand & adj[v] & ~((2 << v) - 1)
            if clique_in_mask(adj, later, k - 1, counter):
                chosen.append(v)
                cand = later
                k -= 1
                break
        else:
            return None
    return chosen


def clique_number(g: Graph) -> CliqueResult:
    """
    Exact cl(g) with the lexicographically smallest maximum clique
    """
    counter = NodeCounter()
    adj = _relabel(g, degeneracy_order(g))
    size = _expand(adj, (1 << g.n) - 1, 0, 0, counter)
    witness = smallest_clique(g.adj, (1 << g.n) - 1, size, counter)
    return CliqueResult(size, VertexSet.from_indices(g.n, witness), counter.nodes)


def clique_size_in_mask(adj, cand) -> int:
    """Size of a maximum clique inside bitmask cand, no witness"""
    if not cand:
        return 0
    return _expand(adj, cand, 0, 0, NodeCounter())


def clique_number_within(g: Graph, s: VertexSet) -> CliqueResult:
    """cl(g[s]); the witness is expressed in the vertices of g"""
    sub, mapping = induced(g, s)
    result = clique_number(sub)
    witness = VertexSet.from_indices(g.n, (mapping[i] for i in result.witness))
    return CliqueResult(result.size, witness, result.nodes_explored)


def has_k_clique_within(g: Graph, s: VertexSet, k: int) -> bool:
    if s.n != g.n:
        raise InvalidParameter(f'vertex set over {s.n} vertices used with a graph on {g.n}')
    if not isinstance(k, int) or k < 0:
        raise InvalidParameter(f'clique size must be a non-negative integer, got {k!r}')
    return clique_in_mask(g.adj, s.bits, k)
