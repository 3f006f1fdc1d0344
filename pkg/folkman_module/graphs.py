"""
Immutable simple graphs stored as one neighbor bitmask per vertex.

Vertices are 0-based internally. The 1-based names
(v_1.., u_1..) only exist in the labeling layer of construct.py and in
the certificate output.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .exceptions import InvalidParameter

MAX_VERTICES = 512


def iter_bits(bits: int) -> Iterator[int]:
    """Yield the set bit positions of bits in increasing order"""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def _check_order(n):
    if not isinstance(n, int) or n < 0:
        raise InvalidParameter(f'vertex count must be a non-negative integer, got {n!r}')
    if n > MAX_VERTICES:
        raise InvalidParameter(f'vertex count {n} exceeds the supported size {MAX_VERTICES}')


@dataclass(frozen=True)
class VertexSet:
    """
    A subset of [0, n) of some host graph, stored as a bitmask
    """
    n: int
    bits: int = 0

    def __post_init__(self):
        _check_order(self.n)
        if self.bits < 0 or self.bits >> self.n:
            raise InvalidParameter(f'vertex set {self.bits:#x} does not fit in [0, {self.n})')

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> VertexSet:
        bits = 0
        for v in indices:
            if not 0 <= v < n:
                raise InvalidParameter(f'vertex {v} out of range [0, {n})')
            bits |= 1 << v
        return cls(n, bits)

    @classmethod
    def full(cls, n: int) -> VertexSet:
        return cls(n, (1 << n) - 1)

    def __iter__(self):
        return iter_bits(self.bits)

    def __len__(self):
        return self.bits.bit_count()

    def __contains__(self, v):
        return 0 <= v < self.n and bool(self.bits >> v & 1)

    def _same_host(self, other):
        if self.n != other.n:
            raise InvalidParameter(f'vertex sets over {self.n} and {other.n} vertices do not combine')

    def __or__(self, other):
        self._same_host(other)
        return VertexSet(self.n, self.bits | other.bits)

    def __and__(self, other):
        self._same_host(other)
        return VertexSet(self.n, self.bits & other.bits)

    def __sub__(self, other):
        self._same_host(other)
        return VertexSet(self.n, self.bits & ~other.bits)

    def complement(self) -> VertexSet:
        return VertexSet(self.n, ((1 << self.n) - 1) & ~self.bits)

    def indices(self) -> tuple:
        return tuple(iter_bits(self.bits))


@dataclass(frozen=True)
class VertexPermutation:
    """
    A bijection on [0, n); image[v] is where v goes
    """
    image: tuple

    def __post_init__(self):
        image = tuple(self.image)
        object.__setattr__(self, 'image', image)
        _check_order(len(image))
        if sorted(image) != list(range(len(image))):
            raise InvalidParameter('permutation image is not a bijection on its index range')

    @classmethod
    def identity(cls, n: int) -> VertexPermutation:
        return cls(tuple(range(n)))

    @property
    def n(self):
        return len(self.image)

    def __call__(self, v):
        return self.image[v]

    def compose(self, other: VertexPermutation) -> VertexPermutation:
        """self after other: v -> self(other(v))"""
        if other.n != self.n:
            raise InvalidParameter('cannot compose permutations of different lengths')
        return VertexPermutation(tuple(self.image[w] for w in other.image))

    def power(self, k: int) -> VertexPermutation:
        result = VertexPermutation.identity(self.n)
        for _ in range(k):
            result = self.compose(result)
        return result

    def is_identity(self):
        return all(v == w for v, w in enumerate(self.image))

    def apply(self, s: VertexSet) -> VertexSet:
        if s.n != self.n:
            raise InvalidParameter('permutation and vertex set have different hosts')
        bits = 0
        for v in iter_bits(s.bits):
            bits |= 1 << self.image[v]
        return VertexSet(self.n, bits)


def orbit(v: int, generators: Iterable[VertexPermutation], n: int) -> VertexSet:
    """Orbit of v under the group generated by generators"""
    generators = list(generators)
    seen = 1 << v
    frontier = [v]
    while frontier:
        w = frontier.pop()
        for gen in generators:
            x = gen(w)
            if not seen >> x & 1:
                seen |= 1 << x
                frontier.append(x)
    return VertexSet(n, seen)


@dataclass(frozen=True)
class Graph:
    """
    Undirected simple graph on [0, n); adj[v] is the neighbor bitmask of v
    """
    n: int
    adj: tuple

    def __post_init__(self):
        adj = tuple(self.adj)
        object.__setattr__(self, 'adj', adj)
        _check_order(self.n)
        if len(adj) != self.n:
            raise InvalidParameter(f'expected {self.n} adjacency rows, got {len(adj)}')
        for v, row in enumerate(adj):
            if row < 0 or row >> self.n:
                raise InvalidParameter(f'row {v} has bits outside [0, {self.n})')
            if row >> v & 1:
                raise InvalidParameter(f'loop at vertex {v}')
            for w in iter_bits(row):
                if not adj[w] >> v & 1:
                    raise InvalidParameter(f'edge {v}-{w} is not symmetric')

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> Graph:
        _check_order(n)
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameter(f'edge {u}-{v} out of range [0, {n})')
            if u == v:
                raise InvalidParameter(f'loop at vertex {u}')
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    def has_edge(self, u, v):
        return bool(self.adj[u] >> v & 1)

    def degree(self, v):
        return self.adj[v].bit_count()

    @property
    def edge_count(self):
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self):
        """Edges as (min, max) pairs in lexicographic order"""
        return [(u, w) for u in range(self.n) for w in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)


class InducedSubgraph(NamedTuple):
    graph: Graph
    # mapping[i] is the host vertex of subgraph vertex i
    mapping: tuple


def empty(n: int) -> Graph:
    _check_order(n)
    return Graph(n, (0,) * n)


def cycle(n: int) -> Graph:
    """C_n with edges {i, i+1 mod n}"""
    if not isinstance(n, int) or n < 3:
        raise InvalidParameter(f'a cycle needs at least 3 vertices, got {n!r}')
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(k: int) -> Graph:
    """P_k with edges {i, i+1}"""
    if not isinstance(k, int) or k < 1:
        raise InvalidParameter(f'a path needs at least 1 vertex, got {k!r}')
    return Graph.from_edges(k, ((i, i + 1) for i in range(k - 1)))


def complete(n: int) -> Graph:
    _check_order(n)
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def join(g1: Graph, g2: Graph) -> Graph:
    """
    G1 + G2: disjoint union plus every cross edge.
    g1 keeps indices 0..n1-1, g2 is shifted by n1.
    """
    n1, n2 = g1.n, g2.n
    _check_order(n1 + n2)
    block1 = (1 << n1) - 1
    block2 = ((1 << n2) - 1) << n1
    rows = [row | block2 for row in g1.adj]
    rows += [(row << n1) | block1 for row in g2.adj]
    return Graph(n1 + n2, tuple(rows))


def _check_subset(g, s):
    if s.n != g.n:
        raise InvalidParameter(f'vertex set over {s.n} vertices used with a graph on {g.n}')


def induced(g: Graph, s: VertexSet) -> InducedSubgraph:
    _check_subset(g, s)
    mapping = s.indices()
    position = {v: i for i, v in enumerate(mapping)}
    rows = []
    for v in mapping:
        row = 0
        for w in iter_bits(g.adj[v] & s.bits):
            row |= 1 << position[w]
        rows.append(row)
    return InducedSubgraph(Graph(len(mapping), tuple(rows)), mapping)


def delete(g: Graph, s: VertexSet) -> Graph:
    """G - S, the subgraph induced by V(G) \\ S"""
    _check_subset(g, s)
    return induced(g, s.complement()).graph


def neighborhood(g: Graph, v: int) -> VertexSet:
    if not isinstance(v, int) or not 0 <= v < g.n:
        raise InvalidParameter(f'vertex {v!r} out of range [0, {g.n})')
    return VertexSet(g.n, g.adj[v])


def connected_components(g: Graph) -> list:
    """Components as vertex sets, ordered by their smallest vertex"""
    components = []
    remaining = (1 << g.n) - 1
    while remaining:
        seed = remaining & -remaining
        component = seed
        frontier = seed
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= g.adj[v]
            frontier = reach & ~component
            component |= frontier
        components.append(VertexSet(g.n, component))
        remaining &= ~component
    return components


def is_automorphism(g: Graph, perm: VertexPermutation) -> bool:
    if perm.n != g.n:
        raise InvalidParameter(f'permutation on {perm.n} points used with a graph on {g.n}')
    for v, row in enumerate(g.adj):
        image = 0
        for w in iter_bits(row):
            image |= 1 << perm(w)
        if image != g.adj[perm(v)]:
            return False
    return True
