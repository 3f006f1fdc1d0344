"""
Decides the vertex arrowing relation G -> (a_1, ..., a_r): no partition
V_1 u ... u V_r of V(G) leaves every V_i free of a_i-cliques.

The search assigns colors depth-first in a fixed vertex order. Putting v
into class i is refused as soon as N(v) n V_i already holds an
(a_i - 1)-clique, so forbidden cliques are caught when they appear.

Two symmetry reductions, both verdict-preserving:
  * colors with equal thresholds are interchangeable, so within such a
    group a color may only be opened after the previous one was used;
  * with automorphism generators, the first vertex r of the order takes a
    color no later than any vertex of its orbit.
Colors are searched sorted by threshold so that every group is a
contiguous block; the second rule depends on it.
"""
from __future__ import annotations

import logging
import time
import warnings
from dataclasses import dataclass, field
from typing import Optional

from joblib import Parallel, delayed

from .cliques import clique_in_mask, clique_number
from .construct import ArrowInstance, make_instance
from .exceptions import FolkmanError, InstanceTooLarge, InvalidParameter, SearchBudgetExceeded
from .graphs import Graph, VertexPermutation, VertexSet, is_automorphism, orbit

logger = logging.getLogger(__name__)

ARROWS = 'arrows'
NOT_ARROWS = 'not-arrows'

ORDER_POLICIES = ('degree', 'index', 'reverse')

# The top levels of the tree handed out to workers
PARALLEL_DEPTH = 2

# r^n colorings arrows_exhaustive may enumerate
EXHAUSTIVE_LIMIT = 10 ** 8


@dataclass(frozen=True)
class Coloring:
    """colors[v] is the 1-based class of v, or None while unassigned"""
    colors: tuple

    def is_complete(self):
        return all(c is not None for c in self.colors)

    def classes(self, r):
        n = len(self.colors)
        bits = [0] * r
        for v, c in enumerate(self.colors):
            if c is not None:
                bits[c - 1] |= 1 << v
        return [VertexSet(n, b) for b in bits]

    def swap(self, i, j):
        """Exchange the 1-based classes i and j"""
        table = {i: j, j: i}
        return Coloring(tuple(table.get(c, c) for c in self.colors))


@dataclass
class SearchStats:
    nodes: int = 0
    prunes: int = 0
    wall_time: float = 0.0
    subtrees: int = 1

    def merge(self, other):
        self.nodes += other.nodes
        self.prunes += other.prunes

    def as_dict(self, include_time=True):
        data = {'nodes': self.nodes, 'prunes': self.prunes, 'subtrees': self.subtrees}
        if include_time:
            data['wall_time'] = round(self.wall_time, 6)
        return data


@dataclass(frozen=True)
class ArrowResult:
    verdict: str
    witness: Optional[Coloring]
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def arrows(self):
        return self.verdict == ARROWS


@dataclass(frozen=True)
class SearchConfig:
    # a policy name from ORDER_POLICIES, or an explicit vertex sequence
    vertex_order: object = 'degree'
    symmetry_generators: tuple = ()
    deterministic: bool = True
    worker_width: int = 1
    node_budget: Optional[int] = None


def resolve_order(g: Graph, policy) -> list:
    if isinstance(policy, VertexPermutation):
        policy = policy.image
    if isinstance(policy, str):
        if policy == 'degree':
            return sorted(range(g.n), key=lambda v: (-g.degree(v), v))
        if policy == 'index':
            return list(range(g.n))
        if policy == 'reverse':
            return list(range(g.n - 1, -1, -1))
        raise InvalidParameter(f'unknown vertex order {policy!r}; expected one of {ORDER_POLICIES}')
    order = list(policy)
    if sorted(order) != list(range(g.n)):
        raise InvalidParameter('explicit vertex order must list every vertex exactly once')
    return order


def is_free_coloring(g: Graph, inst: ArrowInstance, c: Coloring) -> bool:
    """True iff class i holds no a_i-clique for every i"""
    if len(c.colors) != g.n:
        raise InvalidParameter(f'coloring covers {len(c.colors)} vertices, graph has {g.n}')
    classes = [0] * inst.r
    for v, color in enumerate(c.colors):
        if color is None:
            raise InvalidParameter(f'vertex {v} is unassigned')
        if not isinstance(color, int) or not 1 <= color <= inst.r:
            raise InvalidParameter(f'vertex {v} has color {color!r} outside [1, {inst.r}]')
        classes[color - 1] |= 1 << v
    return not any(clique_in_mask(g.adj, bits, a) for bits, a in zip(classes, inst.a))


class _Search:
    """One depth-first search over a fixed vertex order"""

    def __init__(self, g, inst, order, orbit_bits, budget):
        self.adj = g.adj
        self.n = g.n
        self.order = order
        self.root = order[0] if order else None
        self.orbit_bits = orbit_bits
        self.budget = budget
        self.stats = SearchStats()

        # a_i = 1 classes stay empty: they are never offered
        self.colors = sorted((i for i, a in enumerate(inst.a) if a >= 2), key=lambda i: (-inst.a[i], i))
        self.need = [inst.a[i] - 1 for i in self.colors]
        self.group_start = []
        for c, i in enumerate(self.colors):
            same = c > 0 and inst.a[self.colors[c - 1]] == inst.a[i]
            self.group_start.append(self.group_start[c - 1] if same else c)
        self.used = [0] * len(self.colors)
        self.classes = [0] * len(self.colors)
        self.assignment = {}
        self.root_color = None

    def _candidates(self, v):
        for c in range(len(self.colors)):
            start = self.group_start[c]
            if c - start > self.used[start]:
                continue
            if self.root_color is not None and self.orbit_bits >> v & 1 and c < self.root_color:
                continue
            if clique_in_mask(self.adj, self.adj[v] & self.classes[c], self.need[c]):
                self.stats.prunes += 1
                continue
            yield c

    def _assign(self, v, c):
        self.classes[c] |= 1 << v
        self.assignment[v] = c
        start = self.group_start[c]
        opened = c - start == self.used[start]
        if opened:
            self.used[start] += 1
        if v == self.root:
            self.root_color = c
        return opened

    def _unassign(self, v, c, opened):
        self.classes[c] &= ~(1 << v)
        del self.assignment[v]
        if opened:
            self.used[self.group_start[c]] -= 1
        if v == self.root:
            self.root_color = None

    def _count_node(self):
        self.stats.nodes += 1
        if self.budget is not None and self.stats.nodes > self.budget:
            raise SearchBudgetExceeded(f'node budget {self.budget} exhausted', stats=self.stats)

    def descend(self, depth):
        if depth == len(self.order):
            return True
        v = self.order[depth]
        for c in self._candidates(v):
            self._count_node()
            opened = self._assign(v, c)
            if self.descend(depth + 1):
                return True
            self._unassign(v, c, opened)
        return False

    def prefixes(self, depth):
        """Every admissible assignment of the first depth vertices"""
        found = []

        def walk(d, trail):
            if d == depth or d == len(self.order):
                found.append(tuple(trail))
                return
            v = self.order[d]
            for c in self._candidates(v):
                self._count_node()
                opened = self._assign(v, c)
                trail.append((v, c))
                walk(d + 1, trail)
                trail.pop()
                self._unassign(v, c, opened)

        walk(0, [])
        return found

    def coloring(self):
        return Coloring(tuple(self.colors[self.assignment[v]] + 1 for v in range(self.n)))


def _explore_subtree(g, inst, order, orbit_bits, budget, prefix):
    search = _Search(g, inst, order, orbit_bits, budget)
    for v, c in prefix:
        search._assign(v, c)
    found = search.descend(len(prefix))
    return (search.coloring() if found else None), search.stats


def _explore_parallel(g, inst, order, orbit_bits, cfg):
    root = _Search(g, inst, order, orbit_bits, cfg.node_budget)
    prefixes = root.prefixes(PARALLEL_DEPTH)
    stats = SearchStats(nodes=root.stats.nodes, prunes=root.stats.prunes, subtrees=len(prefixes))
    logger.debug('dispatching %d subtrees to %d workers', len(prefixes), cfg.worker_width)

    witness = None
    results = Parallel(n_jobs=cfg.worker_width, return_as='generator')(
        delayed(_explore_subtree)(g, inst, order, orbit_bits, cfg.node_budget, prefix)
        for prefix in prefixes
    )
    try:
        for found, sub in results:
            stats.merge(sub)
            if found is not None:
                witness = found
                break
    finally:
        # stops the subtrees still queued once a witness is in
        with warnings.catch_warnings():
            warnings.filterwarnings('ignore', message='.*cancelled', category=UserWarning)
            results.close()
    return witness, stats


def arrows(g: Graph, inst: ArrowInstance, cfg: Optional[SearchConfig] = None) -> ArrowResult:
    """
    Exact decision of G -> (a_1, ..., a_r). The verdict does not depend on
    cfg; only the statistics do.
    """
    cfg = cfg or SearchConfig()
    for gen in cfg.symmetry_generators:
        if not is_automorphism(g, gen):
            raise InvalidParameter('symmetry generator is not an automorphism of the searched graph')
    order = resolve_order(g, cfg.vertex_order)
    orbit_bits = 0
    if cfg.symmetry_generators and order:
        orbit_bits = orbit(order[0], cfg.symmetry_generators, g.n).bits & ~(1 << order[0])

    logger.info('arrowing search: n=%d, tuple=%s, order=%s', g.n, inst.a, cfg.vertex_order)
    started = time.perf_counter()
    try:
        if cfg.deterministic or cfg.worker_width <= 1 or g.n <= PARALLEL_DEPTH:
            witness, stats = _explore_subtree(g, inst, order, orbit_bits, cfg.node_budget, ())
        else:
            witness, stats = _explore_parallel(g, inst, order, orbit_bits, cfg)
    except SearchBudgetExceeded as exc:
        if exc.stats is not None:
            exc.stats.wall_time = time.perf_counter() - started
        logger.warning('arrowing search stopped: %s', exc)
        raise
    stats.wall_time = time.perf_counter() - started

    if witness is None:
        logger.info('search exhausted after %d nodes: graph arrows %s', stats.nodes, inst.a)
        return ArrowResult(ARROWS, None, stats)
    if not is_free_coloring(g, inst, witness):
        raise FolkmanError('search produced a coloring that is not free')
    logger.info('free coloring found after %d nodes', stats.nodes)
    return ArrowResult(NOT_ARROWS, witness, stats)


def arrows_exhaustive(g: Graph, inst: ArrowInstance, limit: int = EXHAUSTIVE_LIMIT) -> ArrowResult:
    """
    Independent check of the definition: tries all r^n colorings, with its
    own memoized clique recursion instead of the branch-and-bound.
    """
    r, n = inst.r, g.n
    if r ** n > limit:
        raise InstanceTooLarge(f'{r}^{n} colorings exceed the exhaustive limit {limit}')
    adj = g.adj
    memo = {0: 0}

    def clique_size(bits):
        if bits in memo:
            return memo[bits]
        low = bits & -bits
        v = low.bit_length() - 1
        size = max(clique_size(bits & ~low), 1 + clique_size(bits & adj[v]))
        memo[bits] = size
        return size

    classes = [0] * r
    stats = SearchStats()
    started = time.perf_counter()

    def walk(v):
        if v == n:
            stats.nodes += 1
            return all(clique_size(bits) < a for bits, a in zip(classes, inst.a))
        for c in range(r):
            classes[c] |= 1 << v
            if walk(v + 1):
                return True
            classes[c] &= ~(1 << v)
        return False

    found = walk(0)
    stats.wall_time = time.perf_counter() - started
    if not found:
        return ArrowResult(ARROWS, None, stats)
    colors = [0] * n
    for c, bits in enumerate(classes):
        for v in range(n):
            if bits >> v & 1:
                colors[v] = c + 1
    return ArrowResult(NOT_ARROWS, Coloring(tuple(colors)), stats)


def in_H(g: Graph, inst: ArrowInstance, q: int, cfg: Optional[SearchConfig] = None) -> bool:
    """G in H(a_1, ..., a_r; q): G arrows the tuple and cl(G) < q"""
    if not isinstance(q, int) or q < 1:
        raise InvalidParameter(f'q must be a positive integer, got {q!r}')
    if clique_number(g).size >= q:
        return False
    return arrows(g, inst, cfg).arrows


def chromatic_exceeds(g: Graph, r: int, cfg: Optional[SearchConfig] = None) -> bool:
    """chi(G) > r, decided as G -> (2, ..., 2) with r twos"""
    if not isinstance(r, int) or r < 1:
        raise InvalidParameter(f'r must be a positive integer, got {r!r}')
    return arrows(g, make_instance((2,) * r), cfg).arrows
