"""
The parameterized objects behind the bound F(a_1, ..., a_r; m-1) <= m + 3p:
the instance parameters m and p, the graph Gamma_p with its labeling and
cyclic automorphism sigma, the witness K_{m-p-2} + Gamma_p, and the
known bounds reported next to every result.

Layout of Gamma_p: indices 0..2p hold v_1..v_{2p+1}, indices
2p+1..4p+1 hold u_1..u_{2p+1}.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional

from .exceptions import ConstructionUndefined, InvalidParameter, OutOfTheoremRange
from .graphs import (
    Graph,
    VertexPermutation,
    VertexSet,
    complement,
    complete,
    cycle,
    is_automorphism,
    iter_bits,
    join,
)

HYPOTHESIS_NOTE = (
    'the m + 3p upper bound is stated for m >= p and p >= 3; the witness '
    'K_{m-p-2} + Gamma_p is only defined for m >= p + 2, which is enforced'
)


@dataclass(frozen=True)
class ArrowInstance:
    a: tuple
    m: int
    p: int
    q: Optional[int] = None

    @property
    def r(self):
        return len(self.a)

    def as_dict(self):
        return {'a': list(self.a), 'm': self.m, 'p': self.p, 'q': self.q}


def _is_positive_int(x):
    return isinstance(x, int) and not isinstance(x, bool) and x >= 1


def make_instance(a, q=None) -> ArrowInstance:
    """
    Instance for the tuple a with m = sum(a_i - 1) + 1 and p = max(a_i).
    Input order is kept; certificates echo it.
    """
    a = tuple(a)
    if not a:
        raise InvalidParameter('the tuple (a_1, ..., a_r) must not be empty')
    for x in a:
        if not _is_positive_int(x):
            raise InvalidParameter(f'tuple entries must be positive integers, got {x!r}')
    if q is not None and not _is_positive_int(q):
        raise InvalidParameter(f'clique bound q must be a positive integer, got {q!r}')
    return ArrowInstance(a=a, m=sum(x - 1 for x in a) + 1, p=max(a), q=q)


def existence_check(inst: ArrowInstance, q: int) -> bool:
    """F(a_1, ..., a_r; q) exists iff q > max a_i"""
    if not _is_positive_int(q):
        raise InvalidParameter(f'q must be a positive integer, got {q!r}')
    return q > inst.p


def merge_tuple(a, i, j) -> tuple:
    """
    Replace a_i and a_j by a_i + a_j - 1 (kept at the smaller position).
    m is unchanged; G -> merged implies G -> a by pigeonhole.
    """
    a = tuple(a)
    if i == j or not (0 <= i < len(a) and 0 <= j < len(a)):
        raise InvalidParameter(f'cannot merge positions {i} and {j} of a {len(a)}-tuple')
    first, second = sorted((i, j))
    merged = list(a)
    merged[first] = a[i] + a[j] - 1
    del merged[second]
    return tuple(merged)


def lower_entry(a, i) -> tuple:
    """Decrease a_i by one; used by the induction on K_t + Gamma_p"""
    a = tuple(a)
    if not 0 <= i < len(a):
        raise InvalidParameter(f'position {i} out of range for a {len(a)}-tuple')
    if a[i] < 2:
        raise InvalidParameter(f'entry a_{i + 1} = {a[i]} cannot be lowered')
    return a[:i] + (a[i] - 1,) + a[i + 1:]


def partition_tuples(total, largest, smallest=2):
    """
    Non-increasing tuples with entries in [smallest, largest] and
    sum(a_i - 1) == total
    """
    def extend(prefix, remaining, cap):
        if remaining == 0:
            yield tuple(prefix)
            return
        for x in range(min(cap, remaining + 1), smallest - 1, -1):
            yield from extend(prefix + [x], remaining - (x - 1), x)

    if total < 0 or smallest < 2:
        return
    yield from extend([], total, largest)


def theorem1_tuples(p):
    """Every tuple with m = p + 2 and max a_i <= p, entries >= 2"""
    return list(partition_tuples(p + 1, p))


@dataclass(frozen=True)
class GammaGraph:
    p: int
    graph: Graph
    v_labels: tuple
    u_labels: tuple
    sigma: VertexPermutation
    m_sets: tuple

    def v(self, i):
        """Index of v_i, 1-based i"""
        return self.v_labels[i - 1]

    def u(self, i):
        """Index of u_i, 1-based i"""
        return self.u_labels[i - 1]

    def labels(self):
        names = [''] * self.graph.n
        for i, v in enumerate(self.v_labels, start=1):
            names[v] = f'v{i}'
        for i, u in enumerate(self.u_labels, start=1):
            names[u] = f'u{i}'
        return names

    def invariant_violations(self):
        """Empty when every structural property of Gamma_p holds"""
        problems = []
        g = self.graph
        size = 2 * self.p + 1
        v_bits = VertexSet.from_indices(g.n, self.v_labels).bits
        u_bits = VertexSet.from_indices(g.n, self.u_labels).bits
        for i, v in enumerate(self.v_labels):
            expected = v_bits & ~(1 << v)
            expected &= ~(1 << self.v_labels[(i + 1) % size]) & ~(1 << self.v_labels[i - 1])
            if g.adj[v] & v_bits != expected:
                problems.append(f'v{i + 1}: v-part is not the complement of C_{size}')
        for i, u in enumerate(self.u_labels):
            if g.adj[u] & u_bits:
                problems.append(f'u{i + 1} is adjacent to another u-vertex')
            if g.adj[u] != self.m_sets[i].bits:
                problems.append(f'N(u{i + 1}) != M_{i + 1}')
            if len(self.m_sets[i]) != 2 * self.p - 2:
                problems.append(f'|M_{i + 1}| != {2 * self.p - 2}')
            if self.m_sets[i] != self.sigma.power(i).apply(self.m_sets[0]):
                problems.append(f'M_{i + 1} is not sigma^{i}(M_1)')
        if not is_automorphism(g, self.sigma):
            problems.append('sigma is not an automorphism')
        if not self.sigma.power(size).is_identity():
            problems.append(f'sigma^{size} is not the identity')
        return problems


def build_gamma(p: int) -> GammaGraph:
    """
    Gamma_p: the complement of C_{2p+1} plus pairwise independent vertices
    u_1..u_{2p+1} with N(u_i) = M_i, M_1 = V(C_{2p+1}) \\ {v_1, v_{2p-1}, v_{2p-2}}.
    p = 2 builds, but no bound is certified for it.
    """
    if not isinstance(p, int) or p < 2:
        raise InvalidParameter(f'Gamma_p needs p >= 2, got {p!r}')
    size = 2 * p + 1
    n = 2 * size
    v_labels = tuple(range(size))
    u_labels = tuple(range(size, n))

    image = [(i + 1) % size for i in range(size)] + [size + (i + 1) % size for i in range(size)]
    sigma = VertexPermutation(tuple(image))

    excluded = {0, 2 * p - 2, 2 * p - 3}
    m_first = VertexSet.from_indices(n, (v for v in range(size) if v not in excluded))
    m_sets = tuple(
        VertexSet.from_indices(n, ((v + shift) % size for v in m_first))
        for shift in range(size)
    )

    rows = list(complement(cycle(size)).adj) + [0] * size
    for i, u in enumerate(u_labels):
        rows[u] = m_sets[i].bits
        for v in iter_bits(m_sets[i].bits):
            rows[v] |= 1 << u
    return GammaGraph(
        p=p,
        graph=Graph(n, tuple(rows)),
        v_labels=v_labels,
        u_labels=u_labels,
        sigma=sigma,
        m_sets=m_sets,
    )


@dataclass(frozen=True)
class WitnessGraph:
    """
    K_{m-p-2} + Gamma_p: the K block takes indices 0..m-p-3 and
    Gamma_p follows, shifted by m-p-2
    """
    instance: ArrowInstance
    graph: Graph
    gamma: GammaGraph
    block: int
    # sigma on the Gamma_p part, identity on the K block
    sigma: VertexPermutation

    def labels(self):
        return [f'w{i + 1}' for i in range(self.block)] + self.gamma.labels()


def build_witness(inst: ArrowInstance) -> WitnessGraph:
    if inst.m < inst.p + 2:
        raise ConstructionUndefined(
            f'K_(m-p-2) + Gamma_p needs m >= p + 2; got m={inst.m}, p={inst.p}'
        )
    if inst.p < 3:
        raise OutOfTheoremRange(f'the bound m + 3p is proved for p >= 3; got p={inst.p}')
    block = inst.m - inst.p - 2
    gamma = build_gamma(inst.p)
    sigma = VertexPermutation(
        tuple(range(block)) + tuple(block + x for x in gamma.sigma.image)
    )
    return WitnessGraph(
        instance=inst,
        graph=join(complete(block), gamma.graph),
        gamma=gamma,
        block=block,
        sigma=sigma,
    )


def witness_graph(inst: ArrowInstance) -> Graph:
    return build_witness(inst).graph


@dataclass(frozen=True)
class Bound:
    value: int
    valid: bool
    window: str


@dataclass(frozen=True)
class BoundReport:
    m: int
    p: int
    exists: bool
    upper_main: Bound
    upper_lru_large: Bound
    upper_lru_mid: Bound
    lower: Bound
    exact_q_m: Bound
    exact_q_large: Bound

    def as_dict(self):
        return asdict(self)


def bounds_report(inst: ArrowInstance) -> BoundReport:
    """
    Known bounds for F(a_1, ..., a_r; m-1), each with the window it is
    valid in. Values are reported even outside their window.
    """
    m, p = inst.m, inst.p
    return BoundReport(
        m=m,
        p=p,
        exists=m >= p + 2,
        upper_main=Bound(m + 3 * p, p >= 3 and m >= p + 2, 'p >= 3 and m >= p + 2'),
        upper_lru_large=Bound(m + p * p, m >= 2 * p + 2, 'm >= 2p + 2'),
        upper_lru_mid=Bound(
            3 * p * p + p - m * p + 2 * m - 3,
            p + 3 <= m <= 2 * p + 1,
            'p + 3 <= m <= 2p + 1',
        ),
        lower=Bound(m + p + 2, p >= 2, 'p >= 2'),
        # F(a; m) = m + p and F(a; q) = m for q >= m + 1
        exact_q_m=Bound(m + p, m >= p + 1, 'q = m, m >= p + 1'),
        exact_q_large=Bound(m, True, 'q >= m + 1'),
    )
