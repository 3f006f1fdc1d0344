"""
Brute-force checks of the clique and arrowing facts the witness
construction rests on.

Every check enumerates its cases exhaustively and returns a CheckReport.
A failing report carries the first counterexample found, written with
1-based vertex labels and enough context for replay_counterexample() to
recompute it from the base modules alone.
"""
import dataclasses
import itertools
import logging
from dataclasses import dataclass
from typing import Optional

from django.conf import settings

from folkman_module.arrowing import Coloring, SearchConfig, arrows, in_H, is_free_coloring
from folkman_module.cliques import clique_number, clique_size_in_mask
from folkman_module.construct import (
    build_gamma,
    build_witness,
    lower_entry,
    make_instance,
    merge_tuple,
    partition_tuples,
    theorem1_tuples,
)
from folkman_module.exceptions import InstanceTooLarge, InvalidParameter, OutOfTheoremRange
from folkman_module.graphs import (
    Graph,
    VertexSet,
    complement,
    connected_components,
    cycle,
    induced,
    iter_bits,
    path,
)

logger = logging.getLogger(__name__)

PASS = 'pass'
FAIL = 'fail'

SUITES = (
    'prop1',
    'paths',
    'lemma1',
    'lemmas23',
    'theorem1',
    'main',
    'corollary1',
    'gamma',
    'reductions',
)

MAIN_ANCHORS = ((3, 3), (2, 2, 3), (3, 3, 2))


@dataclass(frozen=True)
class CheckReport:
    check_id: str
    params: dict
    verdict: str
    cases_examined: int
    counterexample: Optional[dict] = None
    notes: tuple = ()
    discrepancies: tuple = ()

    @property
    def passed(self):
        return self.verdict == PASS

    def as_dict(self):
        return {
            'check_id': self.check_id,
            'params': dict(self.params),
            'verdict': self.verdict,
            'cases_examined': self.cases_examined,
            'counterexample': self.counterexample,
            'notes': list(self.notes),
            'discrepancies': list(self.discrepancies),
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            check_id=data['check_id'],
            params=dict(data.get('params') or {}),
            verdict=data['verdict'],
            cases_examined=data['cases_examined'],
            counterexample=data.get('counterexample'),
            notes=tuple(data.get('notes') or ()),
            discrepancies=tuple(data.get('discrepancies') or ()),
        )


class _Tally:
    """Counts cases and keeps the first failure"""

    def __init__(self, check_id, **params):
        self.check_id = check_id
        self.params = params
        self.cases = 0
        self.counterexample = None
        self.notes = []
        self.discrepancies = []

    def expect(self, ok, counterexample):
        # counterexample is a zero-argument callable, built only on failure
        self.cases += 1
        if not ok and self.counterexample is None:
            self.counterexample = counterexample()
        return ok

    def report(self):
        verdict = PASS if self.counterexample is None else FAIL
        report = CheckReport(
            check_id=self.check_id,
            params=self.params,
            verdict=verdict,
            cases_examined=self.cases,
            counterexample=self.counterexample,
            notes=tuple(self.notes),
            discrepancies=tuple(self.discrepancies),
        )
        if report.passed:
            logger.info('%s %s: pass after %d cases', self.check_id, self.params, self.cases)
        else:
            logger.warning('%s %s: fail, counterexample %s', self.check_id, self.params, self.counterexample)
        return report


def _guard(p, range_key, low_error=InvalidParameter):
    low, high = settings.FOLKMAN[range_key]
    if not isinstance(p, int) or isinstance(p, bool):
        raise InvalidParameter(f'p must be an integer, got {p!r}')
    if p < low:
        raise low_error(f'p={p} is below the checked range [{low}, {high}]')
    if p > high:
        raise InstanceTooLarge(f'p={p} exceeds the exhaustive range [{low}, {high}]')


def _with_symmetry(cfg, sigma):
    return dataclasses.replace(cfg or SearchConfig(), symmetry_generators=(sigma,))


def _labels(bits):
    return [v + 1 for v in iter_bits(bits)]


def _mask(labels):
    bits = 0
    for label in labels:
        bits |= 1 << (label - 1)
    return bits


# Proposition on sums of halves

def _prop1_case(a):
    n = sum(a)
    lhs = sum((x + 1) // 2 for x in a)
    rhs = (n + 1) // 2
    odd = sum(x % 2 for x in a)
    equality = odd == 0 if n % 2 == 0 else odd == 1
    return lhs >= rhs and (lhs == rhs) == equality, lhs, rhs


def verify_prop1(a) -> CheckReport:
    """
    ceil(a_1/2) + ... + ceil(a_r/2) >= ceil(n/2), n = sum(a), with
    equality exactly when all a_i are even (n even) or exactly one is
    odd (n odd)
    """
    a = make_instance(a).a
    tally = _Tally('prop1', tuple=list(a))
    ok, lhs, rhs = _prop1_case(a)
    tally.expect(ok, lambda: {'kind': 'tuple', 'tuple': list(a), 'lhs': lhs, 'rhs': rhs})
    return tally.report()


def verify_prop1_sweep(n_max=12, r_max=4) -> CheckReport:
    """verify_prop1 over every ordered tuple with r <= r_max and sum <= n_max"""
    if n_max < 1 or r_max < 1:
        raise InvalidParameter('n_max and r_max must be positive')
    tally = _Tally('prop1', n_max=n_max, r_max=r_max)
    for r in range(1, r_max + 1):
        for a in itertools.product(range(1, n_max + 1), repeat=r):
            if sum(a) > n_max:
                continue
            ok, lhs, rhs = _prop1_case(a)
            tally.expect(ok, lambda: {'kind': 'tuple', 'tuple': list(a), 'lhs': lhs, 'rhs': rhs})
    return tally.report()


# Complements of paths

def _path_clique(k, removed=()):
    g = complement(path(k))
    return clique_size_in_mask(g.adj, ((1 << k) - 1) & ~_mask(removed))


def verify_path_complement(k_max=16) -> CheckReport:
    """
    Clique numbers of path complements and of their vertex deletions:
      cl(P_k bar) = ceil(k/2);
      every single deletion from P_2k bar keeps its clique number;
      deleting v_{2k-2}, v_{2k-1} from P_2k bar (k >= 2) keeps it too;
      deleting v_{2i} from P_{2k+1} bar keeps its clique number.
    The pair deletion is also compared with cl(P_{2k+1} bar); those values
    differ and every difference is listed under discrepancies.
    """
    if not isinstance(k_max, int) or k_max < 2:
        raise InvalidParameter(f'k_max must be an integer >= 2, got {k_max!r}')
    tally = _Tally('paths', k_max=k_max)

    def deletion_case(k, removed, expected):
        found = _path_clique(k, removed)
        tally.expect(found == expected, lambda: {
            'kind': 'path-deletion',
            'k': k,
            'removed': list(removed),
            'expected': expected,
            'found': found,
        })

    for k in range(1, k_max + 1):
        deletion_case(k, (), (k + 1) // 2)

    for half in range(1, k_max // 2 + 1):
        k = 2 * half
        full = _path_clique(k)
        for v in range(1, k + 1):
            deletion_case(k, (v,), full)
        if half >= 2:
            pair = (k - 2, k - 1)
            deletion_case(k, pair, full)
            longer = _path_clique(k + 1)
            if full != longer:
                tally.discrepancies.append({
                    'k': k,
                    'removed': list(pair),
                    'left': full,
                    'right_odd_path': longer,
                })

    for half in range(1, (k_max - 1) // 2 + 1):
        k = 2 * half + 1
        full = _path_clique(k)
        for i in range(1, half + 1):
            deletion_case(k, (2 * i,), full)

    if tally.discrepancies:
        tally.notes.append(
            'cl(P_2k bar - {v_(2k-2), v_(2k-1)}) equals cl(P_2k bar) = k, '
            'not cl(P_(2k+1) bar) = k + 1; the equality with cl(P_2k bar) is what is asserted'
        )
    return tally.report()


# Induced subgraphs of the odd cycle complement

def _path_order(c_adj, comp):
    """Vertices of a path component, walked from its smaller endpoint"""
    members = list(iter_bits(comp))
    if len(members) == 1:
        return members
    start = min(v for v in members if (c_adj[v] & comp).bit_count() == 1)
    order = [start]
    prev, cur = None, start
    while len(order) < len(members):
        nxt = next(w for w in iter_bits(c_adj[cur] & comp) if w != prev)
        order.append(nxt)
        prev, cur = cur, nxt
    return order


def _path_components(c_adj, bits):
    """Components of C[bits] for a proper subset, ordered by smallest vertex"""
    comps = []
    remaining = bits
    while remaining:
        comp = frontier = remaining & -remaining
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= c_adj[v]
            frontier = reach & bits & ~comp
            comp |= frontier
        comps.append(_path_order(c_adj, comp))
        remaining &= ~comp
    return comps


def _cycle_pair(p):
    c = cycle(2 * p + 1)
    return c, complement(c)


def _lemma1_case(c, cbar, bits):
    n = bits.bit_count()
    cl = clique_size_in_mask(cbar.adj, bits)
    sizes = [len(comp) for comp in _path_components(c.adj, bits)]
    half = (n + 1) // 2
    odd = sum(s % 2 for s in sizes)
    equality = odd == 0 if n % 2 == 0 else odd == 1
    ok = cl >= half and (cl == half) == equality and cl == sum((s + 1) // 2 for s in sizes)
    return ok, cl, sizes


def verify_lemma1(p) -> CheckReport:
    """
    For every proper subset V of the (2p+1)-cycle: cl of the complement
    restricted to V is at least ceil(|V|/2), with equality exactly as the
    component sizes of C[V] predict
    """
    _guard(p, 'LEMMA_P_RANGE')
    c, cbar = _cycle_pair(p)
    tally = _Tally('lemma1', p=p)
    for bits in range((1 << c.n) - 1):
        ok, cl, sizes = _lemma1_case(c, cbar, bits)
        tally.expect(ok, lambda: {
            'kind': 'subset',
            'p': p,
            'vertices': _labels(bits),
            'clique_number': cl,
            'component_sizes': sizes,
        })
    return tally.report()


def _deletions(comps):
    """(rule, removed vertices) pairs that must keep the clique number"""
    for comp in comps:
        k = len(comp)
        if k % 2 == 0:
            for v in comp:
                yield 'single', (v,)
            if k >= 4:
                yield 'pair', (comp[-3], comp[-2])
        else:
            for i in range(1, k // 2 + 1):
                yield 'even-position', (comp[2 * i - 1],)
    for comp in comps:
        if len(comp) % 2:
            continue
        for other in comps:
            if other is comp:
                continue
            if len(other) % 2 == 0:
                for v in comp:
                    for w in other:
                        yield 'cross-pair', (v, w)
                if len(comp) >= 4:
                    for w in other:
                        yield 'cross-triple', (comp[-3], comp[-2], w)
            elif len(comp) >= 4:
                for i in range(1, len(other) // 2 + 1):
                    yield 'cross-triple', (comp[-3], comp[-2], other[2 * i - 1])


def verify_lemmas_2_3(p) -> CheckReport:
    """
    Deletions inside and across the path components of C[V] that keep
    cl of the complement: single vertices of even paths, the pair
    v_{2s-2}, v_{2s-1} of an even path, even positions of odd paths, and
    the cross-component pairs and triples. Every proper subset V is tried.
    """
    _guard(p, 'LEMMA_P_RANGE')
    c, cbar = _cycle_pair(p)
    tally = _Tally('lemmas23', p=p)
    for bits in range(1, (1 << c.n) - 1):
        base = clique_size_in_mask(cbar.adj, bits)
        for rule, removed in _deletions(_path_components(c.adj, bits)):
            rest = bits
            for v in removed:
                rest &= ~(1 << v)
            found = clique_size_in_mask(cbar.adj, rest)
            tally.expect(found == base, lambda: {
                'kind': 'subset-deletion',
                'p': p,
                'rule': rule,
                'vertices': _labels(bits),
                'removed': [v + 1 for v in removed],
                'expected': base,
                'found': found,
            })
    return tally.report()


# Arrowing of Gamma_p and of the witness graphs

def _coloring_counterexample(graph_ref, a, result):
    return {
        'kind': 'coloring',
        'graph': graph_ref,
        'tuple': list(a),
        'colors': list(result.witness.colors),
    }


def verify_theorem1(p, cfg: Optional[SearchConfig] = None) -> CheckReport:
    """
    Gamma_p arrows every non-increasing tuple with entries in [2, p] and
    m = p + 2
    """
    _guard(p, 'THEOREM1_P_RANGE', low_error=OutOfTheoremRange)
    gamma = build_gamma(p)
    cfg = _with_symmetry(cfg, gamma.sigma)
    tally = _Tally('theorem1', p=p)
    nodes = 0
    for a in theorem1_tuples(p):
        result = arrows(gamma.graph, make_instance(a), cfg)
        nodes += result.stats.nodes
        tally.expect(result.arrows, lambda: _coloring_counterexample({'gamma': p}, a, result))
    tally.notes.append('tuples holding an entry 1 reduce to the tuple without it and are not enumerated')
    tally.notes.append(f'{nodes} search nodes')
    return tally.report()


def _value_counterexample(graph_ref, quantity, expected, found, **extra):
    return dict(
        kind='value',
        graph=graph_ref,
        quantity=quantity,
        expected=expected,
        found=found,
        **extra,
    )


def verify_main(inst, cfg: Optional[SearchConfig] = None) -> CheckReport:
    """
    K_{m-p-2} + Gamma_p has m + 3p vertices, clique number m - 2 and
    arrows the tuple, so it lies in H(a; m-1)
    """
    witness = build_witness(inst)
    g = witness.graph
    ref = {'witness': list(inst.a)}
    tally = _Tally('main', tuple=list(inst.a), m=inst.m, p=inst.p)

    order = inst.m + 3 * inst.p
    tally.expect(g.n == order, lambda: _value_counterexample(ref, 'order', order, g.n))
    cl = clique_number(g).size
    tally.expect(cl == inst.m - 2, lambda: _value_counterexample(ref, 'clique_number', inst.m - 2, cl))

    result = arrows(g, inst, _with_symmetry(cfg, witness.sigma))
    tally.expect(result.arrows, lambda: _coloring_counterexample(ref, inst.a, result))
    member = result.arrows and cl < inst.m - 1
    tally.expect(member, lambda: _value_counterexample(ref, 'in_H', True, member, tuple=list(inst.a)))
    tally.notes.append(f'{result.stats.nodes} search nodes')
    return tally.report()


def verify_corollary1(p) -> CheckReport:
    """
    cl(Gamma_p) = p, and N(u_1) = M_1 induces a graph with clique number
    p - 1 whose cycle components are {v_2..v_{2p-3}} and {v_2p, v_{2p+1}}
    """
    if not isinstance(p, int) or p < 3:
        raise OutOfTheoremRange(f'the clique number of Gamma_p is checked for p >= 3, got {p!r}')
    gamma = build_gamma(p)
    ref = {'gamma': p}
    tally = _Tally('corollary1', p=p)

    cl = clique_number(gamma.graph).size
    tally.expect(cl == p, lambda: _value_counterexample(ref, 'clique_number', p, cl))

    m1 = gamma.m_sets[0]
    m1_cl = clique_number(induced(gamma.graph, m1).graph).size
    tally.expect(m1_cl == p - 1, lambda: _value_counterexample(ref, 'm1_clique_number', p - 1, m1_cl))

    comps = _m1_components(p)
    expected = [list(range(2, 2 * p - 2)), [2 * p, 2 * p + 1]]
    tally.expect(comps == expected, lambda: _value_counterexample(ref, 'm1_components', expected, comps))
    return tally.report()


def _m1_components(p):
    size = 2 * p + 1
    m1 = build_gamma(p).m_sets[0]
    sub, mapping = induced(cycle(size), VertexSet(size, m1.bits & ((1 << size) - 1)))
    return [[mapping[v] + 1 for v in comp] for comp in connected_components(sub)]


def verify_gamma(p) -> CheckReport:
    """Structural invariants of Gamma_p, sigma^(2p+1) = id included"""
    gamma = build_gamma(p)
    ref = {'gamma': p}
    tally = _Tally('gamma', p=p)
    size = 2 * p + 1
    tally.expect(gamma.graph.n == 2 * size, lambda: _value_counterexample(ref, 'order', 2 * size, gamma.graph.n))
    edges = 3 * size * (p - 1)
    found_edges = gamma.graph.edge_count
    tally.expect(found_edges == edges, lambda: _value_counterexample(ref, 'edge_count', edges, found_edges))
    problems = gamma.invariant_violations()
    tally.expect(not problems, lambda: _value_counterexample(ref, 'invariant_violations', [], problems))
    return tally.report()


def verify_reductions(p, cfg: Optional[SearchConfig] = None) -> CheckReport:
    """
    The two tuple reductions the induction runs on, checked by search:
      merging the two smallest entries: Gamma_p -> merged implies
      Gamma_p -> a;
      raising one entry by one: Gamma_p -> a implies K_1 + Gamma_p ->
      the raised tuple.
    """
    _guard(p, 'THEOREM1_P_RANGE', low_error=OutOfTheoremRange)
    gamma = build_gamma(p)
    gamma_cfg = _with_symmetry(cfg, gamma.sigma)
    ref = {'gamma': p}
    tally = _Tally('reductions', p=p)
    verdicts = {}

    def on_gamma(a):
        if a not in verdicts:
            verdicts[a] = arrows(gamma.graph, make_instance(a), gamma_cfg)
        return verdicts[a]

    for a in theorem1_tuples(p):
        if len(a) < 3:
            continue
        merged = merge_tuple(a, len(a) - 2, len(a) - 1)
        if max(merged) > p:
            continue
        base = on_gamma(a)
        lifted = on_gamma(merged).arrows
        tally.expect(not lifted or base.arrows, lambda: _coloring_counterexample(ref, a, base))

    # tuples with m = p + 3, searched on K_1 + Gamma_p
    for b in partition_tuples(p + 2, p):
        if max(b) != p:
            continue
        witness = build_witness(make_instance(b))
        result = arrows(witness.graph, witness.instance, _with_symmetry(cfg, witness.sigma))
        for i, x in enumerate(b):
            if x in b[:i]:
                continue
            lowered = on_gamma(lower_entry(b, i))
            tally.expect(
                not lowered.arrows or result.arrows,
                lambda: _coloring_counterexample({'witness': list(b)}, b, result),
            )
    return tally.report()


# Replay

def _resolve_graph(ref) -> Graph:
    if 'gamma' in ref:
        return build_gamma(ref['gamma']).graph
    if 'witness' in ref:
        return build_witness(make_instance(ref['witness'])).graph
    if 'edges' in ref:
        return Graph.from_edges(ref['n'], (tuple(e) for e in ref['edges']))
    raise InvalidParameter(f'unknown graph reference {ref!r}')


def _measure(ce):
    quantity = ce['quantity']
    ref = ce['graph']
    if quantity == 'm1_clique_number':
        gamma = build_gamma(ref['gamma'])
        return clique_number(induced(gamma.graph, gamma.m_sets[0]).graph).size
    if quantity == 'm1_components':
        return _m1_components(ref['gamma'])
    if quantity == 'invariant_violations':
        return build_gamma(ref['gamma']).invariant_violations()
    g = _resolve_graph(ref)
    if quantity == 'order':
        return g.n
    if quantity == 'edge_count':
        return g.edge_count
    if quantity == 'clique_number':
        return clique_number(g).size
    if quantity == 'in_H':
        inst = make_instance(ce['tuple'])
        return in_H(g, inst, inst.m - 1)
    raise InvalidParameter(f'unknown quantity {quantity!r}')


def replay_counterexample(report) -> bool:
    """
    Recompute a failed report's counterexample from the base modules.
    True when the failure is reproduced.
    """
    if isinstance(report, dict):
        report = CheckReport.from_dict(report)
    ce = report.counterexample
    if ce is None:
        raise InvalidParameter(f'report {report.check_id} has no counterexample to replay')
    kind = ce.get('kind')
    if kind == 'tuple':
        return not _prop1_case(tuple(ce['tuple']))[0]
    if kind == 'path-deletion':
        return _path_clique(ce['k'], ce['removed']) != ce['expected']
    if kind == 'subset':
        c, cbar = _cycle_pair(ce['p'])
        return not _lemma1_case(c, cbar, _mask(ce['vertices']))[0]
    if kind == 'subset-deletion':
        _, cbar = _cycle_pair(ce['p'])
        rest = _mask(ce['vertices']) & ~_mask(ce['removed'])
        return clique_size_in_mask(cbar.adj, rest) != ce['expected']
    if kind == 'coloring':
        g = _resolve_graph(ce['graph'])
        return is_free_coloring(g, make_instance(ce['tuple']), Coloring(tuple(ce['colors'])))
    if kind == 'value':
        return _measure(ce) != ce['expected']
    raise InvalidParameter(f'unknown counterexample kind {kind!r}')


def run_suite(suite, p=None, a=None, k_max=16, cfg: Optional[SearchConfig] = None) -> list:
    """Reports for one named suite; without p or a, the default parameter sweep"""
    if suite not in SUITES:
        raise InvalidParameter(f'unknown suite {suite!r}; expected one of {SUITES}')
    if suite == 'prop1':
        return [verify_prop1(a)] if a is not None else [verify_prop1_sweep()]
    if suite == 'paths':
        return [verify_path_complement(k_max)]
    if suite == 'main':
        tuples = [a] if a is not None else MAIN_ANCHORS
        return [verify_main(make_instance(t), cfg) for t in tuples]

    defaults = {
        'lemma1': range(2, 6),
        'lemmas23': range(2, 6),
        'theorem1': (3,),
        'corollary1': range(3, 9),
        'gamma': range(2, 9),
        'reductions': (3,),
    }
    checks = {
        'lemma1': verify_lemma1,
        'lemmas23': verify_lemmas_2_3,
        'theorem1': lambda q: verify_theorem1(q, cfg),
        'corollary1': verify_corollary1,
        'gamma': verify_gamma,
        'reductions': lambda q: verify_reductions(q, cfg),
    }
    ps = [p] if p is not None else defaults[suite]
    return [checks[suite](q) for q in ps]
