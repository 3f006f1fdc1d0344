import itertools
import random
import warnings

import networkx as nx
from django.test import SimpleTestCase, tag

from .arrowing import (
    ARROWS,
    NOT_ARROWS,
    Coloring,
    SearchConfig,
    arrows,
    arrows_exhaustive,
    chromatic_exceeds,
    in_H,
    is_free_coloring,
)
from .cliques import (
    clique_number,
    clique_number_within,
    clique_size_in_mask,
    degeneracy_order,
    has_k_clique_within,
)
from .construct import (
    bounds_report,
    build_gamma,
    build_witness,
    existence_check,
    lower_entry,
    make_instance,
    merge_tuple,
    theorem1_tuples,
    witness_graph,
)
from .exceptions import (
    ConstructionUndefined,
    InstanceTooLarge,
    InvalidParameter,
    OutOfTheoremRange,
    SearchBudgetExceeded,
)
from .graphs import (
    Graph,
    VertexPermutation,
    VertexSet,
    complement,
    complete,
    connected_components,
    cycle,
    delete,
    empty,
    induced,
    is_automorphism,
    join,
    neighborhood,
    path,
)


def random_graph(rng, n, density=0.5):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density]
    return Graph.from_edges(n, edges)


def circulant(n, jumps):
    return Graph.from_edges(n, {tuple(sorted((i, (i + s) % n))) for i in range(n) for s in jumps})


def dihedral_generators(n):
    rotation = VertexPermutation(tuple((i + 1) % n for i in range(n)))
    reflection = VertexPermutation(tuple(-i % n for i in range(n)))
    return rotation, reflection


def to_nx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def brute_clique_number(g):
    best = 0
    for size in range(1, g.n + 1):
        if any(all(g.has_edge(u, v) for u, v in itertools.combinations(c, 2))
               for c in itertools.combinations(range(g.n), size)):
            best = size
        else:
            break
    return best


def vs(g, indices):
    return VertexSet.from_indices(g.n, indices)


class GraphConstructorTests(SimpleTestCase):
    """Constructors and combinators of the bitmask graph"""

    def test_cycle(self):
        c7 = cycle(7)
        self.assertEqual(c7.n, 7)
        self.assertEqual(c7.edge_count, 7)
        self.assertTrue(all(c7.degree(v) == 2 for v in range(7)))
        self.assertEqual(cycle(3), complete(3))
        self.assertEqual(cycle(9).edge_count, 9)

    def test_cycle_rejects_short(self):
        with self.assertRaises(InvalidParameter):
            cycle(2)

    def test_path(self):
        self.assertEqual(path(1).edge_count, 0)
        self.assertEqual(path(2), complete(2))
        p5 = path(5)
        self.assertEqual(p5.edge_count, 4)
        self.assertEqual(sorted(p5.degree(v) for v in range(5)), [1, 1, 2, 2, 2])
        with self.assertRaises(InvalidParameter):
            path(0)

    def test_complete(self):
        self.assertEqual(complete(0).n, 0)
        self.assertEqual(complete(3).edge_count, 3)
        self.assertEqual(complete(5).edge_count, 10)

    def test_complement(self):
        c7 = cycle(7)
        self.assertEqual(complement(complement(c7)), c7)
        self.assertEqual(complement(c7).edge_count, 14)
        self.assertEqual(complement(complete(3)), empty(3))

    def test_join(self):
        self.assertEqual(join(complete(2), complete(3)), complete(5))
        self.assertEqual(join(complete(0), cycle(5)), cycle(5))
        wheel = join(complete(1), cycle(5))
        self.assertEqual((wheel.n, wheel.edge_count), (6, 10))
        # g2 is shifted by n1
        self.assertTrue(wheel.has_edge(1, 2))
        self.assertFalse(wheel.has_edge(1, 3))

    def test_induced_on_cycle(self):
        c7 = cycle(7)
        sub, mapping = induced(c7, vs(c7, [1, 2, 5, 6]))
        self.assertEqual(mapping, (1, 2, 5, 6))
        self.assertEqual(sub.edges(), [(0, 1), (2, 3)])
        self.assertEqual(induced(c7, c7.vertices()).graph, c7)

    def test_induced_on_cycle_complement_is_4_cycle(self):
        cbar = complement(cycle(7))
        sub = induced(cbar, vs(cbar, [1, 2, 5, 6])).graph
        self.assertEqual(sub.edge_count, 4)
        self.assertTrue(all(sub.degree(v) == 2 for v in range(4)))
        self.assertEqual(clique_number(sub).size, 2)

    def test_induced_rejects_foreign_set(self):
        with self.assertRaises(InvalidParameter):
            induced(cycle(5), VertexSet(7, 0b1000000))

    def test_delete(self):
        k5 = complete(5)
        self.assertEqual(delete(k5, VertexSet(5, 0)), k5)
        self.assertEqual(delete(k5, vs(k5, [2])), complete(4))
        self.assertEqual(delete(cycle(7), VertexSet(7, 1)), path(6))

    def test_neighborhood(self):
        self.assertEqual(neighborhood(cycle(7), 0).indices(), (1, 6))
        self.assertEqual(neighborhood(complete(4), 2).indices(), (0, 1, 3))
        gamma = build_gamma(3)
        names = gamma.labels()
        self.assertEqual([names[v] for v in neighborhood(gamma.graph, gamma.u(1))], ['v2', 'v3', 'v6', 'v7'])
        with self.assertRaises(InvalidParameter):
            neighborhood(cycle(5), 5)

    def test_connected_components(self):
        c7 = cycle(7)
        sub = induced(c7, vs(c7, [1, 2, 5, 6])).graph
        self.assertEqual([c.indices() for c in connected_components(sub)], [(0, 1), (2, 3)])
        self.assertEqual([c.indices() for c in connected_components(complete(5))], [(0, 1, 2, 3, 4)])
        self.assertEqual([c.indices() for c in connected_components(empty(3))], [(0,), (1,), (2,)])

    def test_is_automorphism(self):
        gamma = build_gamma(3)
        self.assertTrue(is_automorphism(gamma.graph, gamma.sigma))
        g = random_graph(random.Random(3), 9)
        self.assertTrue(is_automorphism(g, VertexPermutation.identity(9)))
        self.assertFalse(is_automorphism(path(3), VertexPermutation((1, 0, 2))))
        with self.assertRaises(InvalidParameter):
            is_automorphism(path(3), VertexPermutation.identity(4))

    def test_graph_validation(self):
        with self.assertRaises(InvalidParameter):
            Graph(2, (0b10, 0))
        with self.assertRaises(InvalidParameter):
            Graph(1, (0b1,))
        with self.assertRaises(InvalidParameter):
            empty(513)
        with self.assertRaises(InvalidParameter):
            VertexPermutation((0, 0, 1))

    def test_edges_are_lexicographic(self):
        g = Graph.from_edges(4, [(3, 1), (2, 0), (1, 0)])
        self.assertEqual(g.edges(), [(0, 1), (0, 2), (1, 3)])


class GraphPropertyTests(SimpleTestCase):
    def setUp(self):
        self.rng = random.Random(20240611)

    def test_complement_is_involution(self):
        for _ in range(30):
            g = random_graph(self.rng, self.rng.randint(0, 40))
            self.assertEqual(complement(complement(g)), g)

    def test_induced_keeps_exactly_inner_edges(self):
        for _ in range(40):
            n = self.rng.randint(1, 16)
            g = random_graph(self.rng, n)
            s = VertexSet(n, self.rng.getrandbits(n))
            sub, mapping = induced(g, s)
            for i, j in itertools.combinations(range(sub.n), 2):
                self.assertEqual(sub.has_edge(i, j), g.has_edge(mapping[i], mapping[j]))

    def test_components_form_a_partition(self):
        for _ in range(40):
            g = random_graph(self.rng, self.rng.randint(1, 16), density=0.15)
            parts = connected_components(g)
            covered = 0
            for part in parts:
                self.assertEqual(covered & part.bits, 0)
                covered |= part.bits
                self.assertEqual(len(connected_components(induced(g, part).graph)), 1)
                for v in part:
                    self.assertEqual(g.adj[v] & ~part.bits, 0)
            self.assertEqual(covered, (1 << g.n) - 1)

    def test_sigma_order(self):
        for p in range(2, 9):
            gamma = build_gamma(p)
            self.assertTrue(gamma.sigma.power(2 * p + 1).is_identity())
            self.assertFalse(gamma.sigma.power(2 * p).is_identity())

    def test_join_adds_clique_numbers(self):
        for _ in range(25):
            g1 = random_graph(self.rng, self.rng.randint(0, 10))
            g2 = random_graph(self.rng, self.rng.randint(0, 10))
            self.assertEqual(
                clique_number(join(g1, g2)).size,
                clique_number(g1).size + clique_number(g2).size,
            )


class CliqueSolverTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(clique_number(complete(5)).size, 5)
        self.assertEqual(clique_number(complement(path(5))).size, 3)
        self.assertEqual(clique_number(build_gamma(3).graph).size, 3)
        result = clique_number(empty(0))
        self.assertEqual((result.size, len(result.witness)), (0, 0))

    def test_witness_is_lexicographically_smallest_maximum_clique(self):
        rng = random.Random(7)
        for _ in range(40):
            g = random_graph(rng, rng.randint(1, 12))
            result = clique_number(g)
            members = result.witness.indices()
            self.assertEqual(len(members), result.size)
            self.assertTrue(all(g.has_edge(u, v) for u, v in itertools.combinations(members, 2)))
            smallest = min(
                c for c in itertools.combinations(range(g.n), result.size)
                if all(g.has_edge(u, v) for u, v in itertools.combinations(c, 2))
            )
            self.assertEqual(members, smallest)

    def test_exact_against_enumeration(self):
        rng = random.Random(11)
        for _ in range(60):
            g = random_graph(rng, rng.randint(0, 14), density=rng.choice([0.3, 0.5, 0.7]))
            self.assertEqual(clique_number(g).size, brute_clique_number(g))

    def test_exact_against_networkx(self):
        rng = random.Random(13)
        for _ in range(20):
            g = random_graph(rng, rng.randint(15, 40), density=0.6)
            expected = max((len(c) for c in nx.find_cliques(to_nx(g))), default=0)
            self.assertEqual(clique_number(g).size, expected)

    def test_size_only_search_on_masks(self):
        rng = random.Random(17)
        for _ in range(40):
            g = random_graph(rng, rng.randint(1, 14))
            mask = rng.getrandbits(g.n)
            expected = clique_number(induced(g, VertexSet(g.n, mask)).graph).size
            self.assertEqual(clique_size_in_mask(g.adj, mask), expected)
        self.assertEqual(clique_size_in_mask(complete(3).adj, 0), 0)

    def test_degeneracy_order_is_a_permutation(self):
        g = build_gamma(4).graph
        self.assertEqual(sorted(degeneracy_order(g)), list(range(g.n)))

    def test_has_k_clique_within(self):
        gamma = build_gamma(3)
        m1 = neighborhood(gamma.graph, gamma.u(1))
        self.assertFalse(has_k_clique_within(gamma.graph, m1, 3))
        self.assertTrue(has_k_clique_within(gamma.graph, m1, 2))
        self.assertFalse(has_k_clique_within(cycle(5), VertexSet(5, 0), 1))
        self.assertTrue(has_k_clique_within(cycle(5), VertexSet(5, 0), 0))
        k5 = complete(5)
        self.assertTrue(has_k_clique_within(k5, vs(k5, [0, 2, 3, 4]), 4))
        self.assertFalse(has_k_clique_within(k5, vs(k5, [0, 2, 3, 4]), 5))

    def test_clique_number_within_maps_back(self):
        gamma = build_gamma(3)
        m1 = gamma.m_sets[0]
        result = clique_number_within(gamma.graph, m1)
        self.assertEqual(result.size, 2)
        self.assertEqual(result.witness.bits & ~m1.bits, 0)


class PathComplementFormulaTests(SimpleTestCase):
    """cl of complements of paths and of the deletions that keep it"""

    @staticmethod
    def cl(g, removed=()):
        return clique_number(delete(g, VertexSet.from_indices(g.n, removed))).size

    def test_ceiling_formula(self):
        for k in range(1, 17):
            self.assertEqual(self.cl(complement(path(k))), (k + 1) // 2)

    def test_even_path_single_deletions(self):
        for k in range(2, 9):
            g = complement(path(2 * k))
            for v in range(2 * k):
                self.assertEqual(self.cl(g, [v]), k)

    def test_even_path_pair_deletion_keeps_clique_number(self):
        # deleting v_{2k-2}, v_{2k-1} leaves P_{2k-3} and a single vertex
        for k in range(2, 9):
            g = complement(path(2 * k))
            self.assertEqual(self.cl(g, [2 * k - 3, 2 * k - 2]), k)

    def test_even_path_pair_deletion_against_odd_path(self):
        for k in range(2, 9):
            g = complement(path(2 * k))
            self.assertEqual(self.cl(g, [2 * k - 3, 2 * k - 2]) + 1, self.cl(complement(path(2 * k + 1))))

    def test_odd_path_even_position_deletions(self):
        for k in range(1, 9):
            g = complement(path(2 * k + 1))
            for i in range(1, k + 1):
                self.assertEqual(self.cl(g, [2 * i - 1]), k + 1)

    def test_clique_number_of_gamma_is_p(self):
        for p in range(3, 9):
            self.assertEqual(clique_number(build_gamma(p).graph).size, p)


class ConstructTests(SimpleTestCase):
    def test_make_instance(self):
        self.assertEqual((make_instance((3, 3)).m, make_instance((3, 3)).p), (5, 3))
        self.assertEqual((make_instance((2, 2, 3)).m, make_instance((2, 2, 3)).p), (5, 3))
        inst = make_instance((4, 3), q=5)
        self.assertEqual((inst.m, inst.p, inst.q, inst.a), (6, 4, 5, (4, 3)))

    def test_make_instance_rejects_bad_tuples(self):
        for bad in [(), (0, 3), (-1,), (2.5,), (True, 2)]:
            with self.assertRaises(InvalidParameter):
                make_instance(bad)
        with self.assertRaises(InvalidParameter):
            make_instance((3, 3), q=0)

    def test_make_instance_is_permutation_invariant(self):
        for a in [(2, 3, 4), (5, 2, 2, 3), (1, 4)]:
            ref = make_instance(a)
            for perm in itertools.permutations(a):
                inst = make_instance(perm)
                self.assertEqual((inst.m, inst.p), (ref.m, ref.p))

    def test_existence_check(self):
        inst = make_instance((3, 3))
        self.assertTrue(existence_check(inst, 4))
        self.assertFalse(existence_check(inst, 3))
        small = make_instance((2, 2))
        self.assertTrue(existence_check(small, 3))
        self.assertFalse(existence_check(small, small.m - 1))

    def test_build_gamma_3(self):
        gamma = build_gamma(3)
        self.assertEqual((gamma.graph.n, gamma.graph.edge_count), (14, 42))
        names = gamma.labels()
        self.assertEqual([names[v] for v in gamma.m_sets[0]], ['v2', 'v3', 'v6', 'v7'])
        self.assertEqual(names[:2], ['v1', 'v2'])
        self.assertEqual(names[7], 'u1')

    def test_build_gamma_4_sigma(self):
        gamma = build_gamma(4)
        self.assertEqual(gamma.graph.n, 18)
        self.assertTrue(is_automorphism(gamma.graph, gamma.sigma))

    def test_gamma_invariants(self):
        for p in range(2, 9):
            gamma = build_gamma(p)
            self.assertEqual(gamma.invariant_violations(), [])
            self.assertEqual(gamma.graph.edge_count, (2 * p + 1) * (p - 1) + (2 * p + 1) * (2 * p - 2))

    def test_build_gamma_rejects_small_p(self):
        with self.assertRaises(InvalidParameter):
            build_gamma(1)

    def test_witness_graph(self):
        self.assertEqual(witness_graph(make_instance((3, 3))), build_gamma(3).graph)
        k1 = witness_graph(make_instance((3, 3, 2)))
        self.assertEqual(k1, join(complete(1), build_gamma(3).graph))
        self.assertEqual(k1.n, 15)
        self.assertEqual(witness_graph(make_instance((4, 3))).n, 18)

    def test_witness_vertex_count_is_m_plus_3p(self):
        for a in [(3, 3), (3, 3, 2), (3, 3, 3), (4, 4, 2), (5, 3, 2, 2)]:
            inst = make_instance(a)
            self.assertEqual(witness_graph(inst).n, inst.m + 3 * inst.p)
            self.assertEqual(witness_graph(inst).n, bounds_report(inst).upper_main.value)

    def test_witness_errors(self):
        with self.assertRaises(ConstructionUndefined):
            witness_graph(make_instance((3, 2)))
        with self.assertRaises(OutOfTheoremRange):
            witness_graph(make_instance((2, 2, 2, 2)))

    def test_witness_sigma_fixes_the_block(self):
        witness = build_witness(make_instance((3, 3, 2, 2)))
        self.assertEqual(witness.block, 2)
        self.assertEqual(witness.sigma.image[:2], (0, 1))
        self.assertTrue(is_automorphism(witness.graph, witness.sigma))
        self.assertEqual(witness.labels()[:3], ['w1', 'w2', 'v1'])

    def test_bounds_report(self):
        report = bounds_report(make_instance((3, 3)))
        self.assertEqual((report.upper_main.value, report.lower.value), (14, 10))
        self.assertTrue(report.upper_main.valid and report.exists)

        report = bounds_report(make_instance((3, 3, 3)))
        self.assertEqual((report.m, report.upper_main.value), (7, 16))
        self.assertEqual(report.upper_lru_mid.value, 20)
        self.assertTrue(report.upper_lru_mid.valid)

        report = bounds_report(make_instance((2, 2)))
        self.assertFalse(report.upper_main.valid)
        self.assertFalse(report.exists)

    def test_main_bound_beats_large_m_bound(self):
        for p in range(3, 9):
            for m in range(p + 2, 4 * p):
                report = bounds_report(make_instance((p,) + (2,) * (m - p)))
                self.assertEqual((report.m, report.p), (m, p))
                if report.upper_lru_large.valid:
                    if p == 3:
                        self.assertEqual(report.upper_main.value, report.upper_lru_large.value)
                    else:
                        self.assertLess(report.upper_main.value, report.upper_lru_large.value)

    def test_theorem1_tuples(self):
        self.assertEqual(theorem1_tuples(3), [(3, 3), (3, 2, 2), (2, 2, 2, 2)])
        self.assertEqual(
            theorem1_tuples(4),
            [(4, 3), (4, 2, 2), (3, 3, 2), (3, 2, 2, 2), (2, 2, 2, 2, 2)],
        )
        for p in range(3, 7):
            for a in theorem1_tuples(p):
                inst = make_instance(a)
                self.assertEqual(inst.m, p + 2)
                self.assertLessEqual(inst.p, p)

    def test_tuple_reductions(self):
        self.assertEqual(merge_tuple((3, 2, 2), 1, 2), (3, 3))
        self.assertEqual(make_instance(merge_tuple((2, 3, 4), 0, 2)).m, make_instance((2, 3, 4)).m)
        self.assertEqual(lower_entry((3, 3, 2), 2), (3, 3, 1))
        with self.assertRaises(InvalidParameter):
            lower_entry((3, 1), 1)
        with self.assertRaises(InvalidParameter):
            merge_tuple((3, 3), 0, 0)


class FreeColoringTests(SimpleTestCase):
    def test_examples(self):
        inst = make_instance((3, 3))
        self.assertTrue(is_free_coloring(complete(4), inst, Coloring((1, 1, 2, 2))))
        for colors in itertools.product((1, 2), repeat=5):
            self.assertFalse(is_free_coloring(complete(5), inst, Coloring(colors)))
        self.assertFalse(is_free_coloring(empty(2), make_instance((1, 2)), Coloring((1, 2))))

    def test_rejects_partial_colorings(self):
        with self.assertRaises(InvalidParameter):
            is_free_coloring(complete(2), make_instance((2, 2)), Coloring((1, None)))
        with self.assertRaises(InvalidParameter):
            is_free_coloring(complete(2), make_instance((2, 2)), Coloring((1, 3)))


class ArrowingTests(SimpleTestCase):
    def test_complete_graphs(self):
        inst = make_instance((3, 3))
        self.assertEqual(arrows(complete(5), inst).verdict, ARROWS)
        result = arrows(complete(4), inst)
        self.assertEqual(result.verdict, NOT_ARROWS)
        self.assertTrue(is_free_coloring(complete(4), inst, result.witness))
        self.assertEqual(sorted(result.witness.colors), [1, 1, 2, 2])

    def test_gamma_3_arrows_3_3(self):
        gamma = build_gamma(3)
        result = arrows(gamma.graph, make_instance((3, 3)))
        self.assertTrue(result.arrows)
        self.assertIsNone(result.witness)
        self.assertTrue(in_H(gamma.graph, make_instance((3, 3)), 4))

    def test_gamma_3_arrows_2_2_3(self):
        gamma = build_gamma(3)
        cfg = SearchConfig(symmetry_generators=(gamma.sigma,))
        self.assertTrue(arrows(gamma.graph, make_instance((2, 2, 3)), cfg).arrows)

    def test_odd_cycle(self):
        self.assertTrue(arrows(cycle(5), make_instance((2, 2))).arrows)
        self.assertTrue(chromatic_exceeds(cycle(5), 2))
        self.assertFalse(chromatic_exceeds(cycle(6), 2))

    def test_chromatic_number_of_gamma_3(self):
        self.assertTrue(chromatic_exceeds(build_gamma(3).graph, 4))

    def test_in_H(self):
        self.assertFalse(in_H(complete(5), make_instance((3, 3)), 4))
        self.assertFalse(in_H(complete(4), make_instance((3, 3)), 5))
        with self.assertRaises(InvalidParameter):
            in_H(complete(4), make_instance((3, 3)), 0)

    def test_unit_thresholds_force_empty_classes(self):
        result = arrows(empty(3), make_instance((1, 2)))
        self.assertEqual(result.witness.colors, (2, 2, 2))
        self.assertTrue(arrows(empty(1), make_instance((1,))).arrows)
        self.assertFalse(arrows(empty(0), make_instance((1,))).arrows)

    def test_config_independence(self):
        gamma = build_gamma(3)
        battery = [
            (gamma.graph, (3, 3)), (gamma.graph, (4, 2)), (gamma.graph, (2, 2, 2)),
            (complete(4), (3, 3)), (cycle(7), (2, 2)), (complement(cycle(7)), (3, 3)),
            (join(complete(1), cycle(5)), (2, 2, 2)), (join(complete(1), cycle(5)), (3, 2)),
        ]
        rng = random.Random(5)
        for g, a in battery:
            inst = make_instance(a)
            reference = arrows(g, inst).verdict
            shuffled = list(range(g.n))
            rng.shuffle(shuffled)
            for order in ('degree', 'index', 'reverse', tuple(shuffled)):
                self.assertEqual(arrows(g, inst, SearchConfig(vertex_order=order)).verdict, reference)
        for a in [(3, 3), (2, 2, 3), (4, 2), (2, 2, 2)]:
            inst = make_instance(a)
            plain = arrows(gamma.graph, inst).verdict
            for order in ('degree', 'index', 'reverse'):
                cfg = SearchConfig(vertex_order=order, symmetry_generators=(gamma.sigma,))
                self.assertEqual(arrows(gamma.graph, inst, cfg).verdict, plain)

    def test_permutation_invariance(self):
        rng = random.Random(17)
        for _ in range(25):
            g = random_graph(rng, rng.randint(3, 9), density=0.6)
            a = tuple(rng.randint(1, 4) for _ in range(rng.randint(1, 3)))
            verdicts = {arrows(g, make_instance(perm)).verdict for perm in itertools.permutations(a)}
            self.assertEqual(len(verdicts), 1)

    def test_exchanging_equal_thresholds_keeps_witness_free(self):
        g = complement(cycle(7))
        inst = make_instance((3, 3, 2))
        result = arrows(g, inst)
        self.assertEqual(result.verdict, NOT_ARROWS)
        self.assertTrue(is_free_coloring(g, inst, result.witness.swap(1, 2)))

    def test_induced_subgraph_monotonicity(self):
        rng = random.Random(23)
        for _ in range(20):
            g = random_graph(rng, rng.randint(4, 9), density=0.7)
            s = VertexSet(g.n, rng.getrandbits(g.n))
            inst = make_instance((rng.randint(2, 3), rng.randint(2, 3)))
            if arrows(induced(g, s).graph, inst).arrows:
                self.assertTrue(arrows(g, inst).arrows)

    def test_arrowing_needs_large_cliques(self):
        rng = random.Random(29)
        for _ in range(20):
            g = random_graph(rng, rng.randint(3, 9), density=0.6)
            inst = make_instance(tuple(rng.randint(2, 4) for _ in range(2)))
            if arrows(g, inst).arrows:
                self.assertGreaterEqual(clique_number(g).size, inst.p)

    def test_budget_exceeded(self):
        with self.assertRaises(SearchBudgetExceeded) as ctx:
            arrows(build_gamma(3).graph, make_instance((3, 3)), SearchConfig(node_budget=10))
        self.assertEqual(ctx.exception.stats.nodes, 11)

    def test_rejects_bad_generator(self):
        with self.assertRaises(InvalidParameter):
            arrows(path(3), make_instance((2, 2)), SearchConfig(symmetry_generators=(VertexPermutation((1, 0, 2)),)))

    def test_deterministic_stats_are_reproducible(self):
        gamma = build_gamma(3)
        inst = make_instance((3, 3))
        first = arrows(gamma.graph, inst).stats
        second = arrows(gamma.graph, inst).stats
        self.assertEqual(first.as_dict(include_time=False), second.as_dict(include_time=False))

    @tag('slow')
    def test_parallel_search_agrees(self):
        gamma = build_gamma(3)
        cfg = SearchConfig(deterministic=False, worker_width=2)
        self.assertTrue(arrows(gamma.graph, make_instance((3, 3)), cfg).arrows)
        result = arrows(complement(cycle(7)), make_instance((3, 3)), cfg)
        self.assertEqual(result.verdict, NOT_ARROWS)
        self.assertGreater(result.stats.subtrees, 1)


class ExhaustiveOracleTests(SimpleTestCase):
    def test_examples(self):
        self.assertTrue(arrows_exhaustive(complete(3), make_instance((2, 2))).arrows)
        result = arrows_exhaustive(path(3), make_instance((2, 2)))
        self.assertEqual(result.verdict, NOT_ARROWS)
        self.assertEqual(result.witness.colors, (1, 2, 1))

    def test_guard(self):
        with self.assertRaises(InstanceTooLarge):
            arrows_exhaustive(empty(30), make_instance((2, 2)))

    @tag('slow')
    def test_gamma_3_against_2_2_3(self):
        self.assertTrue(arrows_exhaustive(build_gamma(3).graph, make_instance((2, 2, 3))).arrows)

    @tag('slow')
    def test_search_agrees_with_enumeration(self):
        rng = random.Random(2024)
        for _ in range(200):
            g = random_graph(rng, rng.randint(1, 10), density=rng.choice([0.3, 0.5, 0.7, 0.9]))
            a = tuple(rng.randint(1, 4) for _ in range(rng.randint(1, 3)))
            inst = make_instance(a)
            expected = arrows_exhaustive(g, inst)
            got = arrows(g, inst)
            self.assertEqual(got.verdict, expected.verdict, msg=f'{g.edges()} {a}')
            if got.witness is not None:
                self.assertTrue(is_free_coloring(g, inst, got.witness))


class SymmetryBreakingTests(SimpleTestCase):
    """Search with automorphism generators against plain enumeration"""

    def random_cases(self, seed, count):
        rng = random.Random(seed)
        for _ in range(count):
            n = rng.randint(4, 9)
            jumps = rng.sample(range(1, n // 2 + 1), rng.randint(1, n // 2))
            a = tuple(rng.randint(2, 4) for _ in range(rng.randint(2, 3)))
            gens = rng.choice([dihedral_generators(n), dihedral_generators(n)[:1], dihedral_generators(n)[1:]])
            yield circulant(n, jumps), make_instance(a), gens

    def check(self, g, inst, cfg, expected):
        result = arrows(g, inst, cfg)
        self.assertEqual(result.verdict, expected, msg=f'{g.edges()} {inst.a}')
        if result.witness is not None:
            self.assertTrue(is_free_coloring(g, inst, result.witness))

    def test_generators_are_automorphisms(self):
        for n in range(3, 10):
            g = circulant(n, [1, 2])
            for gen in dihedral_generators(n):
                self.assertTrue(is_automorphism(g, gen))

    def test_sequential_search_with_generators(self):
        for g, inst, gens in self.random_cases(seed=41, count=150):
            expected = arrows_exhaustive(g, inst).verdict
            for order in ('degree', 'index', 'reverse'):
                self.check(g, inst, SearchConfig(vertex_order=order, symmetry_generators=gens), expected)

    @tag('slow')
    def test_parallel_search_with_generators(self):
        for g, inst, gens in self.random_cases(seed=43, count=40):
            cfg = SearchConfig(symmetry_generators=gens, deterministic=False, worker_width=2)
            self.check(g, inst, cfg, arrows_exhaustive(g, inst).verdict)

    @tag('slow')
    def test_early_stop_is_silent(self):
        cfg = SearchConfig(deterministic=False, worker_width=2)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter('always')
            result = arrows(complement(cycle(7)), make_instance((3, 3)), cfg)
        self.assertEqual(result.verdict, NOT_ARROWS)
        self.assertEqual([w for w in caught if 'cancelled' in str(w.message)], [])


@tag('slow')
class GammaSweepTests(SimpleTestCase):
    """Gamma_p -> (a) for every tuple with m = p + 2, and the K_1 step"""

    def test_gamma_3(self):
        gamma = build_gamma(3)
        cfg = SearchConfig(symmetry_generators=(gamma.sigma,))
        for a in theorem1_tuples(3):
            self.assertTrue(arrows(gamma.graph, make_instance(a), cfg).arrows, msg=a)

    def test_gamma_4(self):
        gamma = build_gamma(4)
        cfg = SearchConfig(symmetry_generators=(gamma.sigma,))
        for a in theorem1_tuples(4):
            self.assertTrue(arrows(gamma.graph, make_instance(a), cfg).arrows, msg=a)

    def test_induction_step(self):
        inst = make_instance((3, 3, 2))
        witness = build_witness(inst)
        self.assertEqual(witness.graph.n, 15)
        self.assertEqual(clique_number(witness.graph).size, inst.m - 2)
        cfg = SearchConfig(symmetry_generators=(witness.sigma,))
        self.assertTrue(arrows(witness.graph, inst, cfg).arrows)

    def test_join_clique_arithmetic(self):
        for a in [(3, 3), (2, 2, 3), (3, 3, 2), (4, 3)]:
            inst = make_instance(a)
            self.assertEqual(clique_number(witness_graph(inst)).size, inst.m - 2)
