import contextlib
import io
import json
import random
import tempfile
from pathlib import Path

import networkx as nx
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase

from folkman_module.construct import build_gamma
from folkman_module.exceptions import Graph6Error, InvalidParameter
from folkman_module.graphs import Graph, complete, cycle, empty

from .cli import EXIT_GUARD, EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE, cli_main
from .formats import export_dimacs_col, from_networkx, graph6_decode, graph6_encode, to_networkx
from .forms import CertificateForm
from .models import Certificate


def random_graph(rng, n, density=0.5):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density]
    return Graph.from_edges(n, edges)


def run(*args):
    """call_command with captured output; returns (stdout, stderr)"""
    out, err = io.StringIO(), io.StringIO()
    call_command(*args, stdout=out, stderr=err)
    return out.getvalue(), err.getvalue()


def run_failing(testcase, *args):
    """Expects CommandError; returns (returncode, stdout)"""
    out, err = io.StringIO(), io.StringIO()
    with testcase.assertRaises(CommandError) as ctx:
        call_command(*args, stdout=out, stderr=err)
    return ctx.exception.returncode, out.getvalue()


class Graph6EncodeTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(graph6_encode(complete(3)), 'Bw')
        self.assertEqual(graph6_encode(complete(1)), '@')
        self.assertEqual(graph6_encode(empty(0)), '?')
        self.assertEqual(graph6_encode(complete(4)), 'C~')

    def test_matches_networkx(self):
        rng = random.Random(5)
        graphs = [build_gamma(3).graph, cycle(63), empty(70)]
        graphs += [random_graph(rng, rng.randint(1, 100)) for _ in range(30)]
        for g in graphs:
            expected = nx.to_graph6_bytes(to_networkx(g), header=False).decode('ascii').strip()
            self.assertEqual(graph6_encode(g), expected)

    def test_networkx_reads_our_output(self):
        g = build_gamma(4).graph
        parsed = nx.from_graph6_bytes(graph6_encode(g).encode('ascii'))
        self.assertEqual(sorted(tuple(sorted(e)) for e in parsed.edges()), g.edges())


class NetworkxConversionTests(SimpleTestCase):
    def test_to_networkx_keeps_isolated_vertices(self):
        G = to_networkx(empty(5))
        self.assertEqual((G.number_of_nodes(), G.number_of_edges()), (5, 0))

    def test_from_networkx_relabels_in_node_order(self):
        G = nx.Graph()
        G.add_nodes_from(['a', 'b', 'c', 'd'])
        G.add_edges_from([('a', 'b'), ('b', 'c'), ('c', 'd'), ('d', 'a')])
        self.assertEqual(from_networkx(G), cycle(4))

    def test_gamma_survives_conversion(self):
        g = build_gamma(3).graph
        self.assertEqual(from_networkx(to_networkx(g)), g)


class Graph6DecodeTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(graph6_decode('Bw'), complete(3))
        self.assertEqual(graph6_decode('@'), complete(1))
        self.assertEqual(graph6_decode('?'), empty(0))

    def test_round_trip_small(self):
        rng = random.Random(2024)
        for _ in range(500):
            g = random_graph(rng, rng.randint(0, 62), density=rng.random())
            self.assertEqual(graph6_decode(graph6_encode(g)), g)

    def test_round_trip_long_header(self):
        rng = random.Random(99)
        for n in (63, 64, 130, 512):
            g = random_graph(rng, n, density=0.1)
            text = graph6_encode(g)
            self.assertTrue(text.startswith('~'))
            self.assertEqual(graph6_decode(text), g)

    def test_header_and_whitespace(self):
        self.assertEqual(graph6_decode('>>graph6<<Bw'), complete(3))
        self.assertEqual(graph6_decode('  Bw\n'), complete(3))

    def test_bytes_input(self):
        self.assertEqual(graph6_decode(b'Bw\n'), complete(3))
        with self.assertRaises(Graph6Error) as ctx:
            graph6_decode(b'B\xffw')
        self.assertEqual(ctx.exception.offset, 1)

    def test_empty_string(self):
        with self.assertRaises(Graph6Error) as ctx:
            graph6_decode('')
        self.assertEqual(ctx.exception.offset, 0)

    def test_nonzero_padding(self):
        with self.assertRaises(Graph6Error) as ctx:
            graph6_decode('Bx')
        self.assertEqual(ctx.exception.offset, 1)
        self.assertIn('padding', str(ctx.exception))

    def test_character_out_of_range(self):
        with self.assertRaises(Graph6Error) as ctx:
            graph6_decode('B\x7f')
        self.assertEqual(ctx.exception.offset, 1)

    def test_length_mismatch(self):
        with self.assertRaises(Graph6Error) as ctx:
            graph6_decode('B')
        self.assertEqual(ctx.exception.offset, 1)
        with self.assertRaises(Graph6Error) as ctx:
            graph6_decode('Bww')
        self.assertEqual(ctx.exception.offset, 2)

    def test_truncated_long_header(self):
        with self.assertRaises(Graph6Error):
            graph6_decode('~')
        with self.assertRaises(Graph6Error):
            graph6_decode('~?')

    def test_errors_are_invalid_parameters(self):
        with self.assertRaises(InvalidParameter):
            graph6_decode('')


class DimacsTests(SimpleTestCase):
    def test_triangle(self):
        self.assertEqual(export_dimacs_col(complete(3)), 'p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n')

    def test_edgeless(self):
        self.assertEqual(export_dimacs_col(empty(2)), 'p edge 2 0\n')

    def test_gamma_3_header(self):
        lines = export_dimacs_col(build_gamma(3).graph).splitlines()
        self.assertEqual(lines[0], 'p edge 14 42')
        self.assertEqual(len(lines), 43)


class ConstructCommandTests(SimpleTestCase):
    def test_gamma(self):
        out, _ = run('construct', '--gamma', '3')
        data = json.loads(out)
        self.assertEqual((data['n'], data['edges']), (14, 42))
        self.assertEqual(data['labels'][0], 'v1')
        self.assertEqual(data['labels'][7], 'u1')
        self.assertEqual(graph6_decode(data['graph6']), build_gamma(3).graph)

    def test_witness(self):
        data = json.loads(run('construct', '--witness', '3,3,2')[0])
        self.assertEqual((data['n'], data['labels'][0], data['labels'][1]), (15, 'w1', 'v1'))
        self.assertEqual(data['instance']['m'], 6)

    def test_undefined_witness(self):
        code, _ = run_failing(self, 'construct', '--witness', '3,2')
        self.assertEqual(code, EXIT_USAGE)


class CliqueCommandTests(SimpleTestCase):
    def test_triangle(self):
        data = json.loads(run('clique', 'Bw')[0])
        self.assertEqual(data['verdict'], 'clique-value')
        self.assertEqual(data['witness'], {'kind': 'clique', 'size': 3, 'vertices': [0, 1, 2]})

    def test_graph_from_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            target = Path(tmp) / 'gamma.g6'
            target.write_text('\n' + graph6_encode(build_gamma(3).graph) + '\n')
            data = json.loads(run('clique', str(target))[0])
        self.assertEqual(data['witness']['size'], 3)

    def test_bad_graph6(self):
        code, _ = run_failing(self, 'clique', 'B\x7f')
        self.assertEqual(code, EXIT_USAGE)

    def test_non_ascii_file_is_a_parse_error(self):
        with tempfile.TemporaryDirectory() as tmp:
            target = Path(tmp) / 'bad.g6'
            target.write_bytes(b'\xffBw\n')
            code, _ = run_failing(self, 'clique', str(target))
        self.assertEqual(code, EXIT_USAGE)

    def test_blank_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            target = Path(tmp) / 'blank.g6'
            target.write_bytes(b'\n  \n')
            code, _ = run_failing(self, 'clique', str(target))
        self.assertEqual(code, EXIT_USAGE)


class ArrowsCommandTests(SimpleTestCase):
    def test_gamma_3_arrows_3_3(self):
        out, _ = run('arrows', '--gamma', '3', '--tuple', '3,3', '--deterministic', '--sigma')
        data = json.loads(out)
        self.assertEqual(data['verdict'], 'arrows')
        self.assertIsNone(data['witness'])
        self.assertEqual(data['metadata']['clique_number'], 3)
        self.assertTrue(data['metadata']['in_H'])
        self.assertEqual(data['metadata']['symmetry'], 'sigma')
        self.assertNotIn('wall_time', data['stats'])
        self.assertEqual(len(data['labels']), 14)

    def test_deterministic_output_is_byte_identical(self):
        args = ('arrows', '--gamma', '3', '--tuple', '2,2,3', '--deterministic', '--sigma')
        self.assertEqual(run(*args)[0], run(*args)[0])

    def test_complete_graph_does_not_arrow(self):
        code, out = run_failing(self, 'arrows', 'C~', '--tuple', '3,3', '--deterministic')
        self.assertEqual(code, EXIT_NEGATIVE)
        data = json.loads(out)
        self.assertEqual(data['verdict'], 'not-arrows')
        self.assertEqual(data['witness'], {'kind': 'coloring', 'colors': [1, 1, 2, 2]})
        self.assertFalse(data['metadata']['in_H'])

    def test_wall_time_reported_when_not_deterministic(self):
        data = json.loads(run('arrows', 'Bw', '--tuple', '2,2')[0])
        self.assertIn('wall_time', data['stats'])

    def test_from_witness(self):
        data = json.loads(run('arrows', '--from-witness', '--tuple', '3,3', '--sigma', '--deterministic')[0])
        self.assertEqual(data['verdict'], 'arrows')
        self.assertEqual(data['instance'], {'a': [3, 3], 'm': 5, 'p': 3, 'q': None})

    def test_sigma_needs_constructed_graph(self):
        code, _ = run_failing(self, 'arrows', 'C~', '--tuple', '3,3', '--sigma')
        self.assertEqual(code, EXIT_USAGE)

    def test_exactly_one_source(self):
        self.assertEqual(run_failing(self, 'arrows', '--tuple', '3,3')[0], EXIT_USAGE)
        self.assertEqual(run_failing(self, 'arrows', 'C~', '--gamma', '3', '--tuple', '3,3')[0], EXIT_USAGE)

    def test_budget_exceeded(self):
        code, _ = run_failing(self, 'arrows', '--gamma', '3', '--tuple', '3,3', '--budget', '5', '--deterministic')
        self.assertEqual(code, EXIT_GUARD)


class BoundsAndExportCommandTests(SimpleTestCase):
    def test_bounds(self):
        data = json.loads(run('bounds', '--tuple', '3,3,2')[0])
        self.assertEqual(data['instance']['m'], 6)
        self.assertEqual(data['bounds']['upper_main']['value'], 15)
        self.assertTrue(data['bounds']['upper_main']['valid'])
        self.assertEqual(data['bounds']['lower']['value'], 11)

    def test_export_dimacs(self):
        out, _ = run('export', '--gamma', '3', '--format', 'dimacs')
        self.assertEqual(out.splitlines()[0], 'p edge 14 42')

    def test_export_graph6(self):
        self.assertEqual(run('export', 'Bw')[0], 'Bw\n')

    def test_export_needs_one_source(self):
        self.assertEqual(run_failing(self, 'export')[0], EXIT_USAGE)


class CliMainTests(SimpleTestCase):
    def call(self, argv):
        out, err = io.StringIO(), io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = cli_main(argv)
        return code, out.getvalue(), err.getvalue()

    def test_unknown_subcommand(self):
        self.assertEqual(self.call(['migrate'])[0], EXIT_USAGE)
        self.assertEqual(self.call([])[0], EXIT_USAGE)

    def test_argument_error(self):
        self.assertEqual(self.call(['bounds', '--tuple', 'x'])[0], EXIT_USAGE)

    def test_exit_codes(self):
        code, out, _ = self.call(['bounds', '--tuple', '3,3'])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)['instance']['p'], 3)
        code, out, err = self.call(['arrows', 'C~', '--tuple', '3,3', '--deterministic'])
        self.assertEqual(code, EXIT_NEGATIVE)
        self.assertEqual(json.loads(out)['verdict'], 'not-arrows')
        self.assertIn('free coloring', err)


class CertificateFormTests(SimpleTestCase):
    def not_arrows_payload(self):
        _, out = run_failing(self, 'arrows', 'C~', '--tuple', '3,3', '--deterministic')
        return json.loads(out)

    def test_valid_free_coloring(self):
        form = CertificateForm(data=self.not_arrows_payload())
        self.assertTrue(form.is_valid(), form.errors)

    def test_coloring_that_is_not_free(self):
        payload = self.not_arrows_payload()
        payload['witness']['colors'] = [1, 1, 1, 2]
        form = CertificateForm(data=payload)
        self.assertFalse(form.is_valid())
        self.assertIn('witness', form.errors)

    def test_unknown_field(self):
        payload = self.not_arrows_payload()
        payload['comment'] = 'hand edited'
        self.assertFalse(CertificateForm(data=payload).is_valid())

    def test_unknown_nested_fields(self):
        payload = self.not_arrows_payload()
        payload['instance']['r'] = 2
        form = CertificateForm(data=payload)
        self.assertFalse(form.is_valid())
        self.assertIn('instance', form.errors)

        payload = self.not_arrows_payload()
        payload['witness']['note'] = 'hand edited'
        form = CertificateForm(data=payload)
        self.assertFalse(form.is_valid())
        self.assertIn('witness', form.errors)

        clique = json.loads(run('clique', 'Bw')[0])
        clique['witness']['extra'] = []
        self.assertFalse(CertificateForm(data=clique).is_valid())

    def test_wrong_schema_version(self):
        payload = self.not_arrows_payload()
        payload['schema_version'] = '0.9'
        form = CertificateForm(data=payload)
        self.assertFalse(form.is_valid())
        self.assertIn('schema_version', form.errors)

    def test_instance_must_match_tuple(self):
        payload = self.not_arrows_payload()
        payload['instance']['m'] = 7
        self.assertFalse(CertificateForm(data=payload).is_valid())

    def test_clique_value_recomputed(self):
        payload = json.loads(run('clique', graph6_encode(build_gamma(3).graph))[0])
        self.assertTrue(CertificateForm(data=payload).is_valid())
        payload['witness']['size'] = 4
        self.assertFalse(CertificateForm(data=payload).is_valid())

    def test_arrows_verdict_rerun(self):
        payload = json.loads(run('arrows', '--gamma', '3', '--tuple', '3,3', '--deterministic', '--sigma')[0])
        self.assertTrue(CertificateForm(data=payload, rerun=True).is_valid())
        payload['graph_g6'] = 'C~'
        payload['labels'] = None
        self.assertFalse(CertificateForm(data=payload, rerun=True).is_valid())

    def test_check_report(self):
        payload = json.loads(run('verify', '--suite', 'gamma', '--p', '3')[0])
        self.assertTrue(CertificateForm(data=payload).is_valid())
        payload['reports'][0]['verdict'] = 'fail'
        self.assertFalse(CertificateForm(data=payload).is_valid())


class ReplayCommandTests(SimpleTestCase):
    def test_replay_accepts_and_rejects(self):
        _, out = run_failing(self, 'arrows', 'C~', '--tuple', '3,3', '--deterministic')
        with tempfile.TemporaryDirectory() as tmp:
            good = Path(tmp) / 'good.json'
            good.write_text(out)
            data = json.loads(run('verify', '--replay', str(good))[0])
            self.assertEqual((data['replay'], data['verdict']), ('accepted', 'not-arrows'))

            payload = json.loads(out)
            payload['witness']['colors'] = [1, 1, 1, 1]
            bad = Path(tmp) / 'bad.json'
            bad.write_text(json.dumps(payload))
            self.assertEqual(run_failing(self, 'verify', '--replay', str(bad))[0], EXIT_NEGATIVE)

    def test_non_object_is_rejected(self):
        with tempfile.TemporaryDirectory() as tmp:
            target = Path(tmp) / 'list.json'
            target.write_text('[1, 2, 3]')
            self.assertEqual(run_failing(self, 'verify', '--replay', str(target))[0], EXIT_NEGATIVE)

    def test_missing_file(self):
        self.assertEqual(run_failing(self, 'verify', '--replay', '/nonexistent/cert.json')[0], EXIT_USAGE)


class CertificateModelTests(TestCase):
    def test_save_clique_certificate(self):
        _, err = run('clique', 'Bw', '--save')
        self.assertIn('Saved certificate', err)
        certificate = Certificate.objects.get()
        self.assertEqual(certificate.verdict, 'clique-value')
        self.assertEqual(certificate.vertex_count, 3)
        self.assertEqual(certificate.graph_g6, 'Bw')
        self.assertIn('Clique value', str(certificate))
        self.assertFalse(certificate.is_negative())
        self.assertEqual(json.loads(certificate.to_json())['witness']['size'], 3)

    def test_save_not_arrows_certificate(self):
        run_failing(self, 'arrows', 'C~', '--tuple', '3,3', '--deterministic', '--save')
        certificate = Certificate.objects.get()
        self.assertEqual(certificate.tuple_text, '3,3')
        self.assertTrue(certificate.is_negative())

    def test_save_reports_negative_results(self):
        err = io.StringIO()
        with self.assertRaises(CommandError):
            call_command('arrows', 'C~', '--tuple', '3,3', '--deterministic', '--save',
                         stdout=io.StringIO(), stderr=err)
        self.assertIn('Saved negative result', err.getvalue())

    def test_from_payload_of_check_report(self):
        payload = json.loads(run('verify', '--suite', 'gamma', '--p', '2')[0])
        certificate = Certificate.from_payload(payload)
        self.assertEqual((certificate.suite, certificate.graph_g6), ('gamma', ''))
        self.assertIsNone(certificate.vertex_count)
