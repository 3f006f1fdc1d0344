import io
import json
import tempfile
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase, tag
from openpyxl import load_workbook

from certificates.models import Certificate
from folkman_module.construct import make_instance
from folkman_module.exceptions import (
    ConstructionUndefined,
    InstanceTooLarge,
    InvalidParameter,
    OutOfTheoremRange,
)

from .oracle import (
    FAIL,
    PASS,
    CheckReport,
    replay_counterexample,
    run_suite,
    verify_corollary1,
    verify_gamma,
    verify_lemma1,
    verify_lemmas_2_3,
    verify_main,
    verify_path_complement,
    verify_prop1,
    verify_prop1_sweep,
    verify_reductions,
    verify_theorem1,
)
from .reports import build_workbook, write_workbook

K4_EDGES = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]


def failed_report(counterexample):
    return CheckReport('manual', {}, FAIL, 1, counterexample)


class Prop1Tests(SimpleTestCase):
    def test_examples(self):
        for a in [(3, 5), (2, 4), (3, 2, 2)]:
            self.assertTrue(verify_prop1(a).passed, a)

    def test_sweep(self):
        report = verify_prop1_sweep(n_max=12, r_max=4)
        self.assertEqual(report.verdict, PASS)
        # ordered tuples with r <= 4 parts and sum <= 12: C(12,1)+...+C(12,4)
        self.assertEqual(report.cases_examined, 793)

    def test_empty_tuple(self):
        with self.assertRaises(InvalidParameter):
            verify_prop1(())


class PathComplementCheckTests(SimpleTestCase):
    def test_up_to_16(self):
        report = verify_path_complement(16)
        self.assertTrue(report.passed)
        self.assertIsNone(report.counterexample)

    def test_pair_deletion_discrepancies(self):
        report = verify_path_complement(16)
        self.assertEqual(len(report.discrepancies), 7)
        self.assertEqual(report.discrepancies[0], {'k': 4, 'removed': [2, 3], 'left': 2, 'right_odd_path': 3})
        for entry in report.discrepancies:
            self.assertEqual(entry['left'], entry['k'] // 2)
            self.assertEqual(entry['right_odd_path'], entry['k'] // 2 + 1)
        self.assertTrue(report.notes)

    def test_small_range_has_no_pair_case(self):
        report = verify_path_complement(3)
        self.assertTrue(report.passed)
        self.assertEqual(report.discrepancies, ())

    def test_range_guard(self):
        with self.assertRaises(InvalidParameter):
            verify_path_complement(1)


class CycleSubsetCheckTests(SimpleTestCase):
    def test_lemma1(self):
        for p in (2, 3, 4):
            self.assertTrue(verify_lemma1(p).passed, p)
        self.assertEqual(verify_lemma1(3).cases_examined, 127)

    def test_lemmas_2_3(self):
        for p in (2, 3, 4):
            report = verify_lemmas_2_3(p)
            self.assertTrue(report.passed, p)
            self.assertGreater(report.cases_examined, 0)

    @tag('slow')
    def test_p5(self):
        self.assertTrue(verify_lemma1(5).passed)
        self.assertTrue(verify_lemmas_2_3(5).passed)

    def test_guards(self):
        with self.assertRaises(InstanceTooLarge):
            verify_lemma1(7)
        with self.assertRaises(InvalidParameter):
            verify_lemma1(1)
        with self.assertRaises(InstanceTooLarge):
            verify_lemmas_2_3(7)


class GammaCheckTests(SimpleTestCase):
    def test_gamma_structure(self):
        for p in range(2, 9):
            self.assertTrue(verify_gamma(p).passed, p)

    def test_corollary1(self):
        for p in range(3, 9):
            report = verify_corollary1(p)
            self.assertTrue(report.passed, p)
            self.assertEqual(report.cases_examined, 3)
        with self.assertRaises(OutOfTheoremRange):
            verify_corollary1(2)

    def test_theorem1_p3(self):
        report = verify_theorem1(3)
        self.assertTrue(report.passed)
        self.assertEqual(report.cases_examined, 3)

    @tag('slow')
    def test_theorem1_p4(self):
        report = verify_theorem1(4)
        self.assertTrue(report.passed)
        self.assertEqual(report.cases_examined, 5)

    def test_theorem1_guards(self):
        with self.assertRaises(OutOfTheoremRange):
            verify_theorem1(2)
        with self.assertRaises(InstanceTooLarge):
            verify_theorem1(6)

    @tag('slow')
    def test_reductions_p3(self):
        self.assertTrue(verify_reductions(3).passed)


class MainCheckTests(SimpleTestCase):
    def test_anchors(self):
        for a in [(3, 3), (2, 2, 3)]:
            report = verify_main(make_instance(a))
            self.assertTrue(report.passed, a)
            self.assertEqual(report.cases_examined, 4)

    @tag('slow')
    def test_induction_step(self):
        self.assertTrue(verify_main(make_instance((3, 3, 2))).passed)

    def test_hypotheses(self):
        with self.assertRaises(ConstructionUndefined):
            verify_main(make_instance((3, 2)))
        with self.assertRaises(OutOfTheoremRange):
            verify_main(make_instance((2, 2, 2, 2)))


class ReplayTests(SimpleTestCase):
    def test_tuple(self):
        self.assertFalse(replay_counterexample(failed_report({'kind': 'tuple', 'tuple': [3, 5]})))

    def test_literal_pair_deletion_claim_fails_again(self):
        ce = {'kind': 'path-deletion', 'k': 4, 'removed': [2, 3], 'expected': 3}
        self.assertTrue(replay_counterexample(failed_report(ce)))
        ce['expected'] = 2
        self.assertFalse(replay_counterexample(failed_report(ce)))

    def test_subsets(self):
        self.assertFalse(replay_counterexample(failed_report({'kind': 'subset', 'p': 3, 'vertices': [2, 3, 6, 7]})))
        ce = {'kind': 'subset-deletion', 'p': 3, 'vertices': [1, 2, 3, 4], 'removed': [1], 'expected': 2}
        self.assertFalse(replay_counterexample(failed_report(ce)))
        ce['expected'] = 3
        self.assertTrue(replay_counterexample(failed_report(ce)))

    def test_colorings(self):
        free = {'kind': 'coloring', 'graph': {'n': 4, 'edges': K4_EDGES}, 'tuple': [3, 3], 'colors': [1, 1, 2, 2]}
        self.assertTrue(replay_counterexample(failed_report(free)))
        bogus = {'kind': 'coloring', 'graph': {'gamma': 3}, 'tuple': [3, 3], 'colors': [1] * 14}
        self.assertFalse(replay_counterexample(failed_report(bogus)))

    def test_values(self):
        ce = {'kind': 'value', 'graph': {'gamma': 3}, 'quantity': 'clique_number', 'expected': 3, 'found': 3}
        self.assertFalse(replay_counterexample(failed_report(ce)))
        ce['expected'] = 4
        self.assertTrue(replay_counterexample(failed_report(ce)))
        order = {'kind': 'value', 'graph': {'witness': [3, 3, 2]}, 'quantity': 'order', 'expected': 15}
        self.assertFalse(replay_counterexample(failed_report(order)))

    def test_accepts_dicts(self):
        ce = {'kind': 'path-deletion', 'k': 4, 'removed': [2, 3], 'expected': 3}
        self.assertTrue(replay_counterexample(failed_report(ce).as_dict()))

    def test_needs_counterexample(self):
        with self.assertRaises(InvalidParameter):
            replay_counterexample(verify_gamma(3))


class SuiteTests(SimpleTestCase):
    def test_defaults(self):
        self.assertEqual([r.params['p'] for r in run_suite('gamma')], list(range(2, 9)))
        self.assertEqual(len(run_suite('prop1', a=(3, 2, 2))), 1)
        self.assertEqual(run_suite('paths', k_max=8)[0].params, {'k_max': 8})

    def test_unknown_suite(self):
        with self.assertRaises(InvalidParameter):
            run_suite('everything')

    def test_report_dict_round_trip(self):
        report = verify_path_complement(8)
        self.assertEqual(CheckReport.from_dict(report.as_dict()), report)


class WorkbookTests(SimpleTestCase):
    def test_rows_and_header(self):
        reports = [verify_gamma(3), failed_report({'kind': 'tuple', 'tuple': [1]})]
        ws = build_workbook(reports, 'gamma').active
        self.assertEqual(ws.max_row, 3)
        self.assertEqual(ws['A1'].value, 'Check')
        self.assertTrue(ws['A1'].font.bold)
        self.assertEqual(ws['C3'].value, FAIL)

    def test_write(self):
        with tempfile.TemporaryDirectory() as tmp:
            target = Path(tmp) / 'paths.xlsx'
            write_workbook(run_suite('paths', k_max=8), target, 'paths')
            ws = load_workbook(target).active
            self.assertEqual(ws['A2'].value, 'paths')
            self.assertEqual(ws['F2'].value, 3)


class VerifyCommandTests(TestCase):
    def run_verify(self, *args):
        out, err = io.StringIO(), io.StringIO()
        call_command('verify', *args, stdout=out, stderr=err)
        return json.loads(out.getvalue()), err.getvalue()

    def test_gamma_suite(self):
        data, err = self.run_verify('--suite', 'gamma', '--p', '3')
        self.assertEqual(data['verdict'], 'check-report')
        self.assertTrue(data['metadata']['all_passed'])
        self.assertEqual(data['reports'][0]['check_id'], 'gamma')
        self.assertIn('[pass]', err)

    def test_paths_suite_reports_discrepancies(self):
        data, err = self.run_verify('--suite', 'paths', '--k-max', '8')
        self.assertEqual(len(data['reports'][0]['discrepancies']), 3)
        self.assertIn('discrepancy', err)

    def test_main_suite_with_tuple(self):
        data, _ = self.run_verify('--suite', 'main', '--tuple', '3,3')
        self.assertEqual(data['instance']['m'], 5)
        self.assertEqual(data['reports'][0]['verdict'], PASS)

    def test_xlsx_and_save(self):
        with tempfile.TemporaryDirectory() as tmp:
            target = Path(tmp) / 'report.xlsx'
            self.run_verify('--suite', 'corollary1', '--p', '4', '--xlsx', str(target), '--save')
            self.assertTrue(target.exists())
        certificate = Certificate.objects.get()
        self.assertEqual((certificate.verdict, certificate.suite), ('check-report', 'corollary1'))

    def test_exit_codes(self):
        with self.assertRaises(CommandError) as ctx:
            call_command('verify', stdout=io.StringIO(), stderr=io.StringIO())
        self.assertEqual(ctx.exception.returncode, 2)
        with self.assertRaises(CommandError) as ctx:
            call_command('verify', '--suite', 'lemma1', '--p', '9', stdout=io.StringIO(), stderr=io.StringIO())
        self.assertEqual(ctx.exception.returncode, 3)
