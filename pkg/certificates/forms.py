from django import forms
from django.conf import settings

from folkman_module.arrowing import Coloring, SearchConfig, arrows, is_free_coloring
from folkman_module.cliques import clique_number
from folkman_module.construct import make_instance
from folkman_module.exceptions import FolkmanError
from folkman_module.graphs import VertexSet
from verification.oracle import FAIL, PASS, CheckReport, replay_counterexample

from .formats import graph6_decode
from .serializers import (
    CERTIFICATE_FIELDS,
    VERDICT_ARROWS,
    VERDICT_CHECKS,
    VERDICT_CHOICES,
    VERDICT_CLIQUE,
    VERDICT_NOT_ARROWS,
)

REPORT_FIELDS = {'check_id', 'params', 'verdict', 'cases_examined', 'counterexample', 'notes', 'discrepancies'}
INSTANCE_FIELDS = {'a', 'm', 'p', 'q'}
WITNESS_FIELDS = {
    'coloring': {'kind', 'colors'},
    'clique': {'kind', 'size', 'vertices'},
}


class CertificateForm(forms.Form):
    """
    Validates a certificate read back from JSON.
    Unknown fields and other schema versions are rejected; witnesses are
    re-checked against the decoded graph. With rerun=True, arrows
    verdicts are searched again and failed check reports are replayed.
    """
    schema_version = forms.CharField()
    tool_version = forms.CharField()
    verdict = forms.ChoiceField(choices=VERDICT_CHOICES)
    graph_g6 = forms.CharField(required=False)
    labels = forms.JSONField(required=False)
    instance = forms.JSONField(required=False)
    witness = forms.JSONField(required=False)
    stats = forms.JSONField(required=False)
    metadata = forms.JSONField(required=False)
    reports = forms.JSONField(required=False)

    def __init__(self, *args, rerun=False, **kwargs):
        super().__init__(*args, **kwargs)
        self.rerun = rerun

    def clean_schema_version(self):
        version = self.cleaned_data['schema_version']
        expected = settings.FOLKMAN['SCHEMA_VERSION']
        if version != expected:
            raise forms.ValidationError(f'schema version {version} is not supported (expected {expected})')
        return version

    def clean_graph_g6(self):
        text = self.cleaned_data.get('graph_g6')
        if not text:
            return None
        try:
            return graph6_decode(text)
        except FolkmanError as exc:
            raise forms.ValidationError(f'graph_g6: {exc}')

    def clean_instance(self):
        data = self.cleaned_data.get('instance')
        if data is None:
            return None
        if not isinstance(data, dict) or 'a' not in data:
            raise forms.ValidationError('instance must be an object with the tuple "a"')
        unknown = sorted(set(data) - INSTANCE_FIELDS)
        if unknown:
            raise forms.ValidationError(f'unknown instance fields: {", ".join(unknown)}')
        try:
            inst = make_instance(data['a'], data.get('q'))
        except FolkmanError as exc:
            raise forms.ValidationError(str(exc))
        if data.get('m') != inst.m or data.get('p') != inst.p:
            raise forms.ValidationError(f'm and p do not match the tuple: expected m={inst.m}, p={inst.p}')
        return inst

    def clean(self):
        cleaned_data = super().clean()
        unknown = sorted(set(self.data) - set(CERTIFICATE_FIELDS))
        if unknown:
            raise forms.ValidationError(f'unknown fields: {", ".join(unknown)}')
        if self.errors:
            return cleaned_data

        verdict = cleaned_data.get('verdict')
        graph = cleaned_data.get('graph_g6')
        labels = cleaned_data.get('labels')
        if graph is not None and labels is not None and len(labels) != graph.n:
            self.add_error('labels', f'{len(labels)} labels for a graph on {graph.n} vertices')

        if verdict in (VERDICT_ARROWS, VERDICT_NOT_ARROWS):
            self._check_arrowing(verdict, graph, cleaned_data.get('instance'), cleaned_data.get('witness'))
        elif verdict == VERDICT_CLIQUE:
            self._check_clique(graph, cleaned_data.get('witness'))
        elif verdict == VERDICT_CHECKS:
            self._check_reports(cleaned_data.get('reports'))
        return cleaned_data

    def _check_arrowing(self, verdict, graph, inst, witness):
        if graph is None or inst is None:
            raise forms.ValidationError('arrowing certificates need graph_g6 and instance')
        if verdict == VERDICT_ARROWS:
            if witness is not None:
                self.add_error('witness', 'an arrows verdict carries no witness')
            elif self.rerun and not arrows(graph, inst, SearchConfig()).arrows:
                raise forms.ValidationError('search finds a free coloring; the graph does not arrow')
            return
        if not isinstance(witness, dict) or witness.get('kind') != 'coloring':
            self.add_error('witness', 'a not-arrows verdict needs a coloring witness')
            return
        if not self._witness_keys_known(witness):
            return
        try:
            free = is_free_coloring(graph, inst, Coloring(tuple(witness.get('colors') or ())))
        except FolkmanError as exc:
            self.add_error('witness', str(exc))
            return
        if not free:
            self.add_error('witness', 'the coloring is not free: some class holds a forbidden clique')

    def _witness_keys_known(self, witness):
        unknown = sorted(set(witness) - WITNESS_FIELDS[witness['kind']])
        if unknown:
            self.add_error('witness', f'unknown witness fields: {", ".join(unknown)}')
        return not unknown

    def _check_clique(self, graph, witness):
        if graph is None:
            raise forms.ValidationError('clique certificates need graph_g6')
        if not isinstance(witness, dict) or witness.get('kind') != 'clique':
            self.add_error('witness', 'a clique-value verdict needs a clique witness')
            return
        if not self._witness_keys_known(witness):
            return
        vertices = witness.get('vertices') or []
        try:
            members = VertexSet.from_indices(graph.n, vertices)
        except FolkmanError as exc:
            self.add_error('witness', str(exc))
            return
        if len(members) != witness.get('size') or len(vertices) != len(members):
            self.add_error('witness', 'clique size does not match its vertex list')
            return
        for v in members:
            if members.bits & ~graph.adj[v] & ~(1 << v):
                self.add_error('witness', f'vertex {v} is not adjacent to every other witness vertex')
                return
        value = clique_number(graph).size
        if value != witness['size']:
            self.add_error('witness', f'recomputed clique number is {value}, certificate says {witness["size"]}')

    def _check_reports(self, reports):
        if not isinstance(reports, list):
            raise forms.ValidationError('check-report certificates need a reports list')
        for data in reports:
            if not isinstance(data, dict) or set(data) - REPORT_FIELDS or 'check_id' not in data:
                self.add_error('reports', f'malformed report {data!r}')
                return
            report = CheckReport.from_dict(data)
            if report.verdict not in (PASS, FAIL):
                self.add_error('reports', f'{report.check_id}: verdict {report.verdict!r}')
            elif report.verdict == FAIL:
                if report.counterexample is None:
                    self.add_error('reports', f'{report.check_id}: failed without a counterexample')
                elif self.rerun and not replay_counterexample(report):
                    self.add_error('reports', f'{report.check_id}: counterexample does not fail on replay')
