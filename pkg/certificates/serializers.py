"""
Builds the JSON certificates every command emits.

A certificate is a plain dict; dumps() fixes the byte layout (sorted keys,
two-space indent) so deterministic runs print identical text.
"""
import json

from django.conf import settings

from folkman_module.construct import HYPOTHESIS_NOTE, bounds_report

from .formats import graph6_encode

VERDICT_ARROWS = 'arrows'
VERDICT_NOT_ARROWS = 'not-arrows'
VERDICT_CLIQUE = 'clique-value'
VERDICT_CHECKS = 'check-report'

VERDICT_CHOICES = [
    (VERDICT_ARROWS, 'Arrows'),
    (VERDICT_NOT_ARROWS, 'Not arrows'),
    (VERDICT_CLIQUE, 'Clique value'),
    (VERDICT_CHECKS, 'Check report'),
]

CERTIFICATE_FIELDS = (
    'schema_version',
    'tool_version',
    'verdict',
    'graph_g6',
    'labels',
    'instance',
    'witness',
    'stats',
    'metadata',
    'reports',
)


def _envelope(verdict, graph=None, labels=None, instance=None):
    folkman = settings.FOLKMAN
    return {
        'schema_version': folkman['SCHEMA_VERSION'],
        'tool_version': folkman['TOOL_VERSION'],
        'verdict': verdict,
        'graph_g6': graph6_encode(graph) if graph is not None else None,
        'labels': list(labels) if labels is not None else None,
        'instance': instance.as_dict() if instance is not None else None,
        'witness': None,
        'stats': {},
        'metadata': {},
        'reports': None,
    }


def arrowing_certificate(graph, inst, result, cfg, labels=None, clique_size=None):
    """
    Certificate for one arrowing run. Wall time is left out in
    deterministic mode.
    """
    cert = _envelope(result.verdict, graph, labels, inst)
    if result.witness is not None:
        cert['witness'] = {'kind': 'coloring', 'colors': list(result.witness.colors)}
    cert['stats'] = result.stats.as_dict(include_time=not cfg.deterministic)
    parallel = not cfg.deterministic and cfg.worker_width > 1
    order = cfg.vertex_order if isinstance(cfg.vertex_order, str) else list(cfg.vertex_order)
    cert['metadata'] = {
        'vertex_order': order,
        'symmetry': 'sigma' if cfg.symmetry_generators else None,
        'node_budget': cfg.node_budget,
        'budget_scope': 'per-subtree' if parallel else 'whole-search',
        'worker_width': cfg.worker_width if parallel else 1,
        'bounds': bounds_report(inst).as_dict(),
        'hypothesis_note': HYPOTHESIS_NOTE,
    }
    if clique_size is not None:
        cert['metadata']['clique_number'] = clique_size
        # membership in H(a; m-1)
        cert['metadata']['in_H'] = result.arrows and clique_size < inst.m - 1
    return cert


def clique_certificate(graph, result, labels=None):
    cert = _envelope(VERDICT_CLIQUE, graph, labels)
    cert['witness'] = {
        'kind': 'clique',
        'size': result.size,
        'vertices': list(result.witness.indices()),
    }
    cert['stats'] = {'nodes': result.nodes_explored}
    return cert


def check_report_certificate(suite, reports, instance=None):
    cert = _envelope(VERDICT_CHECKS, instance=instance)
    failed = sum(1 for r in reports if not r.passed)
    cert['stats'] = {
        'checks': len(reports),
        'failed': failed,
        'cases_examined': sum(r.cases_examined for r in reports),
    }
    cert['metadata'] = {'suite': suite, 'all_passed': failed == 0}
    cert['reports'] = [r.as_dict() for r in reports]
    return cert


def dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)
