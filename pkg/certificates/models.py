from django.db import models

from .formats import graph6_decode
from .serializers import VERDICT_CHOICES, dumps


class Certificate(models.Model):
    """
    A certificate saved with --save. payload holds the JSON exactly as
    printed; the other columns are copies for listing and filtering.
    """
    verdict = models.CharField(max_length=20, choices=VERDICT_CHOICES)
    graph_g6 = models.TextField(blank=True, help_text="graph6 of the certified graph")
    vertex_count = models.PositiveIntegerField(null=True, blank=True)
    tuple_text = models.CharField(max_length=200, blank=True, help_text="a_1,...,a_r as given")
    suite = models.CharField(max_length=50, blank=True, help_text="Check suite of a check report")
    schema_version = models.CharField(max_length=20)
    tool_version = models.CharField(max_length=20)
    payload = models.JSONField()
    created_at = models.DateTimeField(auto_now_add=True)

    class Meta:
        verbose_name = "Certificate"
        verbose_name_plural = "Certificates"
        ordering = ['-created_at']

    def __str__(self):
        subject = self.tuple_text or self.suite or self.graph_g6[:20]
        return f"{self.get_verdict_display()} {subject}".strip()

    @classmethod
    def from_payload(cls, payload):
        """Unsaved Certificate for a payload built by serializers"""
        instance = payload.get('instance') or {}
        metadata = payload.get('metadata') or {}
        graph_g6 = payload.get('graph_g6') or ''
        vertex_count = None
        if graph_g6:
            vertex_count = graph6_decode(graph_g6).n
        return cls(
            verdict=payload['verdict'],
            graph_g6=graph_g6,
            vertex_count=vertex_count,
            tuple_text=','.join(str(x) for x in instance.get('a', ())),
            suite=metadata.get('suite', ''),
            schema_version=payload['schema_version'],
            tool_version=payload['tool_version'],
            payload=payload,
        )

    def to_json(self):
        return dumps(self.payload)

    def is_negative(self):
        """Results the CLI exits 1 for"""
        if self.verdict == 'not-arrows':
            return True
        return self.verdict == 'check-report' and not self.payload.get('metadata', {}).get('all_passed', True)
