from django.contrib import admin
from .models import Certificate


@admin.register(Certificate)
class CertificateAdmin(admin.ModelAdmin):
    """Admin interface for saved certificates"""
    list_display = ('id', 'verdict', 'negative', 'tuple_text', 'suite', 'vertex_count', 'tool_version', 'created_at')
    list_filter = ('verdict', 'suite', 'created_at')
    search_fields = ('graph_g6', 'tuple_text', 'suite')
    ordering = ('-created_at',)
    readonly_fields = ('schema_version', 'tool_version', 'created_at', 'pretty_payload')
    exclude = ('payload',)

    fieldsets = (
        ('Result', {
            'fields': ('verdict', 'tuple_text', 'suite')
        }),
        ('Graph', {
            'fields': ('graph_g6', 'vertex_count')
        }),
        ('Certificate', {
            'fields': ('schema_version', 'tool_version', 'pretty_payload'),
        }),
        ('Timestamps', {
            'fields': ('created_at',),
            'classes': ('collapse',)
        }),
    )

    def pretty_payload(self, obj):
        """Payload as printed by the CLI"""
        return obj.to_json()
    pretty_payload.short_description = 'Payload'

    @admin.display(boolean=True, description='Negative')
    def negative(self, obj):
        return obj.is_negative()
