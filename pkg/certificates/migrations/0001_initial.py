from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='Certificate',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('verdict', models.CharField(choices=[('arrows', 'Arrows'), ('not-arrows', 'Not arrows'), ('clique-value', 'Clique value'), ('check-report', 'Check report')], max_length=20)),
                ('graph_g6', models.TextField(blank=True, help_text='graph6 of the certified graph')),
                ('vertex_count', models.PositiveIntegerField(blank=True, null=True)),
                ('tuple_text', models.CharField(blank=True, help_text='a_1,...,a_r as given', max_length=200)),
                ('suite', models.CharField(blank=True, help_text='Check suite of a check report', max_length=50)),
                ('schema_version', models.CharField(max_length=20)),
                ('tool_version', models.CharField(max_length=20)),
                ('payload', models.JSONField()),
                ('created_at', models.DateTimeField(auto_now_add=True)),
            ],
            options={
                'verbose_name': 'Certificate',
                'verbose_name_plural': 'Certificates',
                'ordering': ['-created_at'],
            },
        ),
    ]
