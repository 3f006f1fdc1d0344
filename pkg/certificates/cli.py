"""
Command-line entry point. The subcommands are Django management commands
(see certificates.commands); cli_main runs one and returns its exit code:

  0  success or pass
  1  valid negative result (not-arrows, failed check, rejected replay)
  2  usage error or invalid parameter
  3  guard or node budget exceeded
"""
import os
import sys

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_GUARD = 3

FOLKMAN_COMMANDS = ('construct', 'clique', 'arrows', 'bounds', 'verify', 'export')


def cli_main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0] not in FOLKMAN_COMMANDS:
        sys.stderr.write(f'usage: folkman {{{",".join(FOLKMAN_COMMANDS)}}} ...\n')
        return EXIT_USAGE
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'config.settings')
    from django.core.management import execute_from_command_line

    try:
        execute_from_command_line(['folkman', *argv])
    except SystemExit as exc:
        if exc.code is None:
            return EXIT_OK
        return exc.code if isinstance(exc.code, int) else EXIT_NEGATIVE
    return EXIT_OK
