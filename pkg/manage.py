#!/usr/bin/env python
"""
Django's command-line utility. The tool's own subcommands (construct,
clique, arrows, bounds, verify, export) go through cli_main so that exit
codes follow its 0/1/2/3 convention.
"""
import os
import sys


def main():
    """Run administrative tasks."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'config.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Are you sure it's installed and "
            "available on your PYTHONPATH environment variable? Did you "
            "forget to activate a virtual environment?"
        ) from exc
    from certificates.cli import FOLKMAN_COMMANDS, cli_main

    if len(sys.argv) > 1 and sys.argv[1] in FOLKMAN_COMMANDS:
        sys.exit(cli_main(sys.argv[1:]))
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()
