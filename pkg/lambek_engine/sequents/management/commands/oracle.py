"""
Management command for the brute-force provability oracle.
"""

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from sequents.cli import DATA_ERRORS, add_ext_argument, data_error, negative, parse_sequent
from sequents.search import oracle_provable
from sequents.serializers import resolve_extension


class Command(BaseCommand):
    help = 'Decide cut-free provability by exhaustive search up to a depth'

    def add_arguments(self, parser):
        parser.add_argument('sequent', help='Sequent text "TERM |- FORM"')
        add_ext_argument(parser)
        parser.add_argument(
            '--depth',
            type=int,
            default=settings.LAMBEK_ORACLE_DEPTH,
            help='Largest proof height considered (default: %(default)s)'
        )

    def handle(self, *args, **options):
        if options['depth'] < 1:
            raise CommandError('--depth must be at least 1', returncode=2)
        try:
            seq = parse_sequent(options['sequent'], resolve_extension(options['ext']))
        except DATA_ERRORS as exc:
            raise data_error(exc)

        if not oracle_provable(seq, options['depth']):
            raise negative('not provable')
        self.stdout.write('provable')
