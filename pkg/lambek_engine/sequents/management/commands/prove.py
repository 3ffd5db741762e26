"""
Management command to search for cut-free proofs of a sequent.

    python manage.py prove --ext L "(S/(S/np), (S/inf, inf/np)) |- S"
"""

from django.core.management.base import BaseCommand, CommandError

from categories.exceptions import SearchBudgetError
from sequents.cli import (
    DATA_ERRORS,
    add_ext_argument,
    add_search_arguments,
    data_error,
    dump_json,
    format_dertree,
    negative,
    parse_sequent,
    search_options,
)
from sequents.search import prove_all
from sequents.serializers import resolve_extension


class Command(BaseCommand):
    help = 'Search for cut-free proofs of a sequent "TERM |- FORM"'

    def add_arguments(self, parser):
        parser.add_argument('sequent', nargs='?', help='Sequent text, e.g. "(a/b, b) |- a"')
        parser.add_argument('--sequent', dest='sequent_option', help='Same as the positional argument')
        add_ext_argument(parser)
        parser.add_argument(
            '--format',
            choices=['json', 'tree', 'latex'],
            default='tree',
            help='Output format (default: %(default)s)'
        )
        add_search_arguments(parser)

    def handle(self, *args, **options):
        text = options['sequent'] or options['sequent_option']
        if not text:
            raise CommandError('a sequent is required', returncode=2)

        try:
            ext = resolve_extension(options['ext'])
            seq = parse_sequent(text, ext)
            search = search_options(options)
        except DATA_ERRORS as exc:
            raise data_error(exc)

        try:
            proofs = prove_all(seq, search)
        except SearchBudgetError as exc:
            raise negative(f'no proof: {exc}')
        if not proofs:
            raise negative('no proof')

        if options['format'] == 'json' and len(proofs) > 1:
            self.stdout.write(dump_json([p.to_dict() for p in proofs]))
            return
        for proof in proofs:
            self.stdout.write(format_dertree(proof, options['format']))
