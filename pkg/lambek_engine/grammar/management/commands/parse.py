"""
Management command to parse a sentence against a lexicon.

    python manage.py parse --lexicon data/lexicon_it.tsv --ext L --goal S "cosa guarda passare"
"""

from django.conf import settings
from django.core.management.base import BaseCommand

from categories.text import parse_category
from grammar.lexicon import load_lexicon_file
from grammar.parser import parse, render_bracketing
from sequents.cli import (
    DATA_ERRORS,
    add_ext_argument,
    add_search_arguments,
    data_error,
    dump_json,
    format_dertree,
    negative,
    search_options,
)
from sequents.serializers import resolve_extension


class Command(BaseCommand):
    help = 'Parse a sentence: find bracketings and lexical choices that prove the goal category'

    def add_arguments(self, parser):
        parser.add_argument('words', nargs='+', help='The sentence, as one argument or several')
        parser.add_argument(
            '--lexicon',
            default=str(settings.LAMBEK_DATA_DIR / 'lexicon_it.tsv'),
            help='Lexicon file, TSV or JSON (default: %(default)s)'
        )
        parser.add_argument('--goal', default='S', help='Goal category (default: %(default)s)')
        add_ext_argument(parser)
        parser.add_argument(
            '--format',
            choices=['json', 'tree', 'latex'],
            default='tree',
            help='Proof output format (default: %(default)s)'
        )
        add_search_arguments(parser)

    def handle(self, *args, **options):
        words = ' '.join(options['words']).split()
        try:
            lexicon = load_lexicon_file(options['lexicon'])
            goal = parse_category(options['goal'])
            ext = resolve_extension(options['ext'])
            results = parse(words, goal, lexicon, ext, search_options(options))
        except DATA_ERRORS as exc:
            raise data_error(exc)

        if not results:
            raise negative(f'no parse of "{" ".join(words)}" as {goal}')

        if options['format'] == 'json':
            self.stdout.write(dump_json([r.to_dict(words) for r in results]))
            return
        for result in results:
            self.stdout.write(self.style.SUCCESS(render_bracketing(result.bracketing, words)))
            for word, form in zip(words, result.assignment):
                self.stdout.write(f'  {word}: {form}')
            self.stdout.write(format_dertree(result.proof, options['format']))
