"""
Management command to cross-check the decision procedures.

For every pair of forms A, B up to a degree, the one-form sequent A ⊢ B is
decided three ways: proof search, the brute-force oracle and arrow search
over the translated extension. Found proofs are also translated to arrow
proofs and checked. Any disagreement makes the command exit with 1.

    python manage.py agreement --ext NL --ext L --degree 2
"""

import itertools
import time

import pandas as pd
from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from bridges.arrow import arrow_search, check_arrow_proof
from bridges.translate import gentzen_to_arrow, to_arrow_ext
from categories.exceptions import ProofCheckError, SearchBudgetError
from categories.forms import forms_up_to
from categories.terms import OneForm
from sequents.cli import DATA_ERRORS, data_error, negative
from sequents.dertree import Sequent
from sequents.search import SearchOptions, oracle_provable, prove
from sequents.serializers import resolve_extension


class Command(BaseCommand):
    help = 'Compare proof search, the oracle and arrow search on all A |- B up to a degree'

    def add_arguments(self, parser):
        parser.add_argument(
            '--ext',
            action='append',
            help='Extension to check (NL, L, NLP, LP or @file.json); repeatable, default NL and L'
        )
        parser.add_argument('--atoms', default='a,b', help='Comma separated atom names (default: %(default)s)')
        parser.add_argument('--degree', type=int, default=2, help='Largest form degree (default: %(default)s)')
        parser.add_argument(
            '--depth',
            type=int,
            default=settings.LAMBEK_ORACLE_DEPTH,
            help='Oracle depth (default: %(default)s)'
        )
        parser.add_argument('--arrow-depth', type=int, default=6, help='Arrow search depth (default: %(default)s)')
        parser.add_argument('--sample', type=int, help='Check only this many random pairs per extension')
        parser.add_argument('--seed', type=int, default=0, help='Seed for --sample (default: %(default)s)')
        parser.add_argument('--csv', type=str, help='Also write the rows to this CSV file')

    def handle(self, *args, **options):
        atoms = [a.strip() for a in options['atoms'].split(',') if a.strip()]
        if not atoms or options['degree'] < 1:
            raise CommandError('need at least one atom and a degree of at least 1', returncode=2)
        if options['depth'] < 1 or options['arrow_depth'] < 1:
            raise CommandError('depths must be at least 1', returncode=2)
        try:
            extensions = [resolve_extension(name) for name in options['ext'] or ['NL', 'L']]
        except DATA_ERRORS as exc:
            raise data_error(exc)

        forms = forms_up_to(options['degree'], atoms)
        pairs = pd.DataFrame(list(itertools.product(forms, forms)), columns=['ante', 'succ'])
        if options['sample'] and options['sample'] < len(pairs):
            pairs = pairs.sample(n=options['sample'], random_state=options['seed'])
        self.stdout.write(f'{len(forms)} forms, {len(pairs)} pairs per extension')

        search = SearchOptions.from_settings()
        rows = []
        started = time.perf_counter()
        for ext in extensions:
            arrow_ext = to_arrow_ext(ext)
            for a, b in pairs.itertuples(index=False):
                rows.append(self._decide(ext, arrow_ext, a, b, search, options))
        elapsed = time.perf_counter() - started

        df = pd.DataFrame(rows)
        self.stdout.write(df.groupby(['ext', 'agree']).size().to_string())
        self.stdout.write(f'{len(df)} sequents in {elapsed:.2f}s')

        if options['csv']:
            df.to_csv(options['csv'], index=False)
            self.stdout.write(f'Rows written to {options["csv"]}')

        disagreements = df.loc[~df['agree']]
        if not disagreements.empty:
            self.stdout.write(disagreements.to_string(index=False))
            raise negative(f'{len(disagreements)} disagreements')
        self.stdout.write(self.style.SUCCESS('All decision procedures agree.'))

    @staticmethod
    def _decide(ext, arrow_ext, a, b, search, options):
        seq = Sequent(ext, OneForm(a), b)
        try:
            proof = prove(seq, search)
        except SearchBudgetError:
            proof = None
        translated_ok = None
        if proof is not None:
            try:
                check_arrow_proof(arrow_ext, gentzen_to_arrow(proof))
                translated_ok = True
            except ProofCheckError:
                translated_ok = False
        proved = proof is not None
        oracle = oracle_provable(seq, options['depth'])
        arrow = arrow_search(arrow_ext, a, b, options['arrow_depth']) is not None
        return {
            'ext': ext.name,
            'ante': str(a),
            'succ': str(b),
            'prove': proved,
            'oracle': oracle,
            'arrow': arrow,
            'translated_ok': translated_ok,
            'agree': proved == oracle == arrow and translated_ok is not False,
        }
