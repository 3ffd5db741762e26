"""
Management command to prove the theorem catalogue.

Every theorem is proved under its listed extension; the report gives the
degree, size and height of each proof with the search time.
"""

import time

import pandas as pd
from django.core.management.base import BaseCommand, CommandError

from categories.exceptions import SearchBudgetError
from sequents.cli import add_search_arguments, negative, search_options
from sequents.dertree import degree_proof, height, size, subtrees
from sequents.relations import check_subformula_property
from sequents.search import ProofSearch
from sequents.theorems import CATALOGUE, instantiate


class Command(BaseCommand):
    help = 'Prove every catalogue theorem and report per-theorem statistics'

    def add_arguments(self, parser):
        parser.add_argument(
            '--group',
            action='append',
            help='Only this group (general, L, NLP, LP, arrow); repeatable'
        )
        parser.add_argument('--csv', type=str, help='Also write the rows to this CSV file')
        add_search_arguments(parser)

    def handle(self, *args, **options):
        theorems = [t for t in CATALOGUE if not options['group'] or t.group in options['group']]
        if not theorems:
            raise CommandError('no theorem matches the selected groups', returncode=2)

        rows = []
        for theorem in theorems:
            seq = instantiate(theorem)
            search = ProofSearch(search_options(options))
            started = time.perf_counter()
            try:
                proof = next(search.solutions(seq), None)
            except SearchBudgetError:
                proof = None
            elapsed = time.perf_counter() - started
            rows.append({
                'name': theorem.name,
                'group': theorem.group,
                'ext': theorem.ext_name,
                'sequent': str(seq),
                'proved': proof is not None,
                'degree': degree_proof(proof) if proof else None,
                'size': size(proof) if proof else None,
                'height': height(proof) if proof else None,
                'subformulas_ok': self._subformulas_ok(proof),
                'expansions': search.expanded,
                'seconds': round(elapsed, 4),
            })

        df = pd.DataFrame(rows)
        self.stdout.write(df.to_string(index=False))
        self.stdout.write('')
        self.stdout.write(df.groupby(['ext', 'proved']).size().to_string())

        if options['csv']:
            df.to_csv(options['csv'], index=False)
            self.stdout.write(f'Rows written to {options["csv"]}')

        problems = []
        failed = df.loc[~df['proved'], 'name'].tolist()
        if failed:
            problems.append(f'unproved: {", ".join(failed)}')
        broken = df.loc[df['subformulas_ok'].eq(False), 'name'].tolist()
        if broken:
            problems.append(f'sub-formula property fails: {", ".join(broken)}')
        if problems:
            raise negative('; '.join(problems))
        self.stdout.write(self.style.SUCCESS(f'All {len(df)} theorems proved.'))

    @staticmethod
    def _subformulas_ok(proof):
        if proof is None or not proof.seq.ext.ext_sub:
            return None
        return all(check_subformula_property(q, proof) for _, q in subtrees(proof))
