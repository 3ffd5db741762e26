"""
Management command to render a proof file as an ASCII tree or LaTeX.
"""

from django.core.management.base import BaseCommand, CommandError

from bridges.arrow import render_arrow_proof
from bridges.natded import render_natded_proof
from bridges.serializers import arrow_document_from_dict, natded_proof_from_dict
from sequents.cli import DATA_ERRORS, data_error, format_dertree, read_json
from sequents.serializers import dertree_from_dict


class Command(BaseCommand):
    help = 'Render a proof file as an ASCII tree, or as bussproofs LaTeX for gentzen proofs'

    def add_arguments(self, parser):
        parser.add_argument('file', help='Path to the proof JSON file')
        parser.add_argument(
            '--system',
            choices=['gentzen', 'arrow', 'natded'],
            default='gentzen',
            help='Deduction system of the file (default: %(default)s)'
        )
        parser.add_argument(
            '--format',
            choices=['tree', 'latex'],
            default='tree',
            help='Output format (default: %(default)s)'
        )

    def handle(self, *args, **options):
        system, fmt = options['system'], options['format']
        if fmt == 'latex' and system != 'gentzen':
            raise CommandError('LaTeX output is only available for gentzen proofs', returncode=2)

        try:
            data = read_json(options['file'])
            if system == 'gentzen':
                text = format_dertree(dertree_from_dict(data), fmt)
            elif system == 'arrow':
                text = render_arrow_proof(arrow_document_from_dict(data).root)
            else:
                text = render_natded_proof(natded_proof_from_dict(data))
        except DATA_ERRORS as exc:
            raise data_error(exc)
        self.stdout.write(text)
