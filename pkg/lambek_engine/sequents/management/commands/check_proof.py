"""
Management command to check a proof file.

Named check_proof since Django reserves `check` for its system checks.
"""

from django.core.management.base import BaseCommand

from bridges.arrow import check_arrow_proof
from bridges.natded import check_natded_proof
from bridges.serializers import arrow_document_from_dict, natded_proof_from_dict
from categories.exceptions import ProofCheckError
from sequents.cli import DATA_ERRORS, data_error, negative, read_json
from sequents.inference import check_proof
from sequents.serializers import dertree_from_dict

LOADERS = {
    'gentzen': (dertree_from_dict, check_proof),
    'arrow': (arrow_document_from_dict, lambda doc: check_arrow_proof(doc.ext, doc.root)),
    'natded': (natded_proof_from_dict, check_natded_proof),
}


class Command(BaseCommand):
    help = 'Check a gentzen, arrow or natural-deduction proof stored as JSON'

    def add_arguments(self, parser):
        parser.add_argument('file', help='Path to the proof JSON file')
        parser.add_argument(
            '--system',
            choices=sorted(LOADERS),
            default='gentzen',
            help='Deduction system of the file (default: %(default)s)'
        )

    def handle(self, *args, **options):
        load, check = LOADERS[options['system']]
        try:
            proof = load(read_json(options['file']))
        except DATA_ERRORS as exc:
            raise data_error(exc)

        try:
            check(proof)
        except ProofCheckError as exc:
            raise negative(f'invalid: {exc.describe()}')
        self.stdout.write(self.style.SUCCESS('valid'))
