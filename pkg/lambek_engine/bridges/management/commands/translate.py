"""
Management command to translate a proof between deduction systems.

    python manage.py translate --from gentzen --to arrow data/r_final.json
    python manage.py translate --from natded --to gentzen data/natded_cosa.json

The input is checked first; the output is JSON in the format of the
target system.
"""

from django.core.management.base import BaseCommand, CommandError

from bridges.arrow import check_arrow_proof
from bridges.serializers import ArrowDocument, arrow_document_from_dict, natded_proof_from_dict
from bridges.translate import arrow_to_gentzen, gentzen_to_arrow, natded_to_gentzen, to_arrow_ext
from categories.exceptions import ExtensionObligationError, ProofCheckError
from sequents.cli import DATA_ERRORS, data_error, dump_json, negative, read_json, search_options
from sequents.inference import check_proof
from sequents.serializers import dertree_from_dict, resolve_extension

ROUTES = {
    ('gentzen', 'arrow'),
    ('arrow', 'gentzen'),
    ('natded', 'gentzen'),
    ('natded', 'arrow'),
}


class Command(BaseCommand):
    help = 'Translate a proof file between the gentzen, arrow and natural-deduction systems'

    def add_arguments(self, parser):
        parser.add_argument('file', help='Path to the proof JSON file')
        parser.add_argument('--from', dest='source', choices=['gentzen', 'arrow', 'natded'], required=True)
        parser.add_argument('--to', dest='target', choices=['gentzen', 'arrow'], required=True)
        parser.add_argument(
            '--ext',
            help='Gentzen extension for arrow input (default: the file\'s extension)'
        )

    def handle(self, *args, **options):
        route = (options['source'], options['target'])
        if route not in ROUTES:
            raise CommandError(f'cannot translate from {route[0]} to {route[1]}', returncode=2)

        try:
            data = read_json(options['file'])
            match route:
                case ('gentzen', 'arrow'):
                    result = self._gentzen_to_arrow(dertree_from_dict(data))
                case ('arrow', 'gentzen'):
                    result = self._arrow_to_gentzen(data, options)
                case ('natded', 'gentzen'):
                    result = natded_to_gentzen(natded_proof_from_dict(data))
                case _:
                    gentzen = natded_to_gentzen(natded_proof_from_dict(data))
                    result = self._gentzen_to_arrow(gentzen)
        except ProofCheckError as exc:
            raise negative(f'invalid: {exc.describe()}')
        except ExtensionObligationError as exc:
            raise negative(str(exc))
        except DATA_ERRORS as exc:
            raise data_error(exc)

        self.stdout.write(dump_json(result.to_dict()))

    @staticmethod
    def _gentzen_to_arrow(d):
        check_proof(d)
        return ArrowDocument(to_arrow_ext(d.seq.ext), gentzen_to_arrow(d), d.seq.ext)

    @staticmethod
    def _arrow_to_gentzen(data, options):
        if options['ext']:
            ext = resolve_extension(options['ext'])
            doc = arrow_document_from_dict(data, {ext.name: ext})
        else:
            doc = arrow_document_from_dict(data)
            ext = doc.gentzen_extension()
        check_arrow_proof(doc.ext, doc.root)
        return arrow_to_gentzen(doc.root, ext, options=search_options(options))
