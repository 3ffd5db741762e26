"""
Shared plumbing for the management commands.

Exit codes: 0 for a positive result, 1 for a negative one (no proof,
invalid proof, not provable), 2 for bad input.
"""

import json

from django.conf import settings
from django.core.management.base import CommandError
from rest_framework import serializers

from categories.exceptions import LambekError
from categories.text import parse_sequent_text

from .dertree import Dertree, Sequent
from .render import latex_dertree, render_dertree
from .search import SearchOptions

DATA_ERRORS = (LambekError, serializers.ValidationError, OSError, ValueError, RecursionError)


def data_error(exc) -> CommandError:
    if isinstance(exc, RecursionError):
        return CommandError('input is nested too deeply', returncode=2)
    detail = exc.detail if isinstance(exc, serializers.ValidationError) else exc
    return CommandError(str(detail), returncode=2)


def negative(message) -> CommandError:
    return CommandError(message, returncode=1)


def read_json(path):
    with open(path, encoding='utf-8') as f:
        return json.load(f)


def dump_json(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)


def parse_sequent(text, ext) -> Sequent:
    ante, succ = parse_sequent_text(text)
    return Sequent(ext, ante, succ)


def add_ext_argument(parser):
    parser.add_argument(
        '--ext',
        default=settings.LAMBEK_DEFAULT_EXT,
        help='NL, L, NLP, LP or @file.json (default: %(default)s)'
    )


def add_search_arguments(parser):
    parser.add_argument('--max-solutions', type=int, help='Number of proofs to return')
    parser.add_argument('--max-depth', type=int, help='Bound on proof height')
    parser.add_argument(
        '--no-loop-check',
        action='store_true',
        help='Do not prune sequents repeated on a branch'
    )
    parser.add_argument(
        '--memoize-failures',
        action='store_true',
        help='Skip sequents that already failed (faster, may miss proofs)'
    )


def search_options(options) -> SearchOptions:
    return SearchOptions.from_settings(
        max_depth=options.get('max_depth'),
        max_solutions=options.get('max_solutions'),
        loop_check=not options.get('no_loop_check', False),
        memoize_failures=options.get('memoize_failures', False),
    )


def format_dertree(d: Dertree, fmt: str) -> str:
    if fmt == 'json':
        return dump_json(d.to_dict())
    if fmt == 'latex':
        return latex_dertree(d)
    return render_dertree(d)
