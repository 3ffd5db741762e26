import json
import os
import tempfile
from io import StringIO

from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from categories.exceptions import LexiconSyntaxError, UnknownWordError
from categories.terms import OneForm
from categories.text import parse_category, parse_term
from sequents.dertree import Rule, head
from sequents.extensions import L, NL
from sequents.inference import check_proof
from sequents.search import SearchOptions

from .lexicon import Lexicon, load_lexicon, load_lexicon_file
from .parser import bracketing_term, bracketings, parse, render_bracketing

LEXICON_IT = settings.LAMBEK_DATA_DIR / 'lexicon_it.tsv'
WORDS = ['cosa', 'guarda', 'passare']
S = parse_category('S')


class LexiconTests(SimpleTestCase):

    def test_shipped_lexicon(self):
        lex = load_lexicon_file(LEXICON_IT)
        self.assertEqual(lex.words, WORDS)
        self.assertEqual(lex.categories('cosa'), (parse_category('S/(S/np)'),))
        self.assertEqual(lex.to_dict()['passare'], ['inf/np'])

    def test_empty_and_comments(self):
        self.assertEqual(len(load_lexicon('')), 0)
        self.assertEqual(len(load_lexicon('# nothing here\n\n   \n')), 0)

    def test_syntax_errors_carry_line_numbers(self):
        with self.assertRaises(LexiconSyntaxError) as ctx:
            load_lexicon('w\tS/')
        self.assertEqual(ctx.exception.line, 1)
        with self.assertRaises(LexiconSyntaxError) as ctx:
            load_lexicon('cosa\tS/(S/np)\n\nguarda\n')
        self.assertEqual(ctx.exception.line, 3)
        self.assertIn('line 3', str(ctx.exception))

    def test_repeated_words_merge(self):
        lex = load_lexicon('passare\tinf/np\npassare\tinf/np, inf\n')
        self.assertEqual(lex.categories('passare'), (parse_category('inf/np'), parse_category('inf')))

    def test_whitespace_separator(self):
        lex = load_lexicon('cosa   S/(S/np)\n')
        self.assertEqual(lex.categories('cosa'), (parse_category('S/(S/np)'),))

    def test_json(self):
        lex = load_lexicon(json.dumps({'cosa': ['S/(S/np)', 'np']}))
        self.assertEqual(len(lex.categories('cosa')), 2)
        self.assertEqual(load_lexicon(json.dumps(lex.to_dict())), lex)
        with self.assertRaises(LexiconSyntaxError):
            load_lexicon('{"cosa": []}')
        with self.assertRaises(LexiconSyntaxError) as ctx:
            load_lexicon('{"cosa": ')
        self.assertEqual(ctx.exception.line, 1)

    def test_unknown_words(self):
        lex = load_lexicon_file(LEXICON_IT)
        with self.assertRaises(UnknownWordError) as ctx:
            lex.check_words(['cosa', 'vede', 'qui', 'vede'])
        self.assertEqual(ctx.exception.words, ['vede', 'qui'])
        with self.assertRaises(UnknownWordError):
            lex.categories('vede')

    def test_entries_are_non_empty(self):
        with self.assertRaises(ValueError):
            Lexicon({'cosa': []})


class BracketingTests(SimpleTestCase):

    def test_counts_and_order(self):
        self.assertEqual(bracketings(1), [0])
        self.assertEqual(bracketings(3), [(0, (1, 2)), ((0, 1), 2)])
        four = bracketings(4)
        self.assertEqual(len(four), 5)
        self.assertEqual(four[0], (0, (1, (2, 3))))
        self.assertEqual(four[-1], (((0, 1), 2), 3))
        self.assertEqual(len(bracketings(6)), 42)
        with self.assertRaises(ValueError):
            bracketings(0)

    def test_render_and_term(self):
        self.assertEqual(render_bracketing(((0, 1), 2), WORDS), '((cosa guarda) passare)')
        assignment = [parse_category(t) for t in ('a', 'b', 'c')]
        self.assertEqual(bracketing_term((0, (1, 2)), assignment), parse_term('(a, (b, c))'))
        self.assertEqual(bracketing_term(0, assignment), OneForm(assignment[0]))


class ParseTests(SimpleTestCase):

    def setUp(self):
        self.lex = load_lexicon_file(LEXICON_IT)

    def test_sentence_under_associativity(self):
        with self.assertLogs('grammar.parser', 'INFO') as logs:
            results = parse(WORDS, S, self.lex, L, SearchOptions())
        self.assertEqual(len(results), 1)
        result = results[0]
        self.assertEqual(render_bracketing(result.bracketing, WORDS), '(cosa (guarda passare))')
        check_proof(result.proof)
        self.assertEqual(head(result.proof).antecedent, result.term)
        self.assertIn('examined 1 candidates, 1 parses', logs.output[-1])

    def test_both_bracketings_parse_under_associativity(self):
        results = parse(WORDS, S, self.lex, L, SearchOptions(max_solutions=5))
        self.assertEqual([render_bracketing(r.bracketing, WORDS) for r in results],
                         ['(cosa (guarda passare))', '((cosa guarda) passare)'])

    def test_no_parse_without_associativity(self):
        self.assertEqual(parse(WORDS, S, self.lex, NL, SearchOptions(max_solutions=5)), [])

    def test_single_word(self):
        results = parse(['cosa'], parse_category('S/(S/np)'), self.lex, NL, SearchOptions())
        self.assertEqual(results[0].proof.rule, Rule.SEQ_AXIOM)

    def test_unknown_and_empty_input(self):
        with self.assertRaises(UnknownWordError):
            parse(['cosa', 'vede'], S, self.lex, L)
        with self.assertRaises(ValueError):
            parse([], S, self.lex, L)

    def test_more_categories_keep_parses(self):
        bigger = load_lexicon_file(LEXICON_IT)
        bigger.add('passare', [parse_category('np'), parse_category('inf')])
        bigger.add('guarda', [parse_category('S/np')])
        options = SearchOptions(max_solutions=50)
        small = {(r.bracketing, r.assignment) for r in parse(WORDS, S, self.lex, L, options)}
        large = {(r.bracketing, r.assignment) for r in parse(WORDS, S, bigger, L, options)}
        self.assertEqual(len(small), 2)
        self.assertTrue(small <= large)

    def test_budget_skips_candidates(self):
        with self.assertLogs('grammar.parser', 'WARNING'):
            results = parse(WORDS, S, self.lex, L, SearchOptions(expansion_budget=1))
        self.assertEqual(results, [])

    def test_to_dict(self):
        (result,) = parse(WORDS, S, self.lex, L, SearchOptions())
        data = result.to_dict(WORDS)
        self.assertEqual(data['assignment'], {'cosa': 'S/(S/np)', 'guarda': 'S/inf', 'passare': 'inf/np'})
        self.assertEqual(data['proof']['der']['rule'], 'LeftSlash')


class ParseCommandTests(SimpleTestCase):

    def call(self, *args):
        out = StringIO()
        call_command(*args, stdout=out, stderr=StringIO())
        return out.getvalue()

    def assertExits(self, code, *args):
        with self.assertRaises(CommandError) as ctx:
            self.call(*args)
        self.assertEqual(ctx.exception.returncode, code)
        return ctx.exception

    def test_tree_output(self):
        out = self.call('parse', '--ext', 'L', 'cosa guarda passare')
        lines = out.splitlines()
        self.assertEqual(lines[0], '(cosa (guarda passare))')
        self.assertEqual(lines[1], '  cosa: S/(S/np)')
        self.assertIn('[SeqExt]', out)

    def test_words_as_separate_arguments(self):
        out = self.call('parse', '--ext', 'L', '--format', 'json', 'cosa', 'guarda', 'passare')
        (result,) = json.loads(out)
        self.assertEqual(result['bracketing'], '(cosa (guarda passare))')

    def test_exit_codes(self):
        error = self.assertExits(1, 'parse', '--ext', 'NL', 'cosa guarda passare')
        self.assertEqual(str(error), 'no parse of "cosa guarda passare" as S')
        self.assertExits(2, 'parse', '--ext', 'L', 'cosa vede')
        self.assertExits(2, 'parse', '--goal', 'S/', 'cosa')
        with tempfile.TemporaryDirectory() as tmp:
            self.assertExits(2, 'parse', '--lexicon', os.path.join(tmp, 'none.tsv'), 'cosa')
            path = os.path.join(tmp, 'bad.tsv')
            with open(path, 'w', encoding='utf-8') as f:
                f.write('cosa\tS/(S/np\n')
            self.assertIn('line 1', str(self.assertExits(2, 'parse', '--lexicon', path, 'cosa')))
