import json
import os
import tempfile
from io import StringIO

from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase
from rest_framework import serializers

from categories.exceptions import ExtensionError, ExtensionObligationError, InvalidPathError, ProofCheckError
from categories.forms import At, Backslash, Dot, Slash, forms_up_to
from categories.terms import OneForm, Step, delta_translation
from categories.text import parse_category, parse_term
from sequents.cli import parse_sequent, read_json
from sequents.dertree import Rule, Sequent, head, is_cut_free
from sequents.extensions import ARROW_L, ARROW_NL, ARROW_NLP, L, NL
from sequents.inference import check_proof
from sequents.search import prove
from sequents.serializers import dertree_from_dict, resolve_extension
from sequents.theorems import CATALOGUE, instantiate

from .arrow import (
    ArrowKind,
    ArrowProof,
    antimono_backslash_left,
    antimono_slash_right,
    apply_backslash,
    apply_slash,
    arrow_search,
    beta,
    beta_inv,
    check_arrow_proof,
    comp,
    ext_leaf,
    form_at,
    gamma,
    gamma_inv,
    mono_backslash_right,
    mono_context,
    mono_dot,
    mono_slash_left,
    one,
    render_arrow_proof,
    replace_form_at,
)
from .natded import NatDed, NatDedProof, NatRule, check_natded_proof
from .serializers import (
    arrow_document_from_dict,
    arrow_proof_from_dict,
    natded_proof_from_dict,
    resolve_arrow_extension,
)
from .translate import arrow_to_gentzen, extension_obligations, gentzen_to_arrow, natded_to_gentzen, to_arrow_ext

R_FINAL = settings.LAMBEK_DATA_DIR / 'r_final.json'
NATDED_COSA = settings.LAMBEK_DATA_DIR / 'natded_cosa.json'

a, b, c = At('a'), At('b'), At('c')


def form(text):
    return parse_category(text)


def load_r_final():
    return dertree_from_dict(read_json(R_FINAL))


def nat(rule, ante, succ, *children, **extra):
    return NatDed(rule, parse_term(ante), form(succ), tuple(children), **extra)


class ArrowRuleTests(SimpleTestCase):

    def test_residuation(self):
        p = beta(one(Dot(a, b)))
        self.assertEqual((p.source, p.target), (a, Slash(Dot(a, b), b)))
        back = beta_inv(p)
        self.assertEqual((back.source, back.target), (Dot(a, b), Dot(a, b)))
        q = gamma(one(Dot(a, b)))
        self.assertEqual((q.source, q.target), (b, Backslash(a, Dot(a, b))))
        self.assertEqual(gamma_inv(q).source, Dot(a, b))
        for proof in (p, back, q, gamma_inv(q)):
            check_arrow_proof(ARROW_NL, proof)

    def test_constructors_reject_wrong_shapes(self):
        with self.assertRaises(ValueError):
            beta(one(a))
        with self.assertRaises(ValueError):
            gamma_inv(one(Slash(a, b)))
        with self.assertRaises(ValueError):
            comp(one(a), one(b))

    def test_invalid_nodes(self):
        with self.assertRaises(ProofCheckError):
            check_arrow_proof(ARROW_NL, ArrowProof(ArrowKind.ONE, a, b))
        with self.assertRaises(ProofCheckError) as ctx:
            check_arrow_proof(ARROW_NL, ArrowProof(ArrowKind.BETA, a, Slash(a, b)))
        self.assertIn('expected 1 premises', ctx.exception.reason)

    def test_bad_premise_is_located(self):
        bad = ArrowProof(ArrowKind.COMP, a, a, (one(a), ArrowProof(ArrowKind.ONE, a, b)), mid=a)
        with self.assertRaises(ProofCheckError) as ctx:
            check_arrow_proof(ARROW_NL, bad)
        self.assertEqual(ctx.exception.tree_path, ())
        good_shape = ArrowProof(ArrowKind.COMP, a, b, (one(a), ArrowProof(ArrowKind.ONE, a, b)), mid=a)
        with self.assertRaises(ProofCheckError) as ctx:
            check_arrow_proof(ARROW_NL, good_shape)
        self.assertEqual(ctx.exception.tree_path, (1,))

    def test_extension_leaves(self):
        leaf = ext_leaf('assocL', form('a.(b.c)'), form('a.b.c'))
        check_arrow_proof(ARROW_L, leaf)
        with self.assertRaises(ProofCheckError):
            check_arrow_proof(ARROW_NL, leaf)


class CombinatorTests(SimpleTestCase):

    def setUp(self):
        # a/b.b -> a
        self.p = apply_slash(Slash(a, b), one(b))

    def test_application(self):
        check_arrow_proof(ARROW_NL, self.p)
        self.assertEqual((self.p.source, self.p.target), (form('a/b.b'), a))
        q = apply_backslash(Backslash(b, a), one(b))
        check_arrow_proof(ARROW_NL, q)
        self.assertEqual((q.source, q.target), (form('b.b\\a'), a))

    def test_monotonicity(self):
        p = self.p
        cases = [
            (mono_dot(p, one(c)), form('(a/b.b).c'), form('a.c')),
            (mono_slash_left(p, c), form('(a/b.b)/c'), form('a/c')),
            (antimono_slash_right(p, c), form('c/a'), form('c/(a/b.b)')),
            (antimono_backslash_left(p, c), form('a\\c'), form('(a/b.b)\\c')),
            (mono_backslash_right(p, c), form('c\\(a/b.b)'), form('c\\a')),
        ]
        for proof, source, target in cases:
            with self.subTest(proof=str(proof)):
                check_arrow_proof(ARROW_NL, proof)
                self.assertEqual((proof.source, proof.target), (source, target))

    def test_mono_context(self):
        f = form('c.(a/b.b)')
        lifted = mono_context(f, (Step.RIGHT,), self.p)
        check_arrow_proof(ARROW_NL, lifted)
        self.assertEqual((lifted.source, lifted.target), (f, form('c.a')))
        with self.assertRaises(ValueError):
            mono_context(f, (Step.LEFT,), self.p)
        with self.assertRaises(InvalidPathError):
            mono_context(c, (Step.LEFT,), self.p)

    def test_form_positions(self):
        f = form('a.(b.c)')
        self.assertEqual(form_at(f, (Step.RIGHT, Step.LEFT)), b)
        self.assertEqual(replace_form_at(f, (Step.RIGHT,), c), Dot(a, c))
        with self.assertRaises(InvalidPathError):
            form_at(a, (Step.LEFT,))


class ArrowSearchTests(SimpleTestCase):

    def test_application(self):
        p = arrow_search(ARROW_NL, form('a/b.b'), a)
        self.assertIsNotNone(p)
        check_arrow_proof(ARROW_NL, p)

    def test_associativity_needs_its_extension(self):
        source, target = form('a.(b.c)'), form('(a.b).c')
        self.assertIsNone(arrow_search(ARROW_NL, source, target, 12))
        p = arrow_search(ARROW_L, source, target, 12)
        check_arrow_proof(ARROW_L, p)
        self.assertEqual(extension_obligations(p), [(source, target)])

    def test_commutativity(self):
        self.assertIsNone(arrow_search(ARROW_NL, form('a/b'), form('b\\a'), 12))
        p = arrow_search(ARROW_NLP, form('a/b'), form('b\\a'), 12)
        check_arrow_proof(ARROW_NLP, p)

    def test_theoremhood_matches_gentzen_search_on_degree_two_grid(self):
        forms = forms_up_to(2, 'ab')
        for ext in (NL, L):
            x = to_arrow_ext(ext)
            for source in forms:
                for target in forms:
                    found = arrow_search(x, source, target) is not None
                    proved = prove(Sequent(ext, OneForm(source), target)) is not None
                    self.assertEqual(found, proved, f'{ext.name}: {source} -> {target}')

    def test_render(self):
        text = render_arrow_proof(apply_slash(Slash(a, b), one(b)))
        self.assertTrue(text.splitlines()[0].startswith('a/b.b -> a'))


class GentzenToArrowTests(SimpleTestCase):

    def test_translated_extension(self):
        x = to_arrow_ext(L)
        self.assertEqual(x.name, 'L')
        self.assertEqual(len(x.rules), 2)
        self.assertEqual(to_arrow_ext(NL).rules, ())

    def test_r_final(self):
        d = load_r_final()
        p = gentzen_to_arrow(d)
        check_arrow_proof(to_arrow_ext(L), p)
        check_arrow_proof(ARROW_L, p)
        self.assertEqual(p.source, delta_translation(d.seq.antecedent))
        self.assertEqual(p.target, form('S'))
        self.assertEqual(len(extension_obligations(p)), 1)

    def test_catalogue(self):
        for theorem in CATALOGUE:
            with self.subTest(theorem=theorem.name):
                s = instantiate(theorem)
                p = gentzen_to_arrow(prove(s))
                check_arrow_proof(to_arrow_ext(s.ext), p)
                self.assertEqual((p.source, p.target), (delta_translation(s.antecedent), s.succedent))


class ArrowToGentzenTests(SimpleTestCase):

    def test_application(self):
        d = arrow_to_gentzen(apply_slash(Slash(a, b), one(b)), NL)
        check_proof(d)
        self.assertEqual(head(d), Sequent(NL, OneForm(form('a/b.b')), a))
        self.assertFalse(is_cut_free(d))

    def test_round_trip_through_arrows(self):
        for theorem in CATALOGUE:
            with self.subTest(theorem=theorem.name):
                s = instantiate(theorem)
                d = arrow_to_gentzen(gentzen_to_arrow(prove(s)), s.ext)
                check_proof(d)
                self.assertEqual(head(d), Sequent(s.ext, OneForm(delta_translation(s.antecedent)), s.succedent))

    def test_r_final_round_trip(self):
        d = arrow_to_gentzen(gentzen_to_arrow(load_r_final()), L)
        check_proof(d)
        self.assertEqual(d.seq.succedent, form('S'))

    def test_unsatisfied_obligation(self):
        leaf = ext_leaf('assocL', form('a.(b.c)'), form('a.b.c'))
        with self.assertRaises(ExtensionObligationError) as ctx:
            arrow_to_gentzen(leaf, NL)
        self.assertEqual(ctx.exception.pairs, [(form('a.(b.c)'), form('a.b.c'))])

    def test_supplied_obligation(self):
        leaf = ext_leaf('assocL', form('a.(b.c)'), form('a.b.c'))
        supplied = prove(parse_sequent('a.(b.c) |- a.b.c', L))
        d = arrow_to_gentzen(leaf, L, proofs={(leaf.source, leaf.target): supplied})
        self.assertIs(d, supplied)


class NatDedTests(SimpleTestCase):

    def setUp(self):
        self.proof = natded_proof_from_dict(read_json(NATDED_COSA))

    def test_fixture_checks(self):
        check_natded_proof(self.proof)
        self.assertEqual(self.proof.root.rule, NatRule.SLASH_ELIM)

    def test_fixture_translates_to_r_final(self):
        d = natded_to_gentzen(self.proof)
        check_proof(d)
        self.assertEqual(d, load_r_final())

    def test_fixture_needs_associativity(self):
        data = read_json(NATDED_COSA)
        data['ext'] = 'NL'
        with self.assertRaises(ProofCheckError) as ctx:
            check_natded_proof(natded_proof_from_dict(data))
        self.assertEqual(ctx.exception.rule, NatRule.NAT_EXT)
        self.assertEqual(ctx.exception.tree_path, (1, 0))

    def test_backslash_elim(self):
        n = nat(NatRule.BACKSLASH_ELIM, '(b, b\\a)', 'a',
                nat(NatRule.NAT_AXIOM, 'b', 'b'),
                nat(NatRule.NAT_AXIOM, 'b\\a', 'b\\a'))
        d = natded_to_gentzen(NatDedProof(NL, n))
        self.assertEqual(d, prove(parse_sequent('(b, b\\a) |- a', NL)))

    def test_dot_elim(self):
        pair = nat(NatRule.DOT_INTRO, '(a, b)', 'a.b',
                   nat(NatRule.NAT_AXIOM, 'a', 'a'),
                   nat(NatRule.NAT_AXIOM, 'b', 'b'))
        n = nat(NatRule.DOT_ELIM, 'a.b', 'a.b', nat(NatRule.NAT_AXIOM, 'a.b', 'a.b'), pair)
        d = natded_to_gentzen(NatDedProof(NL, n))
        check_proof(d)
        self.assertEqual(d.rule, Rule.LEFT_DOT)

    def test_wrong_elimination_form(self):
        n = nat(NatRule.SLASH_ELIM, '(a/b, b)', 'a',
                nat(NatRule.NAT_AXIOM, 'a/b', 'a/b'),
                nat(NatRule.NAT_AXIOM, 'b', 'b'),
                form=c)
        with self.assertRaises(ProofCheckError):
            check_natded_proof(NatDedProof(NL, n))


class SerializerTests(SimpleTestCase):

    def test_arrow_document(self):
        p = gentzen_to_arrow(load_r_final())
        doc = arrow_document_from_dict({'ext': 'L', 'root': p.to_dict()})
        self.assertEqual(doc.root, p)
        self.assertIs(doc.ext, ARROW_L)

    def test_bad_arrow_kind(self):
        with self.assertRaises(serializers.ValidationError):
            arrow_proof_from_dict({'kind': 'Delta', 'source': 'a', 'target': 'a'})

    def test_arrow_extensions(self):
        self.assertIs(resolve_arrow_extension('NLP'), ARROW_NLP)
        with self.assertRaises(ExtensionError):
            resolve_arrow_extension('XL')

    def test_natded_paths(self):
        node = {'rule': 'NatExt', 'ante': 'a', 'succ': 'a', 'path': 'LX', 'children': []}
        with self.assertRaises(serializers.ValidationError):
            natded_proof_from_dict({'ext': 'NL', 'root': node})


class CommandTests(SimpleTestCase):

    def call(self, *args):
        out = StringIO()
        call_command(*args, stdout=out, stderr=StringIO())
        return out.getvalue()

    def assertExits(self, code, *args):
        with self.assertRaises(CommandError) as ctx:
            self.call(*args)
        self.assertEqual(ctx.exception.returncode, code)
        return ctx.exception

    def test_gentzen_to_arrow_and_back(self):
        out = self.call('translate', '--from', 'gentzen', '--to', 'arrow', str(R_FINAL))
        doc = arrow_document_from_dict(json.loads(out))
        check_arrow_proof(doc.ext, doc.root)
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'arrow.json')
            with open(path, 'w', encoding='utf-8') as f:
                f.write(out)
            back = self.call('translate', '--from', 'arrow', '--to', 'gentzen', path)
        d = dertree_from_dict(json.loads(back))
        check_proof(d)
        self.assertEqual(d.seq.ext, L)

    def test_natded_routes(self):
        out = self.call('translate', '--from', 'natded', '--to', 'gentzen', str(NATDED_COSA))
        self.assertEqual(json.loads(out), read_json(R_FINAL))
        out = self.call('translate', '--from', 'natded', '--to', 'arrow', str(NATDED_COSA))
        self.assertEqual(json.loads(out)['ext'], 'L')

    def test_translate_exit_codes(self):
        self.assertExits(2, 'translate', '--from', 'gentzen', '--to', 'gentzen', str(R_FINAL))
        with tempfile.TemporaryDirectory() as tmp:
            self.assertExits(2, 'translate', '--from', 'gentzen', '--to', 'arrow', os.path.join(tmp, 'none.json'))
            data = read_json(R_FINAL)
            data['der']['children'][1]['der']['rule'] = 'RightBackslash'
            path = os.path.join(tmp, 'bad.json')
            with open(path, 'w', encoding='utf-8') as f:
                json.dump(data, f)
            error = self.assertExits(1, 'translate', '--from', 'gentzen', '--to', 'arrow', path)
        self.assertIn('invalid: RightBackslash at 1', str(error))

    def test_unsatisfied_obligation_exits_1(self):
        leaf = ext_leaf('assocL', form('a.(b.c)'), form('a.b.c'))
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'leaf.json')
            with open(path, 'w', encoding='utf-8') as f:
                json.dump({'ext': 'L', 'root': leaf.to_dict()}, f)
            error = self.assertExits(1, 'translate', '--from', 'arrow', '--to', 'gentzen', '--ext', 'NL', path)
        self.assertIn('unsatisfied extension obligations', str(error))

    def test_arrow_to_gentzen_keeps_extension_from_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            ext_file = '@' + os.path.join(tmp, 'swap.json')
            with open(ext_file[1:], 'w', encoding='utf-8') as f:
                json.dump({'name': 'swap', 'rules': [{'name': 'swap', 'lhs': '(A, B)', 'rhs': '(B, A)'}]}, f)
            swap = resolve_extension(ext_file)
            root = gentzen_to_arrow(prove(parse_sequent('(b, a/b) |- a', swap)))
            path = os.path.join(tmp, 'arrow.json')
            for name, flags in ((ext_file, ()), ('swap', ('--ext', ext_file))):
                with open(path, 'w', encoding='utf-8') as f:
                    json.dump({'ext': name, 'root': root.to_dict()}, f)
                back = self.call('translate', '--from', 'arrow', '--to', 'gentzen', *flags, path)
                d = dertree_from_dict(json.loads(back), {'swap': swap})
                check_proof(d)
                self.assertEqual(d.seq, parse_sequent('(b, a/b) |- a', swap))
            self.assertExits(2, 'translate', '--from', 'arrow', '--to', 'gentzen', path)

    def test_agreement(self):
        out = self.call('agreement', '--ext', 'NL', '--ext', 'L', '--ext', 'NLP', '--sample', '40', '--seed', '3')
        self.assertIn('14 forms, 40 pairs per extension', out)
        self.assertIn('All decision procedures agree.', out)

    def test_agreement_csv(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'rows.csv')
            self.call('agreement', '--ext', 'NL', '--atoms', 'a', '--csv', path)
            with open(path, encoding='utf-8') as f:
                lines = f.read().splitlines()
        self.assertEqual(lines[0], 'ext,ante,succ,prove,oracle,arrow,translated_ok,agree')
        # one atom gives a, a/a, a\a and a.a
        self.assertEqual(len(lines), 1 + 16)

    def test_agreement_exit_codes(self):
        self.assertExits(2, 'agreement', '--degree', '0')
        self.assertExits(2, 'agreement', '--atoms', ',')
        self.assertExits(2, 'agreement', '--ext', 'XL')
