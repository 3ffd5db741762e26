import json
import os
import random
import tempfile
from io import StringIO
from unittest import mock

from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase
from rest_framework import serializers

from categories.exceptions import (
    ExtensionError,
    PreconditionError,
    ProofCheckError,
    SearchBudgetError,
)
from categories.forms import At, forms_up_to
from categories.terms import Comma, OneForm, Step
from categories.text import parse_category, parse_term

from .cli import parse_sequent, read_json
from .derived import (
    axiom_generalized,
    cut_at,
    cut_simpl,
    left_backslash_simpl,
    left_dot_at,
    left_slash_simpl,
    seq_ext_simpl,
    term_to_form,
)
from .dertree import (
    Der,
    Rule,
    Sequent,
    Unf,
    axiom,
    concl,
    degree_proof,
    exten,
    head,
    height,
    is_complete,
    is_cut_free,
    prems,
    rule_counts,
    size,
    subtrees,
)
from .extensions import (
    BUILTIN_EXTENSIONS,
    L,
    LP,
    NL,
    NLP,
    Extension,
    StructRule,
    add_extension,
    ext_relates,
    ext_relating_rule,
    ext_rewrites,
    extends_ext,
    extension_sub_ok,
)
from .inference import check_node, check_proof, expand_rule, expansions
from .relations import check_subformula_property, is_subproof, is_subproof_one, lift_extension, refines
from .render import latex_dertree, latex_sequent, render_dertree
from .search import ProofSearch, SearchOptions, oracle_provable, prove, prove_all
from .serializers import dertree_from_dict, extension_from_dict, resolve_extension
from .theorems import CATALOGUE, THEOREMS, instances, instantiate

SENTENCE = '(S/(S/np), (S/inf, inf/np)) |- S'
R_FINAL = settings.LAMBEK_DATA_DIR / 'r_final.json'

DROP = Extension('drop', (StructRule.from_text('drop', '(A, B)', 'A'),))


def seq(text, ext=NL):
    return parse_sequent(text, ext)


def load_r_final():
    return dertree_from_dict(read_json(R_FINAL))


def _set_ext(node, name):
    body = node.get('der') or node.get('unf')
    body['seq']['ext'] = name
    for child in body.get('children', []):
        _set_ext(child, name)


def _json_nodes(node):
    body = node['der']
    return [body] + [n for child in body['children'] for n in _json_nodes(child)]


class ExtensionTests(SimpleTestCase):

    def test_associativity_relates_rebracketings(self):
        self.assertEqual(ext_relating_rule(L, parse_term('(a, (b, c))'), parse_term('((a, b), c)')), 'assocL')
        self.assertEqual(ext_relating_rule(L, parse_term('((a, b), c)'), parse_term('(a, (b, c))')), 'assocR')
        self.assertIsNone(ext_relating_rule(NL, parse_term('(a, (b, c))'), parse_term('((a, b), c)')))
        self.assertTrue(ext_relates(NLP, parse_term('(a, b.c)'), parse_term('(b.c, a)')))
        self.assertFalse(ext_relates(L, parse_term('(a, b)'), parse_term('(b, a)')))

    def test_metavariables_bind_whole_subterms(self):
        self.assertEqual(
            ext_relating_rule(L, parse_term('((a, b), (c, d))'), parse_term('(((a, b), c), d)')), 'assocL')

    def test_rewrites(self):
        rewritten = [t for t, _, _ in ext_rewrites(NLP, parse_term('(a, b)'))]
        self.assertEqual(rewritten, [parse_term('(b, a)')])
        self.assertEqual(ext_rewrites(NL, parse_term('(a, b)')), [])

    def test_inclusion(self):
        self.assertTrue(extends_ext(NL, L))
        self.assertTrue(extends_ext(L, LP))
        self.assertTrue(extends_ext(NLP, LP))
        self.assertFalse(extends_ext(LP, L))
        self.assertFalse(extends_ext(L, NLP))

    def test_add_extension(self):
        self.assertEqual(add_extension(NLP, L, name='LP'), LP)
        self.assertEqual(len(add_extension(L, L).rules), 2)

    def test_sub_formula_condition(self):
        for ext in BUILTIN_EXTENSIONS.values():
            self.assertTrue(extension_sub_ok(ext), ext.name)
        self.assertFalse(extension_sub_ok(DROP))

    def test_metavariable_sorts_must_agree(self):
        with self.assertRaises(ExtensionError):
            StructRule.from_text('bad', '(A, B)', '(A/B, B)')


class CheckNodeTests(SimpleTestCase):

    def test_axiom(self):
        self.assertEqual(check_node(axiom(NL, At('a'))).rule, Rule.SEQ_AXIOM)
        with self.assertRaises(ProofCheckError):
            check_node(Der(seq('a |- b'), Rule.SEQ_AXIOM))

    def test_arity(self):
        with self.assertRaises(ProofCheckError) as ctx:
            check_node(Der(seq('a |- a/b'), Rule.RIGHT_SLASH))
        self.assertIn('expected 1 premises', ctx.exception.reason)

    def test_left_slash_witness(self):
        node = Der(seq('(c, (a/b, b)) |- c.a'), Rule.LEFT_SLASH,
                   (Unf(seq('(c, a) |- c.a')), Unf(seq('b |- b'))))
        witness = check_node(node)
        self.assertEqual(witness.path, (Step.RIGHT,))
        self.assertEqual((witness.a, witness.b), (At('a'), At('b')))

    def test_cut_children_order(self):
        node = Der(seq('((a/b, b), c) |- a.c'), Rule.CUT_RULE,
                   (Unf(seq('(a, c) |- a.c')), Unf(seq('(a/b, b) |- a'))))
        witness = check_node(node)
        self.assertEqual(witness.path, (Step.LEFT,))
        self.assertEqual(witness.a, At('a'))
        swapped = Der(node.seq, Rule.CUT_RULE, tuple(reversed(node.children)))
        with self.assertRaises(ProofCheckError):
            check_node(swapped)

    def test_cut_expansion_puts_main_premise_first(self):
        s = seq('(a/b, b) |- a')
        node = next(expand_rule(s, Rule.CUT_RULE, [At('c')]))
        self.assertEqual(node.children[0].seq, seq('c |- a'))
        self.assertEqual(node.children[1].seq, seq('(a/b, b) |- c'))
        check_node(node)

    def test_extension_mismatch(self):
        node = Der(seq('a.b |- a.b', L), Rule.LEFT_DOT, (Unf(seq('(a, b) |- a.b', NL)),))
        with self.assertRaises(ProofCheckError):
            check_node(node)

    def test_r_final_is_valid(self):
        witnesses = check_proof(load_r_final())
        self.assertEqual(len(witnesses), 9)
        self.assertEqual([w.ext_rule for w in witnesses if w.rule == Rule.SEQ_EXT], ['assocL'])

    def test_r_final_fails_without_associativity(self):
        data = read_json(R_FINAL)
        _set_ext(data, 'NL')
        with self.assertRaises(ProofCheckError) as ctx:
            check_proof(dertree_from_dict(data))
        self.assertEqual(ctx.exception.rule, Rule.SEQ_EXT)
        self.assertEqual(ctx.exception.tree_path, (1, 0))

    def test_mutated_rule_is_located(self):
        data = read_json(R_FINAL)
        data['der']['children'][1]['der']['rule'] = 'RightBackslash'
        with self.assertRaises(ProofCheckError) as ctx:
            check_proof(dertree_from_dict(data))
        self.assertEqual(ctx.exception.tree_path, (1,))
        self.assertIn('1', ctx.exception.describe())

    def test_every_single_rule_mutation_fails(self):
        data = read_json(R_FINAL)
        nodes = _json_nodes(data)
        self.assertEqual(len(nodes), 9)
        for node in nodes:
            original = node['rule']
            for rule in Rule:
                if rule == original:
                    continue
                node['rule'] = str(rule)
                with self.subTest(node=node['seq'], rule=rule):
                    with self.assertRaises(ProofCheckError):
                        check_proof(dertree_from_dict(data))
            node['rule'] = original

    def test_unfinished_leaf(self):
        d = Der(seq('(a/b, b) |- a'), Rule.LEFT_SLASH, (axiom(NL, At('a')), Unf(seq('b |- b'))))
        check_node(d)
        self.assertFalse(is_complete(d))
        with self.assertRaises(ProofCheckError) as ctx:
            check_proof(d)
        self.assertEqual(ctx.exception.tree_path, (1,))


class ExpansionTests(SimpleTestCase):

    def test_every_expansion_checks(self):
        for text in ['(a/b, b) |- a', '(b, b\\a) |- a.c', 'a.b |- (a.b)/c', '((a, b), c) |- a']:
            for ext in (NL, L, NLP):
                for node in expansions(seq(text, ext)):
                    check_node(node)

    def test_seq_ext_premises(self):
        premises = [n.children[0].seq.antecedent for n in expand_rule(seq('((a, b), c) |- a', L), Rule.SEQ_EXT)]
        self.assertEqual(premises, [parse_term('(a, (b, c))')])

    def test_cut_needs_candidates(self):
        s = seq('(a/b, b) |- a')
        self.assertEqual(list(expand_rule(s, Rule.CUT_RULE)), [])
        self.assertEqual(len(list(expand_rule(s, Rule.CUT_RULE, [At('a')]))), 3)
        self.assertEqual(len(expansions(s, allow_cut=True, cut_candidates=[At('a')])),
                         len(expansions(s)) + 3)


class RefinesTests(SimpleTestCase):

    def setUp(self):
        self.r_final = load_r_final()
        root = head(self.r_final)
        self.r0 = Unf(root)
        self.r1 = Der(root, Rule.LEFT_SLASH, (
            Unf(seq('S |- S', L)),
            Unf(seq('(S/inf, inf/np) |- S/np', L)),
        ))

    def test_r0_grows_into_r_final(self):
        self.assertTrue(refines(self.r0, self.r1))
        self.assertTrue(refines(self.r1, self.r_final))
        self.assertTrue(refines(self.r0, self.r_final))

    def test_refinement_is_one_way(self):
        self.assertFalse(refines(self.r_final, self.r1))
        self.assertFalse(refines(self.r1, self.r0))

    def test_invalid_growth(self):
        bad = Der(head(self.r_final), Rule.RIGHT_SLASH, (Unf(seq('S |- S', L)),))
        self.assertFalse(refines(self.r0, bad))


class SearchTests(SimpleTestCase):

    def test_axiom(self):
        proof = prove(seq('a |- a'))
        self.assertEqual(proof, axiom(NL, At('a')))

    def test_unprovable(self):
        self.assertIsNone(prove(seq('a |- b')))
        self.assertIsNone(prove(seq('(b, a/b) |- a')))

    def test_application(self):
        proof = prove(seq('(a/b, b) |- a'))
        self.assertEqual(proof.rule, Rule.LEFT_SLASH)
        check_proof(proof)
        self.assertTrue(is_cut_free(proof))

    def test_sentence_under_l_finds_the_hand_built_proof(self):
        proof = prove(seq(SENTENCE, L))
        self.assertEqual(proof, load_r_final())
        self.assertEqual(height(proof), 6)
        self.assertEqual(size(proof), 9)
        self.assertEqual(rule_counts(proof), {'LeftSlash': 3, 'SeqAxiom': 4, 'RightSlash': 1, 'SeqExt': 1})

    def test_sentence_under_nl(self):
        self.assertIsNone(prove(seq(SENTENCE, NL)))
        self.assertFalse(oracle_provable(seq(SENTENCE, NL), 12))

    def test_oracle(self):
        self.assertTrue(oracle_provable(seq(SENTENCE, L), 8))
        self.assertTrue(oracle_provable(seq('a |- a'), 1))
        self.assertFalse(oracle_provable(seq('(a/b, b) |- a'), 1))
        self.assertTrue(oracle_provable(seq('(a/b, b) |- a'), 2))

    def test_max_depth(self):
        self.assertIsNotNone(prove(seq('a |- a'), SearchOptions(max_depth=1)))
        self.assertIsNone(prove(seq('(a/b, b) |- a'), SearchOptions(max_depth=1)))

    def test_prove_all(self):
        proofs = prove_all(seq('a.b |- a.b'), SearchOptions(max_solutions=5))
        self.assertEqual([p.rule for p in proofs], [Rule.SEQ_AXIOM, Rule.LEFT_DOT])
        for p in proofs:
            check_proof(p)
        self.assertEqual(len(prove_all(seq('a.b |- a.b'))), 1)

    def test_budget(self):
        with self.assertRaises(SearchBudgetError):
            prove(seq('(a/b, b) |- a'), SearchOptions(expansion_budget=1))

    def test_loop_check(self):
        s = seq('((a, b), c) |- d', L)
        self.assertIsNone(prove(s))
        with self.assertRaises(SearchBudgetError):
            prove(s, SearchOptions(loop_check=False, expansion_budget=100))

    def test_other_rule_orders_and_failure_memo(self):
        order = tuple(reversed(SearchOptions().rule_order))
        self.assertIsNotNone(prove(seq('(a/b, b) |- a'), SearchOptions(rule_order=order)))
        self.assertIsNotNone(prove(seq('(a/b, b) |- a'), SearchOptions(memoize_failures=True)))

    def test_failure_memo_skips_failures_met_under_a_loop(self):
        options = SearchOptions(memoize_failures=True)
        search = ProofSearch(options)
        self.assertIsNone(next(search.solutions(seq('a |- b')), None))
        self.assertIn(seq('a |- b'), search.failed)

        search = ProofSearch(options)
        self.assertIsNone(next(search.solutions(seq('(a, b) |- c', NLP)), None))
        self.assertNotIn(seq('(a, b) |- c', NLP), search.failed)
        self.assertNotIn(seq('(b, a) |- c', NLP), search.failed)

    def test_failure_memo_keeps_search_complete(self):
        options = SearchOptions(memoize_failures=True)
        forms = forms_up_to(2, 'ab')
        for ext in (NL, L):
            for x in forms:
                for y in forms:
                    s = Sequent(ext, OneForm(x), y)
                    self.assertEqual(prove(s, options) is not None, oracle_provable(s, 10), str(s))

    def test_options_are_validated(self):
        with self.assertRaises(ValueError):
            SearchOptions(rule_order=(Rule.SEQ_AXIOM,))
        with self.assertRaises(ValueError):
            SearchOptions(max_solutions=0)
        with self.assertRaises(ValueError):
            SearchOptions(max_depth=0)

    def test_warns_when_extension_may_drop_formulas(self):
        with self.assertLogs('sequents.search', 'WARNING'):
            prove(seq('a |- a', DROP))

    def test_search_agrees_with_oracle(self):
        forms = forms_up_to(2, 'ab')
        for ext in (NL, L):
            for a in forms:
                for b in forms:
                    s = Sequent(ext, OneForm(a), b)
                    self.assertEqual(prove(s) is not None, oracle_provable(s, 10), str(s))

    def test_search_agrees_with_oracle_on_degree_three_sample(self):
        rng = random.Random(3)
        forms = forms_up_to(3, 'ab')
        for ext in (NL, L):
            for _ in range(150):
                s = Sequent(ext, OneForm(rng.choice(forms)), rng.choice(forms))
                self.assertEqual(prove(s) is not None, oracle_provable(s, 10), str(s))


class CatalogueTests(SimpleTestCase):

    def test_every_theorem_is_proved(self):
        for theorem in CATALOGUE:
            with self.subTest(theorem=theorem.name):
                s = instantiate(theorem)
                proof = prove(s)
                self.assertIsNotNone(proof)
                self.assertEqual(head(proof), s)
                check_proof(proof)
                self.assertTrue(is_cut_free(proof))
                for _, q in subtrees(proof):
                    self.assertTrue(check_subformula_property(q, proof))

    def test_some_theorems_need_their_extension(self):
        for name in ['composition', 'mainGeach', 'exchange', 'preposing']:
            with self.subTest(theorem=name):
                self.assertIsNone(prove(instantiate(THEOREMS[name]).with_ext(NL)))

    def test_instances(self):
        application = THEOREMS['application']
        self.assertEqual(application.variables, ['A', 'B'])
        found = list(instances(application, ['a', 'b']))
        self.assertEqual(len(found), 4)
        self.assertEqual(str(found[1]), 'a/b.b |- a')
        self.assertEqual(str(instantiate(application, {'A': parse_category('c/d')})), 'c/d/b.b |- c/d')


class DerivedRuleTests(SimpleTestCase):

    def test_axiom_generalized(self):
        d = axiom_generalized(NL, parse_term('(a, (b, c))'))
        self.assertEqual(d.seq.succedent, parse_category('a.(b.c)'))
        check_proof(d)

    def test_term_to_form(self):
        d = term_to_form(load_r_final())
        self.assertEqual(d.seq.antecedent, OneForm(parse_category('S/(S/np).(S/inf.inf/np)')))
        check_proof(d)

    def test_left_dot_needs_a_pair(self):
        with self.assertRaises(ValueError):
            left_dot_at(axiom(NL, At('a')), ())

    def test_left_simplified_rules(self):
        a, b = At('a'), At('b')
        self.assertEqual(left_slash_simpl(axiom(NL, b), axiom(NL, a)), prove(seq('(a/b, b) |- a')))
        d = left_backslash_simpl(axiom(NL, b), axiom(NL, a))
        self.assertEqual(str(d.seq), '(b, b\\a) |- a')

    def test_cut(self):
        d = cut_simpl(prove(seq('(a/b, b) |- a')), prove(seq('a |- b/(a\\b)')))
        self.assertEqual(str(d.seq), '(a/b, b) |- b/a\\b')
        check_proof(d)
        self.assertFalse(is_cut_free(d))
        self.assertEqual(degree_proof(d), 1)
        with self.assertRaises(ValueError):
            cut_at(axiom(NL, At('b')), prove(seq('(a/b, b) |- a')), (Step.LEFT,))

    def test_seq_ext(self):
        d = seq_ext_simpl(axiom_generalized(L, parse_term('(a, (b, c))')), parse_term('((a, b), c)'))
        self.assertEqual(str(d.seq), '((a, b), c) |- a.(b.c)')
        check_proof(d)
        with self.assertRaises(ProofCheckError):
            seq_ext_simpl(axiom_generalized(NL, parse_term('(a, (b, c))')), parse_term('((a, b), c)'))


class RelationTests(SimpleTestCase):

    def setUp(self):
        self.r_final = load_r_final()

    def test_subproofs(self):
        self.assertTrue(is_subproof(self.r_final, self.r_final))
        self.assertTrue(is_subproof(self.r_final.children[1].children[0], self.r_final))
        self.assertFalse(is_subproof(axiom(L, At('a')), self.r_final))
        self.assertTrue(is_subproof_one(self.r_final.children[1], self.r_final))
        self.assertFalse(is_subproof_one(self.r_final.children[1].children[0], self.r_final))

    def test_end_sequent_accessors(self):
        self.assertEqual(concl(self.r_final), At('S'))
        self.assertEqual(prems(self.r_final), parse_term('(S/(S/np), (S/inf, inf/np))'))
        self.assertEqual(exten(self.r_final), L)
        self.assertEqual(head(self.r_final).antecedent, prems(self.r_final))

    def test_sub_formula_preconditions(self):
        with self.assertRaises(PreconditionError) as ctx:
            check_subformula_property(axiom(L, At('a')), self.r_final)
        self.assertEqual(ctx.exception.precondition, 'is_subproof')

        d = axiom(DROP, At('a'))
        with self.assertRaises(PreconditionError) as ctx:
            check_subformula_property(d, d)
        self.assertEqual(ctx.exception.precondition, 'extension_sub_ok')

        cut = cut_simpl(prove(seq('(a/b, b) |- a')), axiom(NL, At('a')))
        with self.assertRaises(PreconditionError) as ctx:
            check_subformula_property(cut, cut)
        self.assertEqual(ctx.exception.precondition, 'is_cut_free')

    def test_lift_extension(self):
        lifted = lift_extension(prove(seq('(a/b, b) |- a')), L)
        self.assertEqual(lifted.seq.ext, L)
        check_proof(lifted)
        with self.assertRaises(ExtensionError):
            lift_extension(self.r_final, NL)


class SerializerTests(SimpleTestCase):

    def test_r_final_json(self):
        data = read_json(R_FINAL)
        self.assertEqual(dertree_from_dict(data).to_dict(), data)

    def test_node_needs_exactly_one_kind(self):
        with self.assertRaises(serializers.ValidationError):
            dertree_from_dict({})
        node = {'seq': {'ext': 'NL', 'ante': 'a', 'succ': 'a'}}
        with self.assertRaises(serializers.ValidationError):
            dertree_from_dict({'der': dict(node, rule='SeqAxiom'), 'unf': node})
        with self.assertRaises(serializers.ValidationError):
            dertree_from_dict({'der': dict(node, rule='Weakening')})

    def test_unfinished_node(self):
        d = dertree_from_dict({'unf': {'seq': {'ext': 'L', 'ante': '(a, b)', 'succ': 'a.b'}}})
        self.assertEqual(d, Unf(seq('(a, b) |- a.b', L)))

    def test_custom_extension(self):
        ext = extension_from_dict({'name': 'swap', 'rules': [{'name': 'swap', 'lhs': '(A, B)', 'rhs': '(B, A)'}]})
        self.assertFalse(ext.cond_cut)
        self.assertTrue(extends_ext(ext, NLP))
        with self.assertRaises(serializers.ValidationError):
            extension_from_dict({'name': 'twice', 'rules': [
                {'name': 'r', 'lhs': '(A, B)', 'rhs': '(B, A)'},
                {'name': 'r', 'lhs': '(A, B)', 'rhs': '(B, A)'},
            ]})

    def test_resolve_extension(self):
        self.assertIs(resolve_extension('L'), L)
        with self.assertRaises(ExtensionError):
            resolve_extension('XL')
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'swap.json')
            with open(path, 'w', encoding='utf-8') as f:
                json.dump({'name': 'swap', 'rules': [{'name': 'swap', 'lhs': '(A, B)', 'rhs': '(B, A)'}]}, f)
            ext = resolve_extension('@' + path)
            self.assertIsNotNone(prove(seq('(b, a/b) |- a', ext)))
            with self.assertRaises(ExtensionError):
                resolve_extension('@' + os.path.join(tmp, 'missing.json'))


class RenderTests(SimpleTestCase):

    def test_ascii_tree(self):
        text = render_dertree(load_r_final())
        lines = text.splitlines()
        self.assertEqual(lines[0], f'{SENTENCE}   [LeftSlash]')
        self.assertEqual(len(lines), 9)
        self.assertTrue(lines[1].startswith('|-- S |- S'))
        self.assertTrue(lines[2].startswith('`-- (S/inf, inf/np) |- S/np'))

    def test_unfinished_leaves_are_marked(self):
        text = render_dertree(Der(seq('a.b |- a.b'), Rule.LEFT_DOT, (Unf(seq('(a, b) |- a.b')),)))
        self.assertTrue(text.endswith('[?]'))

    def test_latex(self):
        text = latex_dertree(load_r_final())
        self.assertTrue(text.startswith('\\begin{prooftree}'))
        self.assertTrue(text.endswith('\\end{prooftree}'))
        self.assertEqual(text.count('\\BinaryInfC'), 3)
        self.assertEqual(text.count('\\AxiomC{}'), 4)
        self.assertEqual(text.count('\\UnaryInfC'), 6)

    def test_latex_escapes(self):
        self.assertEqual(latex_sequent(seq('(b, b\\a) |- a.c')),
                         '(b, b\\backslash a) \\vdash a\\cdot c')

    def test_latex_escapes_math_mode_specials(self):
        self.assertEqual(latex_sequent(seq('(x^1, $p) |- {n}/~q')),
                         '(x\\mbox{\\textasciicircum}1, \\$p) \\vdash \\{n\\}/\\mbox{\\textasciitilde}q')


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

    def test_prove(self):
        out = self.call('prove', '--ext', 'L', SENTENCE)
        self.assertIn('[SeqExt]', out)
        self.assertEqual(out.splitlines()[0], f'{SENTENCE}   [LeftSlash]')

    def test_prove_json(self):
        out = self.call('prove', '--format', 'json', '--sequent', 'a |- a')
        self.assertEqual(json.loads(out), {'der': {
            'seq': {'ext': 'NL', 'ante': 'a', 'succ': 'a'}, 'rule': 'SeqAxiom', 'children': []}})

    def test_prove_several_as_json_array(self):
        out = self.call('prove', '--format', 'json', '--max-solutions', '3', 'a.b |- a.b')
        self.assertEqual(len(json.loads(out)), 2)

    def test_prove_exit_codes(self):
        self.assertIn('no proof', str(self.assertExits(1, 'prove', 'a |- b')))
        self.assertExits(2, 'prove', 'a |-')
        self.assertExits(2, 'prove', '--ext', 'XL', 'a |- a')
        self.assertExits(2, 'prove')

    def test_deeply_nested_input_exits_2(self):
        nested = '(' * 5000 + 'a' + ')' * 5000
        error = self.assertExits(2, 'prove', f'{nested} |- a')
        self.assertIn('nested too deeply', str(error))
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'deep.json')
            with open(path, 'w', encoding='utf-8') as f:
                f.write('{"der": ' + '[' * 100_000 + ']' * 100_000 + '}')
            self.assertExits(2, 'check_proof', path)

    def test_oracle(self):
        self.assertIn('provable', self.call('oracle', '--ext', 'L', '--depth', '8', SENTENCE))
        self.assertExits(1, 'oracle', SENTENCE)

    def test_check_proof(self):
        self.assertIn('valid', self.call('check_proof', str(R_FINAL)))
        data = read_json(R_FINAL)
        _set_ext(data, 'NL')
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'bad.json')
            with open(path, 'w', encoding='utf-8') as f:
                json.dump(data, f)
            error = self.assertExits(1, 'check_proof', path)
            self.assertIn('SeqExt at 1/0', str(error))
            self.assertExits(2, 'check_proof', os.path.join(tmp, 'missing.json'))

    def test_render(self):
        out = self.call('render', '--format', 'latex', str(R_FINAL))
        self.assertIn('\\begin{prooftree}', out)
        self.assertExits(2, 'render', '--system', 'arrow', '--format', 'latex', str(R_FINAL))

    def test_corpus(self):
        out = self.call('corpus', '--group', 'NLP')
        self.assertIn('All 5 theorems proved.', out)
        self.assertIn('permutation', out)

    def test_corpus_fails_on_sub_formula_violation(self):
        target = 'sequents.management.commands.corpus.check_subformula_property'
        with mock.patch(target, return_value=False):
            error = self.assertExits(1, 'corpus', '--group', 'NLP')
        self.assertIn('sub-formula property fails: exchange', str(error))
        self.assertIn('permutation', str(error))
        self.assertNotIn('unproved', str(error))

    def test_corpus_csv(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'corpus.csv')
            self.call('corpus', '--group', 'general', '--csv', path)
            with open(path, encoding='utf-8') as f:
                header = f.readline().strip().split(',')
        self.assertEqual(header[:5], ['name', 'group', 'ext', 'sequent', 'proved'])


class FixtureTests(SimpleTestCase):

    def test_r_final_shape(self):
        d = load_r_final()
        self.assertIsInstance(d, Der)
        self.assertEqual(d.seq, seq(SENTENCE, L))
        self.assertEqual(d.children[1].children[0].seq.antecedent,
                         Comma(Comma(OneForm(parse_category('S/inf')), OneForm(parse_category('inf/np'))),
                               OneForm(At('np'))))
