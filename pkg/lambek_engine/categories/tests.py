import random

from django.test import SimpleTestCase

from .exceptions import CategorySyntaxError, InvalidPathError
from .forms import (
    At,
    Backslash,
    Dot,
    Slash,
    degree_formula,
    forms_up_to,
    is_sub_formula,
    render_category,
    sub_formulas,
)
from .replace import (
    comma_dot_successors,
    decide_replace_comma_dot,
    holds_replace,
    occurrences,
    replace_at,
    subterm_at,
    subterms,
)
from .terms import Comma, OneForm, Step, delta_translation, is_sub_form_term, leaves, render_term
from .text import parse_category, parse_sequent_text, parse_term

a, b, c = At('a'), At('b'), At('c')
S, np, inf = At('S'), At('np'), At('inf')
L, R = Step.LEFT, Step.RIGHT


def _random_form(rng, depth):
    if depth == 1 or rng.random() < 0.2:
        return At(rng.choice(['a', 'b', 'np', 'S']))
    connective = rng.choice([Slash, Backslash, Dot])
    return connective(_random_form(rng, depth - 1), _random_form(rng, depth - 1))


class ParseCategoryTests(SimpleTestCase):

    def test_lexicon_category(self):
        self.assertEqual(parse_category('S/(S/np)'), Slash(S, Slash(S, np)))

    def test_slash_is_left_associative(self):
        self.assertEqual(parse_category('a/b/c'), Slash(Slash(a, b), c))

    def test_backslash_is_right_associative(self):
        self.assertEqual(parse_category('a\\b\\c'), Backslash(a, Backslash(b, c)))

    def test_dot_binds_loosest(self):
        self.assertEqual(parse_category('a.b.c'), Dot(Dot(a, b), c))
        self.assertEqual(parse_category('a/b.c'), Dot(Slash(a, b), c))
        self.assertEqual(parse_category('a\\b/c'), Slash(Backslash(a, b), c))

    def test_whitespace_and_parentheses(self):
        self.assertEqual(parse_category(' ( a . b ) / c '), Slash(Dot(a, b), c))

    def test_render_uses_minimal_parentheses(self):
        for text in ['S/(S/np)', 'a/b/c', 'a\\b\\c', '(a\\b)\\c', 'a.b.c', 'a.(b.c)',
                     'a\\b/c', 'a/b\\c', '(a.b)/c', 'a\\(a.(b.c))']:
            with self.subTest(text=text):
                self.assertEqual(str(parse_category(text)), text)

    def test_parse_inverts_render(self):
        for f in forms_up_to(3, 'ab'):
            self.assertEqual(parse_category(render_category(f)), f)
        rng = random.Random(6)
        for _ in range(3000):
            f = _random_form(rng, 6)
            self.assertEqual(parse_category(render_category(f)), f, render_category(f))

    def test_syntax_errors(self):
        for text in ['S/', '', '(a/b', 'a b', '(a, b)', 'a.(b, c)', 'a)']:
            with self.subTest(text=text):
                with self.assertRaises(CategorySyntaxError):
                    parse_category(text)

    def test_error_reports_position(self):
        with self.assertRaises(CategorySyntaxError) as ctx:
            parse_category('S/')
        self.assertEqual(ctx.exception.position, 2)


class ParseTermTests(SimpleTestCase):

    def test_sentence_term(self):
        term = parse_term('(S/(S/np), (S/inf, inf/np))')
        self.assertEqual(term, Comma(
            OneForm(Slash(S, Slash(S, np))),
            Comma(OneForm(Slash(S, inf)), OneForm(Slash(inf, np))),
        ))
        self.assertEqual(render_term(term), '(S/(S/np), (S/inf, inf/np))')

    def test_comma_is_left_associative(self):
        self.assertEqual(parse_term('a, b, c'), Comma(Comma(OneForm(a), OneForm(b)), OneForm(c)))

    def test_single_form(self):
        self.assertEqual(parse_term('a/b'), OneForm(Slash(a, b)))

    def test_sequent_text(self):
        ante, succ = parse_sequent_text('(a/b, b) |- a')
        self.assertEqual(ante, Comma(OneForm(Slash(a, b)), OneForm(b)))
        self.assertEqual(succ, a)

    def test_sequent_without_turnstile(self):
        with self.assertRaises(CategorySyntaxError):
            parse_sequent_text('(a/b, b) a')


class FormTests(SimpleTestCase):

    def test_degree(self):
        self.assertEqual(degree_formula(a), 1)
        self.assertEqual(degree_formula(Slash(a, b)), 2)
        self.assertEqual(degree_formula(Dot(Slash(a, b), c)), 3)
        self.assertEqual(degree_formula(parse_category('S/(S/np)')), 3)

    def test_sub_formulas(self):
        f = parse_category('(a/b).a')
        self.assertEqual(sub_formulas(f), [f, Slash(a, b), a, b])
        self.assertTrue(is_sub_formula(b, f))
        self.assertFalse(is_sub_formula(c, f))
        self.assertTrue(is_sub_form_term(b, parse_term('(a, b/c)')))
        self.assertFalse(is_sub_form_term(At('d'), parse_term('(a, b/c)')))

    def test_forms_up_to(self):
        self.assertEqual(forms_up_to(1, 'ab'), [a, b])
        small = forms_up_to(2, 'ab')
        self.assertEqual(len(small), 14)
        larger = forms_up_to(3, 'ab')
        self.assertEqual(len(larger), 590)
        self.assertEqual(len(set(larger)), 590)
        self.assertTrue(all(degree_formula(f) <= 3 for f in larger))
        self.assertEqual(larger[:14], small)

    def test_sub_formula_is_transitive(self):
        small = forms_up_to(2, 'ab')
        for x in small:
            for y in small:
                for z in small:
                    if is_sub_formula(x, y) and is_sub_formula(y, z):
                        self.assertTrue(is_sub_formula(x, z))
        for z in forms_up_to(3, 'ab'):
            for y in sub_formulas(z):
                for x in sub_formulas(y):
                    self.assertTrue(is_sub_formula(x, z), f'{x} in {y} in {z}')


class ReplaceTests(SimpleTestCase):

    def setUp(self):
        self.term = parse_term('(a, (b, c))')

    def test_subterm_at(self):
        self.assertEqual(subterm_at(self.term, ()), self.term)
        self.assertEqual(subterm_at(self.term, (R, L)), OneForm(b))

    def test_invalid_path(self):
        with self.assertRaises(InvalidPathError) as ctx:
            subterm_at(self.term, (L, L))
        self.assertEqual(ctx.exception.step_index, 1)
        with self.assertRaises(InvalidPathError):
            replace_at(self.term, (L, R), OneForm(c))

    def test_replace_at(self):
        self.assertEqual(replace_at(self.term, (R,), OneForm(Dot(b, c))), parse_term('(a, b.c)'))
        self.assertEqual(replace_at(self.term, (), OneForm(a)), OneForm(a))

    def test_occurrences_preorder(self):
        term = parse_term('(a, (a, b))')
        self.assertEqual(occurrences(term, OneForm(a)), [(L,), (R, L)])

    def test_holds_replace(self):
        self.assertFalse(holds_replace(self.term, parse_term('(a, c)'), OneForm(b), OneForm(c)))
        self.assertTrue(holds_replace(self.term, parse_term('(a, (c, c))'), OneForm(b), OneForm(c)))
        self.assertTrue(holds_replace(self.term, parse_term('(a, b.c)'), parse_term('(b, c)'),
                                      OneForm(Dot(b, c))))

    def test_delta_translation(self):
        self.assertEqual(delta_translation(self.term), Dot(a, Dot(b, c)))
        self.assertEqual(leaves(self.term), [a, b, c])


def _random_term(rng, size):
    if size == 1:
        return OneForm(rng.choice([a, b, Dot(a, b)]))
    split = rng.randint(1, size - 1)
    return Comma(_random_term(rng, split), _random_term(rng, size - split))


def _shapes(n, same_atom):
    """Every term with n leaves; leaves are x0..x(n-1), or all a"""
    def build(lo, hi):
        if hi - lo == 1:
            return [OneForm(a if same_atom else At(f'x{lo}'))]
        return [Comma(left, right)
                for k in range(lo + 1, hi)
                for left in build(lo, k)
                for right in build(k, hi)]
    return build(0, n)


def _collapsings(t):
    """t itself and every term comma-dot reachable from it, by construction"""
    if isinstance(t, OneForm):
        return [t]
    found = [OneForm(delta_translation(t))]
    found += [Comma(left, right) for left in _collapsings(t.left) for right in _collapsings(t.right)]
    return found


def _comma_dot_closure(term):
    seen = {term}
    frontier = [term]
    while frontier:
        successors = [s for t in frontier for s in comma_dot_successors(t)]
        frontier = [s for s in successors if s not in seen]
        seen.update(frontier)
    return seen


class CommaDotTests(SimpleTestCase):

    def test_examples(self):
        t = parse_term('((a, b), c)')
        self.assertTrue(decide_replace_comma_dot(t, parse_term('(a.b, c)')))
        self.assertTrue(decide_replace_comma_dot(t, OneForm(parse_category('a.b.c'))))
        self.assertTrue(decide_replace_comma_dot(t, t))
        self.assertFalse(decide_replace_comma_dot(t, parse_term('(a, b.c)')))
        self.assertFalse(decide_replace_comma_dot(parse_term('(a.b, c)'), t))

    def test_successors(self):
        t = parse_term('((a, b), (a, b))')
        self.assertEqual(comma_dot_successors(t), [
            parse_term('(a.b, (a, b))'),
            parse_term('((a, b), a.b)'),
        ])

    def test_decision_matches_closure_on_all_pairs_up_to_five_leaves(self):
        universe = [t for n in range(1, 6) for shape in _shapes(n, same_atom=True) for t in _collapsings(shape)]
        self.assertEqual(len(universe), len(set(universe)))
        for t1 in universe:
            reachable = _comma_dot_closure(t1)
            for t2 in universe:
                self.assertEqual(decide_replace_comma_dot(t1, t2), t2 in reachable, f'{t1} => {t2}')

    def test_decision_matches_closure_up_to_six_leaves(self):
        # collapsing keeps delta_translation, so only terms sharing a shape can be related
        for same_atom in (False, True):
            for n in range(1, 7):
                for shape in _shapes(n, same_atom):
                    group = _collapsings(shape)
                    for t1 in group:
                        reachable = _comma_dot_closure(t1)
                        self.assertTrue(reachable <= set(group))
                        decided = {t2 for t2 in group if decide_replace_comma_dot(t1, t2)}
                        self.assertEqual(decided, reachable, str(t1))

    def test_full_collapse_is_reachable(self):
        for shape in _shapes(6, same_atom=False):
            self.assertTrue(decide_replace_comma_dot(shape, OneForm(delta_translation(shape))))

    def test_monotone_in_both_components(self):
        small = [t for n in range(1, 4) for shape in _shapes(n, same_atom=True) for t in _collapsings(shape)]
        for t1 in small:
            for t3 in small:
                for t2 in _comma_dot_closure(t1):
                    for t4 in _comma_dot_closure(t3):
                        self.assertTrue(decide_replace_comma_dot(Comma(t1, t3), Comma(t2, t4)))


def _replace_by_clauses(t1, t2, t3, t4):
    if t1 == t3 and t2 == t4:
        return True
    if isinstance(t1, Comma) and isinstance(t2, Comma):
        return ((_replace_by_clauses(t1.left, t2.left, t3, t4) and t1.right == t2.right)
                or (t1.left == t2.left and _replace_by_clauses(t1.right, t2.right, t3, t4)))
    return False


class ReplaceRelationTests(SimpleTestCase):

    def test_matches_inductive_clauses(self):
        rng = random.Random(7)
        for _ in range(10_000):
            t1 = _random_term(rng, rng.randint(1, 7))
            path, t3 = rng.choice(list(subterms(t1)))
            if rng.random() < 0.2:
                t3 = _random_term(rng, rng.randint(1, 2))
            t4 = _random_term(rng, rng.randint(1, 2))
            t2 = replace_at(t1, path, t4) if rng.random() < 0.7 else _random_term(rng, rng.randint(1, 7))
            self.assertEqual(holds_replace(t1, t2, t3, t4), _replace_by_clauses(t1, t2, t3, t4),
                             f'{t1} {t2} {t3} {t4}')


NEW_TERMS = [OneForm(At('z')), OneForm(At('x0')), Comma(OneForm(At('z')), OneForm(At('w')))]


def _terms_up_to_six_leaves():
    return [t for n in range(1, 7) for t in _shapes(n, same_atom=False)]


def _replacements(t, new_terms):
    """(path, old subterm, new term, result) for every position of t"""
    for path, old in subterms(t):
        for new in new_terms:
            yield path, old, new, replace_at(t, path, new)


class ReplaceDecompositionTests(SimpleTestCase):
    """The inversion and commutation lemmas of replace, over every path pair of every shape up to six leaves"""

    def test_single_form_inversion(self):
        forms = [a, b, Dot(a, b)]
        terms = [OneForm(f) for f in forms] + [parse_term('(a, b)'), parse_term('(a, (b, a))')]
        for f in forms:
            for x in forms:
                for gamma in terms:
                    for delta in terms:
                        if holds_replace(OneForm(f), gamma, OneForm(x), delta):
                            self.assertEqual((gamma, x), (delta, f))

    def test_comma_inversion(self):
        for t in _terms_up_to_six_leaves():
            if not isinstance(t, Comma):
                continue
            for path, old, new, result in _replacements(t, NEW_TERMS):
                if not isinstance(old, OneForm):
                    continue
                left = (isinstance(result, Comma) and result.right == t.right
                        and holds_replace(t.left, result.left, old, new))
                right = (isinstance(result, Comma) and result.left == t.left
                         and holds_replace(t.right, result.right, old, new))
                self.assertTrue(left or right, f'{t} at {path}')

    def test_double_replace(self):
        for gamma in _terms_up_to_six_leaves():
            for _, t1, t2, gamma1 in _replacements(gamma, NEW_TERMS[::2]):
                for q, leaf in subterms(gamma1):
                    if not isinstance(leaf, OneForm):
                        continue
                    for t3 in (OneForm(At('u')), Comma(OneForm(At('u')), OneForm(At('v')))):
                        gamma2 = replace_at(gamma1, q, t3)
                        outer = [replace_at(gamma, p, t3) for p in occurrences(gamma, leaf)]
                        inner = [replace_at(t2, p, t3) for p in occurrences(t2, leaf)]
                        self.assertTrue(
                            any(holds_replace(g, gamma2, t1, t2) for g in outer)
                            or any(holds_replace(gamma, gamma2, t1, g) for g in inner),
                            f'{gamma}: {t1} -> {t2}, then {leaf} at {q} -> {t3}')

    def test_same_position_replace(self):
        for t1 in _terms_up_to_six_leaves():
            for _, t3, t4, t2 in _replacements(t1, NEW_TERMS):
                for g in (OneForm(At('u')), Comma(OneForm(At('u')), OneForm(At('x0')))):
                    middles = [replace_at(t1, p, g) for p in occurrences(t1, t3)]
                    self.assertTrue(any(holds_replace(m, t2, g, t4) for m in middles), f'{t1}: {t3} -> {t4} via {g}')

    def test_nested_replace_is_transitive(self):
        for t1 in _terms_up_to_six_leaves():
            for p, t3 in subterms(t1):
                for _, t5, t6, t4 in _replacements(t3, NEW_TERMS):
                    t2 = replace_at(t1, p, t4)
                    self.assertTrue(holds_replace(t1, t2, t3, t4))
                    self.assertTrue(holds_replace(t1, t2, t5, t6), f'{t1}: {t5} -> {t6} inside {p}')
